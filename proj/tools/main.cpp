#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bhc/bh_verifier.hpp"
#include "bhc/classical_constants.hpp"
#include "bhc/khinchin.hpp"
#include "bhc/special_functions.hpp"
#include "bhc/subexp_constants.hpp"
#include "output.hpp"

namespace {

using bhc::cli::Cell;
using bhc::cli::OutputSpec;
using bhc::cli::Table;

struct CommonOpts {
    std::string format = "table";
    int precision = 6;
    std::string out_path;
    std::uint64_t seed = 7;
};

void add_output_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->envname("BHC_FORMAT");
    cmd->add_option("--precision", opts.precision, "significant digits")
        ->check(CLI::Range(1, 17));
    cmd->add_option("--out", opts.out_path, "write to this file instead of stdout");
    cmd->add_option("--seed", opts.seed, "PRNG seed for randomized suites");
}

OutputSpec make_output(const CommonOpts& opts) {
    OutputSpec output;
    output.format = opts.format == "csv"    ? bhc::cli::Format::Csv
                    : opts.format == "json" ? bhc::cli::Format::Json
                                            : bhc::cli::Format::Table;
    output.precision = opts.precision;
    output.out_path = opts.out_path;
    return output;
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return 2;
}

bool parse_int(const std::string& text, std::int64_t& out) {
    if (text.empty()) return false;
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(text.c_str(), &end, 10);
    if (errno != 0 || end != text.c_str() + text.size()) return false;
    out = v;
    return true;
}

constexpr std::size_t max_rows = 4096;

// "5", "2,4,8", or inclusive "2..14"
std::optional<std::vector<std::int64_t>> parse_n_list(const std::string& text,
                                                      std::string& error) {
    std::vector<std::int64_t> values;
    auto range_pos = text.find("..");
    if (range_pos != std::string::npos) {
        std::int64_t lo = 0;
        std::int64_t hi = 0;
        if (!parse_int(text.substr(0, range_pos), lo) ||
            !parse_int(text.substr(range_pos + 2), hi)) {
            error = "cannot parse range '" + text + "'";
            return std::nullopt;
        }
        if (lo > hi) {
            error = "empty range '" + text + "'";
            return std::nullopt;
        }
        if (hi - lo + 1 > static_cast<std::int64_t>(max_rows)) {
            error = "a range lists at most 4096 values";
            return std::nullopt;
        }
        for (std::int64_t n = lo; n <= hi; ++n) values.push_back(n);
        return values;
    }
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        std::string piece = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        std::int64_t v = 0;
        if (!parse_int(piece, v)) {
            error = "cannot parse integer '" + piece + "'";
            return std::nullopt;
        }
        values.push_back(v);
        if (values.size() > max_rows) {
            error = "a list names at most 4096 values";
            return std::nullopt;
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

std::optional<bhc::SubexpParams> build_subexp_params(const std::string& d_text,
                                                     const std::string& c2_text,
                                                     const std::string& field_name,
                                                     std::string& error) {
    double d = 0.0;
    if (!bhc::cli::parse_number(d_text, d) || d <= 0.0) {
        error = "--d must be a positive number";
        return std::nullopt;
    }
    auto params = field_name == "complex" ? bhc::SubexpParams::complex(d)
                                          : bhc::SubexpParams::real(d);
    if (!c2_text.empty()) {
        double c2 = 0.0;
        if (!bhc::cli::parse_number(c2_text, c2) || c2 <= 0.0) {
            error = "--c2 must be a positive number";
            return std::nullopt;
        }
        params.C2 = bhc::LogValue::from_value(c2);
    }
    return params;
}

const char* branch_text(bhc::Branch branch) {
    return branch == bhc::Branch::Star ? "*" : "**";
}

int run_constants(const std::string& kind, const std::string& n_text,
                  const std::string& d_text, const std::string& c2_text,
                  const std::string& field_name, const OutputSpec& output) {
    std::string error;
    auto ns = parse_n_list(n_text, error);
    if (!ns) return usage_error(error);

    std::int64_t min_n = 2;
    std::int64_t max_n = 65536;
    if (kind == "subexp-closed") {
        min_n = 3;
        max_n = std::int64_t{1} << 24;
    } else if (kind == "subexp-recursive") {
        min_n = 1;
        max_n = std::int64_t{1} << 24;
    }
    for (std::int64_t n : *ns)
        if (n < min_n || n > max_n)
            return usage_error("n = " + std::to_string(n) + " outside [" +
                               std::to_string(min_n) + ", " +
                               std::to_string(max_n) + "] for kind " + kind);

    Table table;
    if (kind == "real-recursive" || kind == "real-closed") {
        table.columns = {"n", "value", "ln_value", "r_n", "exponent_of_2",
                         "method"};
        for (std::int64_t n : *ns) {
            bhc::LogValue value{};
            const char* method = nullptr;
            if (kind == "real-recursive") {
                value = bhc::c_real_recursive(n);
                method = "recursive";
            } else if (n <= 14) {
                value = bhc::LogValue::from_ln(
                    bhc::c_real_small_closed(n).value() * bhc::constants::ln_2);
                method = "small-closed";
            } else if (n % 2 == 0) {
                value = bhc::c_real_large_closed(n);
                method = "large-closed";
            } else {
                value = bhc::c_real_recursive(n); // no closed form, odd n > 14
                method = "recursive";
            }
            Cell rn_cell = Cell::null();
            if (n > 14 && n % 2 == 0)
                rn_cell = Cell::number(std::exp(
                    value.ln -
                    static_cast<double>(n + 2) / 8.0 * bhc::constants::ln_2));
            Cell exponent_cell = Cell::null();
            if (auto exact = bhc::c_real_recursive_exact(n))
                exponent_cell = Cell::str(exact->str());
            table.rows.push_back({Cell::integer(n), bhc::cli::value_cell(value.ln),
                                  Cell::number(value.ln), rn_cell, exponent_cell,
                                  Cell::str(method)});
        }
    } else if (kind == "subexp-closed" || kind == "subexp-recursive") {
        auto params = build_subexp_params(d_text, c2_text, field_name, error);
        if (!params) return usage_error(error);
        if (kind == "subexp-closed") {
            table.columns = {"n", "value", "ln_value", "e_D", "e_C", "branch"};
            for (std::int64_t n : *ns) {
                auto decomposition = bhc::decompose(n);
                auto exponents = bhc::closed_exponents(decomposition);
                auto value = bhc::c_subexp_closed(n, *params);
                table.rows.push_back(
                    {Cell::integer(n), bhc::cli::value_cell(value.ln),
                     Cell::number(value.ln), Cell::str(exponents.e_D.str()),
                     Cell::str(exponents.e_C.str()),
                     Cell::str(branch_text(decomposition.branch))});
            }
        } else {
            table.columns = {"n", "value", "ln_value"};
            for (std::int64_t n : *ns) {
                auto value = bhc::c_subexp_recursive(n, *params);
                table.rows.push_back({Cell::integer(n),
                                      bhc::cli::value_cell(value.ln),
                                      Cell::number(value.ln)});
            }
        }
    } else { // historical
        table.columns = {"m", "bh1931", "kaijser_davie", "queffelec"};
        for (std::int64_t m : *ns)
            table.rows.push_back(
                {Cell::integer(m),
                 bhc::cli::value_cell(
                     bhc::historical_bound(m, bhc::HistoricalKind::BH1931).ln),
                 bhc::cli::value_cell(
                     bhc::historical_bound(m, bhc::HistoricalKind::KaijserDavie)
                         .ln),
                 bhc::cli::value_cell(
                     bhc::historical_bound(m, bhc::HistoricalKind::Queffelec)
                         .ln)});
    }
    return bhc::cli::emit(table, output) ? 0 : 2;
}

int run_rn_table(const std::string& n_text, bool table_digits,
                 const OutputSpec& output) {
    std::vector<std::int64_t> ns = {30, 50, 100, 250, 500, 1000, 10000, 100000};
    if (!n_text.empty()) {
        std::string error;
        auto parsed = parse_n_list(n_text, error);
        if (!parsed) return usage_error(error);
        ns = std::move(*parsed);
    }
    for (std::int64_t n : ns) {
        if (n <= 14 || n % 2 != 0)
            return usage_error("n = " + std::to_string(n) +
                               " is invalid: r_n needs even n > 14");
        if (n > (std::int64_t{1} << 20))
            return usage_error("n = " + std::to_string(n) + " above 1048576");
    }
    Table table;
    table.columns = {"n", "r_n"};
    for (std::int64_t n : ns) {
        double v = bhc::r_n(n);
        Cell cell = table_digits
                        ? Cell::number_fixed(v, n < 1000 ? 3 : n < 10000 ? 4 : 5)
                        : Cell::number(v);
        table.rows.push_back({Cell::integer(n), cell});
    }
    return bhc::cli::emit(table, output) ? 0 : 2;
}

int run_decompose(std::int64_t n, const OutputSpec& output) {
    if (n < 3) return usage_error("decompose needs n >= 3");
    if (n > (std::int64_t{1} << 48))
        return usage_error("n above 2^48");
    auto decomposition = bhc::decompose(n);
    auto exponents = bhc::closed_exponents(decomposition);
    Table table;
    table.columns = {"n", "k", "l", "branch", "e_D", "e_C"};
    table.rows.push_back({Cell::integer(n), Cell::integer(decomposition.k),
                          Cell::integer(decomposition.l),
                          Cell::str(branch_text(decomposition.branch)),
                          Cell::str(exponents.e_D.str()),
                          Cell::str(exponents.e_C.str())});
    return bhc::cli::emit(table, output) ? 0 : 2;
}

int run_verify_closed_vs_recursive(std::int64_t n_max, const std::string& d_text,
                                   const std::string& c2_text,
                                   const std::string& field_name,
                                   const std::string& tol_text,
                                   const OutputSpec& output) {
    if (n_max < 0) n_max = 65536;
    std::string error;
    auto params = build_subexp_params(d_text, c2_text, field_name, error);
    if (!params) return usage_error(error);
    double tol = 0.0;
    if (!bhc::cli::parse_number(tol_text, tol) || tol <= 0.0)
        return usage_error("--tol must be a positive number");
    bhc::EquivalenceReport report{};
    try {
        report = bhc::verify_equivalence(n_max, *params, tol);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    Table table;
    table.columns = {"suite", "n_max", "d",   "c2",       "field",
                     "tol",   "max_abs_delta_ln", "argmax_n", "passed"};
    table.rows.push_back(
        {Cell::str("closed-vs-recursive"), Cell::integer(n_max),
         Cell::number(params->D), Cell::number(params->C2.value()),
         Cell::str(field_name), Cell::number(report.tol),
         Cell::number(report.max_abs_delta_ln), Cell::integer(report.argmax_n),
         Cell::boolean(report.passed)});
    if (!bhc::cli::emit(table, output)) return 2;
    return report.passed ? 0 : 1;
}

int run_verify_small_n_exact(const OutputSpec& output) {
    Table table;
    table.columns = {"n", "recursion_exponent", "closed_exponent", "match"};
    bool all = true;
    for (std::int64_t n = 2; n <= 14; ++n) {
        auto exact = bhc::c_real_recursive_exact(n);
        auto closed = bhc::c_real_small_closed(n);
        bool match = exact.has_value() && *exact == closed;
        all = all && match;
        table.rows.push_back(
            {Cell::integer(n),
             exact ? Cell::str(exact->str()) : Cell::null(),
             Cell::str(closed.str()), Cell::boolean(match)});
    }
    if (!bhc::cli::emit(table, output)) return 2;
    return all ? 0 : 1;
}

int run_verify_rn_oracle(std::int64_t n_max, const std::string& tol_text,
                         const OutputSpec& output) {
    if (n_max < 0) n_max = 4096;
    if (n_max < 16) return usage_error("rn-oracle needs --n-max >= 16");
    if (n_max > 16384)
        return usage_error("rn-oracle caps --n-max at 16384 (quadratic sweep)");
    double tol = 0.0;
    if (!bhc::cli::parse_number(tol_text, tol) || tol <= 0.0)
        return usage_error("--tol must be a positive number");
    double max_identity = 0.0;
    std::int64_t argmax_identity = 16;
    double max_closed = 0.0;
    std::int64_t argmax_closed = 16;
    for (std::int64_t n = 16; n <= n_max; n += 2) {
        double identity = std::abs(bhc::ln_r_n(n) + bhc::s_n_oracle(n).ln);
        if (identity > max_identity) {
            max_identity = identity;
            argmax_identity = n;
        }
        double closed = std::abs(bhc::c_real_large_closed(n).ln -
                                 bhc::c_real_recursive(n).ln);
        if (closed > max_closed) {
            max_closed = closed;
            argmax_closed = n;
        }
    }
    bool passed = max_identity <= tol && max_closed <= tol;
    Table table;
    table.columns = {"suite",           "n_max",
                     "tol",             "max_identity_delta_ln",
                     "argmax_identity", "max_closed_delta_ln",
                     "argmax_closed",   "passed"};
    table.rows.push_back({Cell::str("rn-oracle"), Cell::integer(n_max),
                          Cell::number(tol), Cell::number(max_identity),
                          Cell::integer(argmax_identity), Cell::number(max_closed),
                          Cell::integer(argmax_closed), Cell::boolean(passed)});
    if (!bhc::cli::emit(table, output)) return 2;
    return passed ? 0 : 1;
}

int run_verify_khinchin(int trials, std::uint64_t seed, const OutputSpec& output) {
    std::mt19937_64 rng(seed);
    static constexpr double exponents[] = {1.0,           4.0 / 3.0, 8.0 / 5.0,
                                           28.0 / 15.0, 2.0,       3.0};
    int violations = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < trials; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<double> v(static_cast<std::size_t>(n));
        for (double& x : v) x = 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
        for (double p : exponents) {
            auto check = bhc::verify_khinchin_lower(v, p);
            min_ratio = std::min(min_ratio, check.ratio);
            if (!check.ok) ++violations;
        }
    }
    bool passed = violations == 0;
    Table table;
    table.columns = {"suite",      "trials",    "seed", "exponents",
                     "violations", "min_ratio", "passed"};
    table.rows.push_back(
        {Cell::str("khinchin"), Cell::integer(trials),
         Cell::integer(static_cast<std::int64_t>(seed)),
         Cell::str("1,4/3,8/5,28/15,2,3"), Cell::integer(violations),
         Cell::number(min_ratio), Cell::boolean(passed)});
    if (!bhc::cli::emit(table, output)) return 2;
    return passed ? 0 : 1;
}

int run_verify_inequality(int m, int trials, std::uint64_t seed,
                          const OutputSpec& output) {
    static const std::map<int, std::vector<int>> dims = {
        {2, {2, 4, 8}}, {3, {3, 4}}, {4, {3}}};
    auto it = dims.find(m);
    if (it == dims.end())
        return usage_error("--m must be 2, 3, or 4 for the inequality suite");
    const double constant = bhc::c_real_recursive(m).value();
    double max_ratio = 0.0;
    int violations = 0;
    std::string dim_list;
    for (int n : it->second) {
        if (!dim_list.empty()) dim_list += ',';
        dim_list += std::to_string(n);
        for (int trial = 0; trial < trials; ++trial) {
            auto dist = trial % 2 == 0 ? bhc::CoeffDistribution::UniformSigns
                                       : bhc::CoeffDistribution::UniformInterval;
            std::uint64_t form_seed = seed * 1000003ULL +
                                      static_cast<std::uint64_t>(n) * 100000ULL +
                                      static_cast<std::uint64_t>(trial);
            auto form = bhc::random_form(m, n, form_seed, dist);
            auto report = bhc::check_inequality(form, constant);
            max_ratio = std::max(max_ratio, report.ratio);
            if (!report.satisfied) ++violations;
        }
    }
    bool passed = violations == 0;
    Table table;
    table.columns = {"suite",    "m",         "dimensions", "trials", "seed",
                     "constant", "max_ratio", "violations", "passed"};
    table.rows.push_back({Cell::str("inequality"), Cell::integer(m),
                          Cell::str(dim_list), Cell::integer(trials),
                          Cell::integer(static_cast<std::int64_t>(seed)),
                          Cell::number(constant), Cell::number(max_ratio),
                          Cell::integer(violations), Cell::boolean(passed)});
    if (!bhc::cli::emit(table, output)) return 2;
    return passed ? 0 : 1;
}

int run_check_form(const std::string& file_path, const std::string& witness_name,
                   const std::string& constant_text,
                   const std::string& source_name, const OutputSpec& output) {
    if (file_path.empty() && witness_name.empty())
        return usage_error("one of --file or --witness is required");
    const bool explicit_constant = !constant_text.empty();
    std::string source = source_name;
    if (source.empty()) source = explicit_constant ? "explicit" : "real-recursive";
    if (source == "explicit" && !explicit_constant)
        return usage_error("--constant-source explicit requires --constant");
    if (source == "real-recursive" && explicit_constant)
        return usage_error("--constant conflicts with --constant-source "
                           "real-recursive");

    bhc::MultilinearForm form{0, 0, {}};
    if (!witness_name.empty()) {
        form = bhc::littlewood_witness();
    } else {
        std::ifstream in(file_path, std::ios::binary);
        if (!in) return usage_error("cannot open " + file_path);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            return usage_error(std::string("malformed form file: ") + e.what());
        }
        if (!doc.is_object() || !doc.contains("m") || !doc.contains("N") ||
            !doc.contains("coefficients") || !doc["m"].is_number_integer() ||
            !doc["N"].is_number_integer() || !doc["coefficients"].is_array())
            return usage_error("form file needs integer m, integer N, and a "
                               "numeric array coefficients");
        auto m64 = doc["m"].get<std::int64_t>();
        auto n64 = doc["N"].get<std::int64_t>();
        if (m64 < 1 || m64 > 32 || n64 < 1 || n64 > (std::int64_t{1} << 24))
            return usage_error("m or N out of range");
        std::vector<double> coefficients;
        coefficients.reserve(doc["coefficients"].size());
        for (const auto& item : doc["coefficients"]) {
            if (!item.is_number())
                return usage_error("coefficients must all be numeric");
            coefficients.push_back(item.get<double>());
        }
        try {
            form = bhc::MultilinearForm::make(static_cast<int>(m64),
                                              static_cast<int>(n64),
                                              std::move(coefficients));
        } catch (const std::exception& e) {
            return usage_error(e.what());
        }
    }

    double constant = 0.0;
    if (source == "explicit") {
        if (!bhc::cli::parse_number(constant_text, constant) || constant <= 0.0)
            return usage_error("--constant must be a positive number");
    } else {
        constant = bhc::c_real_recursive(form.m).value();
    }
    auto report = bhc::check_inequality(form, constant);
    Table table;
    table.columns = {"lhs",             "sup",       "ratio",    "constant",
                     "constant_source", "satisfied", "certified"};
    table.rows.push_back({Cell::number(report.lhs), Cell::number(report.sup),
                          Cell::number(report.ratio), Cell::number(report.constant),
                          Cell::str(source), Cell::boolean(report.satisfied),
                          Cell::boolean(report.certified)});
    if (!bhc::cli::emit(table, output)) return 2;
    return report.satisfied ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohnenblust-Hille constant workbench: compute, tabulate, and "
                 "cross-check the inequality's constants"};
    app.require_subcommand(1);

    CommonOpts common;

    auto* constants_cmd =
        app.add_subcommand("constants", "tabulate a constant sequence over n");
    std::string kind;
    std::string n_text;
    std::string d_text = "1.44";
    std::string c2_text;
    std::string field_name = "real";
    constants_cmd->add_option("--kind", kind, "which sequence")
        ->required()
        ->check(CLI::IsMember({"real-recursive", "real-closed", "subexp-closed",
                               "subexp-recursive", "historical"}));
    constants_cmd
        ->add_option("--n", n_text, "single n, comma list, or inclusive a..b")
        ->required();
    constants_cmd->add_option("--d", d_text,
                              "doubling factor D, subexp kinds (accepts p/q)");
    constants_cmd->add_option("--c2", c2_text,
                              "override C_2, subexp kinds (accepts p/q)");
    constants_cmd->add_option("--field", field_name, "scalar field, subexp kinds")
        ->check(CLI::IsMember({"real", "complex"}));
    add_output_options(constants_cmd, common);

    auto* rn_cmd =
        app.add_subcommand("rn-table", "print the r_n correction-factor table");
    std::string rn_n_text;
    bool table_digits = false;
    rn_cmd->add_option("--n", rn_n_text,
                       "even n > 14, comma list or a..b; default "
                       "30,50,100,250,500,1000,10000,100000");
    rn_cmd->add_flag("--table-digits", table_digits,
                     "round r_n to the reference table's digit counts "
                     "(3 below 1000, 4 at 1000, 5 above)");
    add_output_options(rn_cmd, common);

    auto* decompose_cmd = app.add_subcommand(
        "decompose", "write n = 2^k - l and the closed-formula exponents");
    std::int64_t decompose_n = 0;
    decompose_cmd->add_option("n", decompose_n, "index to decompose, n >= 3")
        ->required();
    add_output_options(decompose_cmd, common);

    auto* verify_cmd = app.add_subcommand(
        "verify", "run a verification suite; exit 1 on any failed check");
    std::string suite;
    std::int64_t n_max = -1;
    std::string v_d_text = "1.44";
    std::string v_c2_text;
    std::string v_field = "real";
    std::string tol_text = "1e-9";
    int trials = 500;
    int ineq_m = 2;
    verify_cmd->add_option("--suite", suite, "which suite")
        ->required()
        ->check(CLI::IsMember({"closed-vs-recursive", "small-n-exact",
                               "rn-oracle", "khinchin", "inequality"}));
    verify_cmd->add_option(
        "--n-max", n_max,
        "sweep bound; closed-vs-recursive defaults to 65536, rn-oracle to 4096");
    verify_cmd->add_option("--d", v_d_text,
                           "doubling factor D, closed-vs-recursive (accepts p/q)");
    verify_cmd->add_option("--c2", v_c2_text,
                           "override C_2, closed-vs-recursive (accepts p/q)");
    verify_cmd->add_option("--field", v_field, "scalar field, closed-vs-recursive")
        ->check(CLI::IsMember({"real", "complex"}));
    verify_cmd->add_option("--tol", tol_text,
                           "comparison tolerance in ln scale (accepts p/q)");
    verify_cmd->add_option("--trials", trials, "random draws per configuration")
        ->check(CLI::Range(1, 100000));
    verify_cmd->add_option("--m", ineq_m, "arity for the inequality suite");
    add_output_options(verify_cmd, common);

    auto* check_cmd =
        app.add_subcommand("check-form", "evaluate one form against a constant");
    std::string file_path;
    std::string witness_name;
    std::string constant_text;
    std::string source_name;
    auto* file_opt =
        check_cmd
            ->add_option("--file", file_path,
                         "JSON object with m, N, and coefficients")
            ->check(CLI::ExistingFile);
    auto* witness_opt = check_cmd
                            ->add_option("--witness", witness_name,
                                         "built-in extremal form")
                            ->check(CLI::IsMember({"littlewood"}));
    file_opt->excludes(witness_opt);
    witness_opt->excludes(file_opt);
    check_cmd->add_option("--constant", constant_text,
                          "explicit constant (accepts p/q)");
    check_cmd
        ->add_option("--constant-source", source_name,
                     "explicit or real-recursive (default real-recursive, or "
                     "explicit when --constant is given)")
        ->check(CLI::IsMember({"real-recursive", "explicit"}));
    add_output_options(check_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto output = make_output(common);
    try {
        if (constants_cmd->parsed())
            return run_constants(kind, n_text, d_text, c2_text, field_name,
                                 output);
        if (rn_cmd->parsed()) return run_rn_table(rn_n_text, table_digits, output);
        if (decompose_cmd->parsed()) return run_decompose(decompose_n, output);
        if (verify_cmd->parsed()) {
            if (suite == "closed-vs-recursive")
                return run_verify_closed_vs_recursive(n_max, v_d_text, v_c2_text,
                                                      v_field, tol_text, output);
            if (suite == "small-n-exact") return run_verify_small_n_exact(output);
            if (suite == "rn-oracle")
                return run_verify_rn_oracle(n_max, tol_text, output);
            if (suite == "khinchin")
                return run_verify_khinchin(trials, common.seed, output);
            return run_verify_inequality(ineq_m, trials, common.seed, output);
        }
        if (check_cmd->parsed())
            return run_check_form(file_path, witness_name, constant_text,
                                  source_name, output);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return 2;
}
