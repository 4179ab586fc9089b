#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <ostream>

#include <json.hpp>

namespace bhc::cli {

Cell Cell::null() { return {}; }

Cell Cell::integer(std::int64_t v) {
    Cell c;
    c.kind = Kind::Int;
    c.int_value = v;
    return c;
}

Cell Cell::number(double v) {
    Cell c;
    c.kind = Kind::Num;
    c.num_value = v;
    return c;
}

Cell Cell::number_fixed(double v, int decimals) {
    Cell c = number(v);
    c.fixed_decimals = decimals;
    return c;
}

Cell Cell::big(double ln) {
    Cell c;
    c.kind = Kind::Big;
    c.ln_value = ln;
    return c;
}

Cell Cell::str(std::string v) {
    Cell c;
    c.kind = Kind::Str;
    c.str_value = std::move(v);
    return c;
}

Cell Cell::boolean(bool v) {
    Cell c;
    c.kind = Kind::Bool;
    c.bool_value = v;
    return c;
}

Cell value_cell(double ln) {
    if (ln < 709.78) return Cell::number(std::exp(ln)); // ln(DBL_MAX) = 709.7827
    return Cell::big(ln);
}

std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

double snap(double v, int precision) {
    return std::strtod(format_double(v, precision).c_str(), nullptr);
}

std::string format_from_ln(double ln, int precision) {
    double shift = std::floor(ln / std::numbers::ln10);
    double mantissa = std::exp(ln - shift * std::numbers::ln10);
    auto exponent = static_cast<long long>(shift);
    if (mantissa >= 10.0) {
        mantissa /= 10.0;
        ++exponent;
    }
    if (mantissa < 1.0) {
        mantissa *= 10.0;
        --exponent;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.*ge%+lld", precision, mantissa, exponent);
    return buf;
}

bool parse_number(const std::string& text, double& out) {
    auto parse_plain = [](const std::string& s, double& v) {
        if (s.empty()) return false;
        char* end = nullptr;
        v = std::strtod(s.c_str(), &end);
        return end == s.c_str() + s.size() && std::isfinite(v);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return parse_plain(text, out);
    double num = 0.0;
    double den = 0.0;
    if (!parse_plain(text.substr(0, slash), num) ||
        !parse_plain(text.substr(slash + 1), den) || den == 0.0)
        return false;
    out = num / den;
    return std::isfinite(out);
}

namespace {

std::string fixed_text(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string cell_text(const Cell& cell, int precision) {
    switch (cell.kind) {
        case Cell::Kind::Null: return "";
        case Cell::Kind::Int: return std::to_string(cell.int_value);
        case Cell::Kind::Num:
            if (cell.fixed_decimals >= 0)
                return fixed_text(cell.num_value, cell.fixed_decimals);
            return format_double(cell.num_value, precision);
        case Cell::Kind::Big: return format_from_ln(cell.ln_value, precision);
        case Cell::Kind::Str: return cell.str_value;
        case Cell::Kind::Bool: return cell.bool_value ? "true" : "false";
    }
    return "";
}

void render_table(const Table& table, int precision, std::ostream& os) {
    const std::size_t cols = table.columns.size();
    std::vector<std::vector<std::string>> cells;
    cells.reserve(table.rows.size());
    std::vector<std::size_t> width(cols);
    std::vector<bool> right(cols, true);
    for (std::size_t c = 0; c < cols; ++c) width[c] = table.columns[c].size();
    for (const auto& row : table.rows) {
        std::vector<std::string> texts(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            texts[c] = cell_text(row[c], precision);
            width[c] = std::max(width[c], texts[c].size());
            if (row[c].kind == Cell::Kind::Str || row[c].kind == Cell::Kind::Bool)
                right[c] = false;
        }
        cells.push_back(std::move(texts));
    }
    auto put = [&](const std::string& text, std::size_t c, bool last) {
        if (last && !right[c]) {
            os << text;
            return;
        }
        std::string padding(width[c] - text.size(), ' ');
        os << (right[c] ? padding + text : text + padding);
    };
    for (std::size_t c = 0; c < cols; ++c) {
        if (c > 0) os << "  ";
        put(table.columns[c], c, c + 1 == cols);
    }
    os << '\n';
    for (const auto& texts : cells) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c > 0) os << "  ";
            put(texts[c], c, c + 1 == cols);
        }
        os << '\n';
    }
}

void render_csv(const Table& table, int precision, std::ostream& os) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) os << ',';
        os << table.columns[c];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) os << ',';
            os << cell_text(row[c], precision);
        }
        os << '\n';
    }
}

void render_json(const Table& table, int precision, std::ostream& os) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            const Cell& cell = row[c];
            const std::string& key = table.columns[c];
            switch (cell.kind) {
                case Cell::Kind::Null: obj[key] = nullptr; break;
                case Cell::Kind::Int: obj[key] = cell.int_value; break;
                case Cell::Kind::Num:
                    // snap to the printed form so dump/parse/dump is stable
                    obj[key] =
                        cell.fixed_decimals >= 0
                            ? std::strtod(fixed_text(cell.num_value,
                                                     cell.fixed_decimals)
                                              .c_str(),
                                          nullptr)
                            : snap(cell.num_value, precision);
                    break;
                case Cell::Kind::Big:
                    obj[key] = format_from_ln(cell.ln_value, precision);
                    break;
                case Cell::Kind::Str: obj[key] = cell.str_value; break;
                case Cell::Kind::Bool: obj[key] = cell.bool_value; break;
            }
        }
        rows.push_back(std::move(obj));
    }
    os << rows.dump(2) << '\n';
}

} // namespace

bool emit(const Table& table, const OutputSpec& output) {
    std::ofstream file;
    if (!output.out_path.empty()) {
        file.open(output.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << output.out_path
                      << " for writing\n";
            return false;
        }
    }
    std::ostream& os = output.out_path.empty() ? std::cout : file;
    switch (output.format) {
        case Format::Table: render_table(table, output.precision, os); break;
        case Format::Csv: render_csv(table, output.precision, os); break;
        case Format::Json: render_json(table, output.precision, os); break;
    }
    os.flush();
    return os.good();
}

} // namespace bhc::cli
