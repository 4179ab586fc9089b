#include "bhc/subexp_constants.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace bhc {

SubexpParams SubexpParams::real(double D) {
    return SubexpParams{D, LogValue{0.5 * constants::ln_2}, Field::Real};
}

SubexpParams SubexpParams::complex(double D) {
    // 2/sqrt(pi)
    return SubexpParams{D, LogValue{constants::ln_2 - 0.5 * constants::ln_pi},
                        Field::Complex};
}

namespace {

void require_params(const SubexpParams& params) {
    if (!(params.D > 0.0) || !std::isfinite(params.D))
        throw std::domain_error("SubexpParams: requires finite D > 0");
    if (!std::isfinite(params.C2.ln))
        throw std::domain_error("SubexpParams: C2 must be finite");
}

} // namespace

Decomposition decompose(std::int64_t n) {
    if (n < 3)
        throw std::domain_error("decompose: requires n >= 3");
    int k = std::bit_width(static_cast<std::uint64_t>(n - 1)); // smallest k with 2^k >= n
    std::int64_t l = (std::int64_t{1} << k) - n;
    Branch branch = (l <= (std::int64_t{1} << (k - 2))) ? Branch::Star : Branch::DoubleStar;
    return Decomposition{n, k, l, branch};
}

ClosedExponents closed_exponents(const Decomposition& d) {
    std::int64_t half = std::int64_t{1} << (d.k - 1);
    Rational star_e_d(d.k - 1);
    Rational star_e_c(d.n - d.l, d.n);
    Rational dstar_e_d(d.n * (d.k - 1) + half - 2 * d.l, d.n);
    Rational dstar_e_c(half, d.n);
    if (d.l == half / 2 && !(star_e_d == dstar_e_d && star_e_c == dstar_e_c)) {
        // boundary l = 2^{k-2} (n = 3*2^{k-2}): both branches must coincide
        throw std::logic_error("closed_exponents: branch boundary self-check failed");
    }
    if (d.branch == Branch::Star)
        return ClosedExponents{star_e_d, star_e_c};
    return ClosedExponents{dstar_e_d, dstar_e_c};
}

LogValue c_subexp_recursive(std::int64_t n, const SubexpParams& params) {
    if (n < 1)
        throw std::domain_error("c_subexp_recursive: requires n >= 1");
    require_params(params);
    const double ln_d = std::log(params.D);

    // dependency closure: each level needs at most two adjacent indices
    std::map<std::int64_t, double> memo;
    std::vector<std::int64_t> pending{n};
    while (!pending.empty()) {
        std::int64_t i = pending.back();
        pending.pop_back();
        if (i <= 2 || memo.count(i))
            continue;
        memo.emplace(i, 0.0);
        if (i % 2 == 0) {
            pending.push_back(i / 2);
        } else {
            pending.push_back(i / 2);
            pending.push_back(i / 2 + 1);
        }
    }
    memo[1] = 0.0;
    memo[2] = params.C2.ln;
    for (auto& [i, ln] : memo) {
        if (i <= 2)
            continue;
        if (i % 2 == 0) {
            ln = ln_d + memo[i / 2];
        } else {
            std::int64_t q = i / 2;
            double wq = static_cast<double>(2 * q) / static_cast<double>(4 * q + 2);
            double wq1 = static_cast<double>(2 * q + 2) / static_cast<double>(4 * q + 2);
            ln = ln_d + wq * memo[q] + wq1 * memo[q + 1];
        }
    }
    return LogValue{memo[n]};
}

LogValue c_subexp_closed(std::int64_t n, const SubexpParams& params) {
    if (n < 3)
        throw std::domain_error("c_subexp_closed: requires n >= 3");
    require_params(params);
    ClosedExponents e = closed_exponents(decompose(n));
    return LogValue{e.e_D.value() * std::log(params.D) + e.e_C.value() * params.C2.ln};
}

EquivalenceReport verify_equivalence(std::int64_t n_max, const SubexpParams& params,
                                     double tol) {
    if (n_max < 3)
        throw std::domain_error("verify_equivalence: requires n_max >= 3");
    if (!(tol > 0.0))
        throw std::domain_error("verify_equivalence: requires tol > 0");
    if (n_max > (std::int64_t{1} << 24))
        throw std::length_error("verify_equivalence: n_max > 2^24");
    require_params(params);

    const double ln_d = std::log(params.D);
    std::vector<double> ln_c(static_cast<std::size_t>(n_max) + 1, 0.0);
    ln_c[1] = 0.0;
    ln_c[2] = params.C2.ln;
    for (std::int64_t i = 3; i <= n_max; ++i) {
        if (i % 2 == 0) {
            ln_c[i] = ln_d + ln_c[i / 2];
        } else {
            std::int64_t q = i / 2;
            double wq = static_cast<double>(2 * q) / static_cast<double>(4 * q + 2);
            double wq1 = static_cast<double>(2 * q + 2) / static_cast<double>(4 * q + 2);
            ln_c[i] = ln_d + wq * ln_c[q] + wq1 * ln_c[q + 1];
        }
    }

    double worst = 0.0;
    std::int64_t arg = 3;
    for (std::int64_t i = 3; i <= n_max; ++i) {
        double delta = std::abs(c_subexp_closed(i, params).ln - ln_c[i]);
        if (delta > worst) {
            worst = delta;
            arg = i;
        }
    }
    return EquivalenceReport{worst, arg, tol, worst <= tol};
}

std::vector<GrowthRow> growth_profile(std::int64_t n_max, const SubexpParams& params) {
    if (n_max < 3)
        throw std::domain_error("growth_profile: requires n_max >= 3");
    require_params(params);
    std::vector<GrowthRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max - 2));
    for (std::int64_t n = 3; n <= n_max; ++n) {
        double ln_c = c_subexp_closed(n, params).ln;
        rows.push_back(GrowthRow{n, ln_c, ln_c / std::log(static_cast<double>(n))});
    }
    return rows;
}

} // namespace bhc
