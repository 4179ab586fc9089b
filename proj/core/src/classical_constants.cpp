#include "bhc/classical_constants.hpp"

#include "bhc/khinchin.hpp"

namespace bhc {

namespace {

void require_even_gt_14(std::int64_t n, const char* who) {
    if (n <= 14 || n % 2 != 0)
        throw std::domain_error(std::string(who) + ": requires even n > 14");
}

// recursion step exponent p at index m
double step_p(std::int64_t m) {
    return static_cast<double>(2 * m - 4) / static_cast<double>(m - 1);
}

} // namespace

LogValue c_real_recursive(std::int64_t n) {
    if (n < 2)
        throw std::domain_error("c_real_recursive: requires n >= 2");
    double ln = (n % 2 == 0) ? 0.5 * constants::ln_2 : (5.0 / 6.0) * constants::ln_2;
    for (std::int64_t m = (n % 2 == 0) ? 4 : 5; m <= n; m += 2) {
        double ln_a = best_A(step_p(m)).ln;
        ln = 0.5 * constants::ln_2 +
             (static_cast<double>(m - 2) / static_cast<double>(m)) * (ln - 2.0 * ln_a);
    }
    return LogValue{ln};
}

std::optional<RationalExponent> c_real_recursive_exact(std::int64_t n) {
    if (n < 2)
        throw std::domain_error("c_real_recursive_exact: requires n >= 2");
    Rational e = (n % 2 == 0) ? Rational(1, 2) : Rational(5, 6);
    for (std::int64_t m = (n % 2 == 0) ? 4 : 5; m <= n; m += 2) {
        if (classify_regime(step_p(m)).regime != Regime::BelowP0)
            return std::nullopt; // A_p leaves the dyadic branch
        // A^2_p = 2^{1 - 2/p} with p = (2m-4)/(m-1)
        Rational a2_exp = Rational(1) - Rational(2 * (m - 1), 2 * m - 4);
        e = Rational(1, 2) + Rational(m - 2, m) * (e - a2_exp);
    }
    return e;
}

RationalExponent c_real_small_closed(std::int64_t n) {
    if (n < 2 || n > 14)
        throw std::domain_error("c_real_small_closed: requires 2 <= n <= 14");
    if (n % 2 == 0)
        return Rational(n * n + 6 * n - 8, 8 * n);
    return Rational(n * n + 6 * n - 7, 8 * n);
}

double ln_r_n(std::int64_t n) {
    require_even_gt_14(n, "r_n");
    std::int64_t a = (n + 14) * (n - 14);
    std::int64_t b = (n + 12) * (n - 14) - 24;
    CompensatedAccumulator acc;
    for (std::int64_t k = 7; k <= (n - 2) / 2; ++k) {
        double x = static_cast<double>(6 * k + 1) / static_cast<double>(4 * k + 2);
        acc.add(static_cast<double>(2 * k + 1) * log_gamma(x));
    }
    double nn = static_cast<double>(n);
    return static_cast<double>(a) / (8.0 * nn) * constants::ln_pi -
           static_cast<double>(b) / (4.0 * nn) * constants::ln_2 - acc.value() / nn;
}

double r_n(std::int64_t n) {
    return std::exp(ln_r_n(n));
}

LogValue c_real_large_closed(std::int64_t n) {
    require_even_gt_14(n, "c_real_large_closed");
    return LogValue{static_cast<double>(n + 2) / 8.0 * constants::ln_2 + ln_r_n(n)};
}

LogValue s_n_oracle(std::int64_t n) {
    require_even_gt_14(n, "s_n_oracle");
    CompensatedAccumulator acc;
    for (std::int64_t j = 1; j <= (n - 2) / 2; ++j) {
        double p = static_cast<double>(4 * j) / static_cast<double>(2 * j + 1);
        double exponent = static_cast<double>(2 * j) / static_cast<double>(n);
        acc.add(exponent * 2.0 * best_A(p).ln);
    }
    return LogValue{acc.value()};
}

double conjecture_target() {
    return std::exp(1.0 - 0.5 * constants::euler_gamma) / std::sqrt(2.0);
}

double conjecture_gap(std::int64_t n) {
    return r_n(n) - conjecture_target();
}

LogValue historical_bound(std::int64_t m, HistoricalKind kind) {
    if (m < 2)
        throw std::domain_error("historical_bound: requires m >= 2");
    double md = static_cast<double>(m);
    switch (kind) {
    case HistoricalKind::BH1931:
        return LogValue{(md + 1.0) / (2.0 * md) * std::log(md) +
                        (md - 1.0) / 2.0 * constants::ln_2};
    case HistoricalKind::KaijserDavie:
        return LogValue{(md - 1.0) / 2.0 * constants::ln_2};
    case HistoricalKind::Queffelec:
        return LogValue{(md - 1.0) * (constants::ln_2 - 0.5 * constants::ln_pi)};
    }
    throw std::domain_error("historical_bound: unknown kind");
}

} // namespace bhc
