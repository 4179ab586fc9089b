#include "bhc/khinchin.hpp"

#include <cstdint>

namespace bhc {

namespace {
constexpr double ln_sqrt_pi = 0.5723649429247000870717136756765;
constexpr double ln_sqrt_pi_over_2 = ln_sqrt_pi - constants::ln_2;
constexpr double regime_tol = 1e-12;
} // namespace

double p0() {
    // f is strictly decreasing on the bracket: (p+1)/2 in [1.25, 1.45] stays
    // left of the minimum of Gamma at 1.4616...
    static const double root = find_root_bracketed(
        [](double p) { return log_gamma((p + 1.0) / 2.0) - ln_sqrt_pi_over_2; },
        1.5, 1.9, 1e-13);
    return root;
}

KhinchinRegime classify_regime(double p) {
    if (!std::isfinite(p) || !(p > 0.0))
        throw std::domain_error("classify_regime: requires finite p > 0");
    double threshold = p0();
    Regime r = (p < threshold - regime_tol) ? Regime::BelowP0 : Regime::AboveP0;
    return KhinchinRegime{p, r, threshold};
}

LogValue best_A(double p) {
    KhinchinRegime kr = classify_regime(p);
    if (kr.regime == Regime::BelowP0)
        return LogValue{(0.5 - 1.0 / p) * constants::ln_2};
    double ln_a = 0.5 * constants::ln_2 + (log_gamma((p + 1.0) / 2.0) - ln_sqrt_pi) / p;
    if (p > 2.0 && ln_a > 0.0)
        ln_a = 0.0;
    return LogValue{ln_a};
}

double rademacher_p_mean(std::span<const double> a, double p) {
    if (a.empty())
        throw std::domain_error("rademacher_p_mean: empty coefficient vector");
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::domain_error("rademacher_p_mean: requires finite p > 0");
    std::size_t n = a.size();
    if (n > 20)
        throw std::length_error("rademacher_p_mean: N > 20 (2^N enumeration)");
    for (double x : a)
        if (!std::isfinite(x))
            throw std::domain_error("rademacher_p_mean: non-finite coefficient");

    const std::uint64_t total = std::uint64_t{1} << n;
    CompensatedAccumulator acc;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            dot += (mask >> i) & 1 ? a[i] : -a[i];
        acc.add(std::pow(std::abs(dot), p));
    }
    double mean = acc.value() / static_cast<double>(total);
    return std::pow(mean, 1.0 / p);
}

KhinchinCheck verify_khinchin_lower(std::span<const double> a, double p) {
    double mean = rademacher_p_mean(a, p);
    CompensatedAccumulator sq;
    for (double x : a)
        sq.add(x * x);
    double l2 = std::sqrt(sq.value());
    if (l2 == 0.0)
        return KhinchinCheck{1.0, true};
    double ratio = mean / (best_A(p).value() * l2);
    return KhinchinCheck{ratio, ratio >= 1.0 - 1e-10};
}

} // namespace bhc
