#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace bhc {

// A strictly positive real stored as its natural logarithm.  Every constant
// in this library is a product of powers, so log space keeps all arithmetic
// exact-shaped (multiplication = addition) and immune to overflow.
struct LogValue {
    double ln = 0.0;

    static LogValue from_ln(double ln_value);
    // v must be finite and > 0
    static LogValue from_value(double v);

    // exp(ln); may overflow to +inf for |ln| beyond double range
    double value() const { return std::exp(ln); }

    friend LogValue operator*(LogValue a, LogValue b) { return {a.ln + b.ln}; }
    friend LogValue operator/(LogValue a, LogValue b) { return {a.ln - b.ln}; }
    friend bool operator==(LogValue a, LogValue b) { return a.ln == b.ln; }
};

inline LogValue pow(LogValue v, double e) { return {v.ln * e}; }

// Correctly rounded binary64 of >= 30-digit references.
namespace constants {
inline constexpr double euler_gamma = 0.5772156649015328606065120900824;
inline constexpr double sqrt_pi     = 1.772453850905516027298167483341;
inline constexpr double ln_pi       = 1.144729885849400174143427351353;
inline constexpr double ln_2        = 0.6931471805599453094172321214582;
}

// ln Gamma(x) for x > 0; relative error <= 1e-13 on [1, 2].
// Throws std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

// Neumaier variant of Kahan summation: error <= 2*eps*sum|terms|.
// Addition order is the insertion order, deterministically.
class CompensatedAccumulator {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Sums in the given order; throws std::domain_error on any non-finite term.
double compensated_sum(std::span<const double> terms);

// Bisection to bracket width <= tol; deterministic, 200-iteration cap.
// Throws std::invalid_argument when f(lo), f(hi) do not strictly straddle 0,
// std::runtime_error if the cap is hit, std::domain_error for bad tol/bounds.
template <class F>
double find_root_bracketed(F&& f, double lo, double hi, double tol) {
    if (!(tol > 0.0) || !std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw std::domain_error("find_root_bracketed: invalid bracket or tolerance");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw std::invalid_argument("find_root_bracketed: no sign change on bracket");
    for (int i = 0; i < 200; ++i) {
        double mid = lo + 0.5 * (hi - lo);
        if (hi - lo <= tol || mid <= lo || mid >= hi)
            return mid;
        double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    throw std::runtime_error("find_root_bracketed: iteration cap reached");
}

} // namespace bhc
