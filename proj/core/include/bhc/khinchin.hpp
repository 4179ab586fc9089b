#pragma once

#include <span>
#include <vector>

#include "bhc/special_functions.hpp"

namespace bhc {

enum class Regime { BelowP0, AboveP0 };

// p = p0 within 1e-12 resolves to AboveP0; both branches agree there.
struct KhinchinRegime {
    double p;
    Regime regime;
    double p0;
};

// Unique root of log_gamma((p+1)/2) = ln(sqrt(pi)/2) in (1, 2); cached.
double p0();

KhinchinRegime classify_regime(double p);

// Best lower Khinchin constant A_p:
//   p below p0:  ln A_p = (1/2 - 1/p) ln 2
//   p >= p0:     ln A_p = (1/2) ln 2 + (1/p)(log_gamma((p+1)/2) - ln sqrt(pi))
// For p > 2 the branch expression exceeds 1 and is no longer a valid lower
// constant (a single-coordinate vector has p-mean exactly its l2 norm), so
// the result is capped at 1 there.  Throws std::domain_error for p <= 0.
LogValue best_A(double p);

// (2^-N sum over all sign vectors of |sum_i eps_i a_i|^p)^(1/p), exact up to
// summation rounding; the uniform average over sign vertices is the exact
// value of the Rademacher integral.  Throws std::length_error for N > 20,
// std::domain_error for empty a or p <= 0.
double rademacher_p_mean(std::span<const double> a, double p);

struct KhinchinCheck {
    double ratio;
    bool ok;
};

// ratio = rademacher_p_mean(a, p) / (A_p * ||a||_2); ok = ratio >= 1 - 1e-10.
// An all-zero vector reports ratio 1 (0 <= 0 holds with equality).
KhinchinCheck verify_khinchin_lower(std::span<const double> a, double p);

} // namespace bhc
