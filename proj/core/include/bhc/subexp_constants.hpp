#pragma once

#include <cstdint>
#include <vector>

#include "bhc/rational.hpp"
#include "bhc/special_functions.hpp"

namespace bhc {

enum class Branch { Star, DoubleStar };

// n = 2^k - l with k minimal such that 2^k >= n and 0 <= l < 2^{k-1};
// Star iff l <= 2^{k-2}.
struct Decomposition {
    std::int64_t n;
    int k;
    std::int64_t l;
    Branch branch;
};

enum class Field { Real, Complex };

// D-parameterized sequence with C_1 = 1 and C_2 as given; defaults are
// sqrt(2) (real) and 2/sqrt(pi) (complex), both overridable.
struct SubexpParams {
    double D = 1.44;
    LogValue C2;
    Field field = Field::Real;

    static SubexpParams real(double D = 1.44);
    static SubexpParams complex(double D = 1.44);
};

// Throws std::domain_error for n < 3.
Decomposition decompose(std::int64_t n);

// Closed-formula exponents (e_D, e_C) as exact reduced rationals:
//   Star:       e_D = k-1,                      e_C = (n-l)/n
//   DoubleStar: e_D = (n(k-1) + 2^{k-1} - 2l)/n, e_C = 2^{k-1}/n
struct ClosedExponents {
    Rational e_D;
    Rational e_C;
};
ClosedExponents closed_exponents(const Decomposition& d);

// C_n from C_{2n} = D C_n and C_{2n+1} = D C_n^{2n/(4n+2)} C_{n+1}^{(2n+2)/(4n+2)},
// evaluated bottom-up in log space with a per-call memo over the O(log n)
// indices the recursion touches.  Throws std::domain_error for n < 1 or D <= 0.
LogValue c_subexp_recursive(std::int64_t n, const SubexpParams& params);

// Branch formula ln C_n = e_D ln D + e_C ln C_2; n >= 3 (use the recursion or
// the base constants for n in {1, 2}).
LogValue c_subexp_closed(std::int64_t n, const SubexpParams& params);

struct EquivalenceReport {
    double max_abs_delta_ln;
    std::int64_t argmax_n;
    double tol;
    bool passed;
};

// max over 3 <= n <= n_max of |ln closed - ln recursive|, single O(n_max)
// bottom-up sweep.  Throws std::domain_error for n_max < 3 or tol <= 0,
// std::length_error for n_max > 2^24 (dense array cost).
EquivalenceReport verify_equivalence(std::int64_t n_max, const SubexpParams& params,
                                     double tol);

struct GrowthRow {
    std::int64_t n;
    double ln_c;
    double ln_c_over_ln_n;
};

// Closed-formula profile for all n in [3, n_max].
std::vector<GrowthRow> growth_profile(std::int64_t n_max, const SubexpParams& params);

} // namespace bhc
