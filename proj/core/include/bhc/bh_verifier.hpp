#pragma once

#include <cstdint>
#include <vector>

#include "bhc/special_functions.hpp"

namespace bhc {

// Dense m-linear form on R^N: coefficients[i1*N^{m-1} + ... + im] is the value
// on the basis tuple (e_{i1}, ..., e_{im}), row-major.  Construction enforces
// the exact-sup enumeration cap 2^{(m-1)N} <= 2^24.
struct MultilinearForm {
    int m;
    int N;
    std::vector<double> coefficients;

    // validates arity, dimension, count = N^m, finiteness, and the size cap;
    // throws std::domain_error / std::length_error accordingly
    static MultilinearForm make(int m, int N, std::vector<double> coefficients);
};

struct VerificationReport {
    double lhs;
    double sup;
    double ratio;     // lhs/sup, or 0 for the zero form
    double constant;
    bool satisfied;   // ratio <= constant + 1e-9
    bool certified;   // sup computed by exact enumeration
};

// l_{2m/(m+1)} norm of the coefficient tensor (compensated summation);
// m = 1 reduces to the l1 norm.
double lhs_mixed_norm(const MultilinearForm& form);

// Exact sup over the real polydisk [-1,1]^{N x m}.  Multilinearity puts the
// sup at sign vertices; sign vectors are enumerated for slots 1..m-1 and the
// last slot is resolved analytically (max of a linear form on [-1,1]^N is the
// l1 norm of its coefficients), cutting the cost from 2^{mN} to 2^{(m-1)N}.
double sup_norm_real_exact(const MultilinearForm& form);

// Throws std::domain_error unless constant > 0.
VerificationReport check_inequality(const MultilinearForm& form, double constant);

// The extremal bilinear form [[1,1],[1,-1]] attaining ratio sqrt(2).
MultilinearForm littlewood_witness();

enum class CoeffDistribution { UniformSigns, UniformInterval };

// Deterministic across platforms: mt19937_64 seeded with `seed`; UniformSigns
// maps the low output bit to {-1,+1}, UniformInterval maps the top 53 bits to
// [0,1) and stretches to [-1,1] (no std::uniform_real_distribution, whose
// mapping is implementation-defined).
MultilinearForm random_form(int m, int N, std::uint64_t seed, CoeffDistribution dist);

} // namespace bhc
