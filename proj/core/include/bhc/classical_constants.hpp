#pragma once

#include <cstdint>
#include <optional>

#include "bhc/rational.hpp"
#include "bhc/special_functions.hpp"

namespace bhc {

// Exact reduced exponent of 2; valid for the recursion only while every
// Khinchin factor lies on the dyadic (below-p0) branch.
using RationalExponent = Rational;

enum class Method { Recursive, SmallClosed, LargeClosed };

struct ConstantTableRow {
    std::int64_t n;
    LogValue value;
    std::optional<double> r_n; // present iff n even and n > 14
    Method method;
};

// C_{R,n} by the recursion C_{R,n} = 2^{1/2} (C_{R,n-2} / A^2_{(2n-4)/(n-1)})^{(n-2)/n}
// from C_{R,2} = 2^{1/2}, C_{R,3} = 2^{5/6}; iterative, log space.
// Throws std::domain_error for n < 2.
LogValue c_real_recursive(std::int64_t n);

// Parallel exact path: tracks the exponent of 2 as a reduced rational while
// every A_p factor is dyadic (p below p0, decided by comparison, not by n);
// returns nullopt at the first non-dyadic factor (first hit: n = 16).
std::optional<RationalExponent> c_real_recursive_exact(std::int64_t n);

// Exact closed exponent for 2 <= n <= 14: (n^2+6n-8)/(8n) even, (n^2+6n-7)/(8n) odd.
RationalExponent c_real_small_closed(std::int64_t n);

// The O(1) correction factor in C_{R,n} = 2^{(n+2)/8} r_n for even n > 14:
//   ln r_n = ((n+14)(n-14)/(8n)) ln pi - (((n+12)(n-14)-24)/(4n)) ln 2
//            - (1/n) sum_{k=7}^{(n-2)/2} (2k+1) log_gamma((6k+1)/(4k+2))
// Exponent coefficients in integer arithmetic; the sum is compensated, in
// ascending k.  Throws std::domain_error for odd n or n <= 14.
double r_n(std::int64_t n);
double ln_r_n(std::int64_t n);

// 2^{(n+2)/8} r_n (even n > 14).
LogValue c_real_large_closed(std::int64_t n);

// The telescoped product s_n = prod_{j=1}^{(n-2)/2} (A^2_{4j/(2j+1)})^{2j/n};
// the proof identity gives r_n = 1/s_n.
LogValue s_n_oracle(std::int64_t n);

// e^{1 - gamma/2} / sqrt(2), evaluated from euler_gamma.
double conjecture_target();

// r_n(n) minus the conjectured limit.
double conjecture_gap(std::int64_t n);

enum class HistoricalKind { BH1931, KaijserDavie, Queffelec };

// m^{(m+1)/(2m)} 2^{(m-1)/2}  |  2^{(m-1)/2}  |  (2/sqrt(pi))^{m-1}
// Throws std::domain_error for m < 2.
LogValue historical_bound(std::int64_t m, HistoricalKind kind);

} // namespace bhc
