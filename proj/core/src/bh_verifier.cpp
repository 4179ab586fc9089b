#include "bhc/bh_verifier.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace bhc {

namespace {

constexpr std::int64_t enum_cap_log2 = 24;

std::int64_t checked_tensor_size(int m, int N) {
    std::int64_t count = 1;
    for (int i = 0; i < m; ++i) {
        if (count > (std::int64_t{1} << 26) / N)
            throw std::length_error("MultilinearForm: coefficient tensor too large");
        count *= N;
    }
    return count;
}

} // namespace

MultilinearForm MultilinearForm::make(int m, int N, std::vector<double> coefficients) {
    if (m < 1)
        throw std::domain_error("MultilinearForm: requires m >= 1");
    if (N < 1)
        throw std::domain_error("MultilinearForm: requires N >= 1");
    if (static_cast<std::int64_t>(m - 1) * N > enum_cap_log2)
        throw std::length_error("MultilinearForm: (m-1)*N > 24 (sup enumeration cost)");
    std::int64_t count = checked_tensor_size(m, N);
    if (static_cast<std::int64_t>(coefficients.size()) != count)
        throw std::domain_error("MultilinearForm: coefficient count != N^m");
    for (double c : coefficients)
        if (!std::isfinite(c))
            throw std::domain_error("MultilinearForm: non-finite coefficient");
    return MultilinearForm{m, N, std::move(coefficients)};
}

double lhs_mixed_norm(const MultilinearForm& form) {
    double p = 2.0 * form.m / (form.m + 1.0);
    CompensatedAccumulator acc;
    for (double c : form.coefficients)
        acc.add(std::pow(std::abs(c), p));
    return std::pow(acc.value(), 1.0 / p);
}

double sup_norm_real_exact(const MultilinearForm& form) {
    const int m = form.m;
    const int N = form.N;
    const std::vector<double>& c = form.coefficients;

    if (m == 1) {
        CompensatedAccumulator acc;
        for (double x : c)
            acc.add(std::abs(x));
        return acc.value();
    }

    // rows = multi-indices over slots 1..m-1; row r covers the contiguous
    // last-slot block c[r*N .. r*N+N-1]
    const std::int64_t rows = static_cast<std::int64_t>(c.size()) / N;
    // mask_r: one bit per (slot, index) pair chosen by row r; the sign of row
    // r under vertex v is the parity of popcount(v & mask_r)
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(rows));
    for (std::int64_t r = 0; r < rows; ++r) {
        std::uint64_t mask = 0;
        std::int64_t rest = r;
        for (int s = m - 2; s >= 0; --s) {
            int idx = static_cast<int>(rest % N);
            rest /= N;
            mask |= std::uint64_t{1} << (s * N + idx);
        }
        masks[static_cast<std::size_t>(r)] = mask;
    }

    const std::uint64_t vertices = std::uint64_t{1} << ((m - 1) * N);
    std::vector<double> g(static_cast<std::size_t>(N));
    double best = 0.0;
    for (std::uint64_t v = 0; v < vertices; ++v) {
        for (int j = 0; j < N; ++j)
            g[static_cast<std::size_t>(j)] = 0.0;
        for (std::int64_t r = 0; r < rows; ++r) {
            double sign = (std::popcount(v & masks[static_cast<std::size_t>(r)]) & 1)
                              ? -1.0
                              : 1.0;
            const double* block = c.data() + r * N;
            for (int j = 0; j < N; ++j)
                g[static_cast<std::size_t>(j)] += sign * block[j];
        }
        double value = 0.0;
        for (int j = 0; j < N; ++j)
            value += std::abs(g[static_cast<std::size_t>(j)]);
        if (value > best)
            best = value;
    }
    return best;
}

VerificationReport check_inequality(const MultilinearForm& form, double constant) {
    if (!(constant > 0.0) || !std::isfinite(constant))
        throw std::domain_error("check_inequality: requires finite constant > 0");
    double lhs = lhs_mixed_norm(form);
    double sup = sup_norm_real_exact(form);
    double ratio = sup > 0.0 ? lhs / sup : 0.0;
    bool satisfied = sup > 0.0 ? ratio <= constant + 1e-9 : true;
    return VerificationReport{lhs, sup, ratio, constant, satisfied, true};
}

MultilinearForm littlewood_witness() {
    return MultilinearForm::make(2, 2, {1.0, 1.0, 1.0, -1.0});
}

MultilinearForm random_form(int m, int N, std::uint64_t seed, CoeffDistribution dist) {
    std::int64_t count = checked_tensor_size(m, N);
    if (static_cast<std::int64_t>(m - 1) * N > enum_cap_log2)
        throw std::length_error("random_form: (m-1)*N > 24 (sup enumeration cost)");
    std::mt19937_64 gen(seed);
    std::vector<double> coeffs(static_cast<std::size_t>(count));
    for (double& c : coeffs) {
        std::uint64_t bits = gen();
        if (dist == CoeffDistribution::UniformSigns) {
            c = (bits & 1) ? 1.0 : -1.0;
        } else {
            double u = static_cast<double>(bits >> 11) * 0x1.0p-53; // [0,1)
            c = 2.0 * u - 1.0;
        }
    }
    return MultilinearForm::make(m, N, std::move(coeffs));
}

} // namespace bhc
