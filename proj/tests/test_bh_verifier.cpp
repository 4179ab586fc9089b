#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "bhc/bh_verifier.hpp"
#include "bhc/classical_constants.hpp"

using namespace bhc;

TEST_SUITE_BEGIN("bh_verifier");

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(MultilinearForm::make(2, 2, {1.0, 2.0, 3.0}),
                    std::domain_error); // count != N^m
    CHECK_THROWS_AS(MultilinearForm::make(0, 2, {}), std::domain_error);
    CHECK_THROWS_AS(MultilinearForm::make(2, 0, {}), std::domain_error);
    CHECK_THROWS_AS(MultilinearForm::make(1, 2, {1.0, std::nan("")}),
                    std::domain_error);
    // (m-1)N = 26 > 24
    CHECK_THROWS_AS(MultilinearForm::make(3, 13,
                                          std::vector<double>(13 * 13 * 13, 0.0)),
                    std::length_error);
    auto form = MultilinearForm::make(2, 3, std::vector<double>(9, 1.0));
    CHECK(form.m == 2);
    CHECK(form.N == 3);
}

TEST_CASE("mixed-norm left side") {
    // single nonzero coefficient: every p-norm is 1
    auto e11 = MultilinearForm::make(2, 2, {1.0, 0.0, 0.0, 0.0});
    CHECK(lhs_mixed_norm(e11) == doctest::Approx(1.0).epsilon(1e-15));

    // four unit coefficients at p = 4/3: 4^{3/4}
    CHECK(lhs_mixed_norm(littlewood_witness()) ==
          doctest::Approx(2.8284271247461903).epsilon(1e-15));

    // m = 1 is the l1 norm
    auto vec = MultilinearForm::make(1, 3, {3.0, 4.0, 0.0});
    CHECK(lhs_mixed_norm(vec) == doctest::Approx(7.0).epsilon(1e-15));
}

TEST_CASE("exact sup norm") {
    CHECK(sup_norm_real_exact(littlewood_witness()) ==
          doctest::Approx(2.0).epsilon(1e-15));
    auto e11 = MultilinearForm::make(2, 2, {1.0, 0.0, 0.0, 0.0});
    CHECK(sup_norm_real_exact(e11) == doctest::Approx(1.0).epsilon(1e-15));
    auto vec = MultilinearForm::make(1, 3, {3.0, 4.0, 0.0});
    CHECK(sup_norm_real_exact(vec) == doctest::Approx(7.0).epsilon(1e-15));
}

TEST_CASE("sup norm is absolutely homogeneous") {
    auto base = random_form(3, 4, 7, CoeffDistribution::UniformInterval);
    const double sup0 = sup_norm_real_exact(base);
    for (double t : {0.5, 3.25}) {
        auto scaled = base;
        for (double& c : scaled.coefficients) c *= t;
        CHECK(sup_norm_real_exact(scaled) ==
              doctest::Approx(t * sup0).epsilon(1e-12));
        CHECK(lhs_mixed_norm(scaled) ==
              doctest::Approx(t * lhs_mixed_norm(base)).epsilon(1e-12));
    }
}

TEST_CASE("sup norm is invariant under slot transposition") {
    const int N = 5;
    auto form = random_form(2, N, 11, CoeffDistribution::UniformInterval);
    auto transposed = form;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            transposed.coefficients[j * N + i] = form.coefficients[i * N + j];
    CHECK(sup_norm_real_exact(transposed) ==
          doctest::Approx(sup_norm_real_exact(form)).epsilon(1e-12));

    // trilinear: rotate the three slots
    const int M = 3;
    auto tri = random_form(3, M, 13, CoeffDistribution::UniformInterval);
    auto rotated = tri;
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j)
            for (int k = 0; k < M; ++k)
                rotated.coefficients[(j * M + k) * M + i] =
                    tri.coefficients[(i * M + j) * M + k];
    CHECK(sup_norm_real_exact(rotated) ==
          doctest::Approx(sup_norm_real_exact(tri)).epsilon(1e-12));
}

TEST_CASE("inequality check on the extremal form") {
    auto report = check_inequality(littlewood_witness(), 1.4142135623730951);
    CHECK(report.satisfied);
    CHECK(report.certified);
    CHECK(report.ratio == doctest::Approx(1.4142135623730951).epsilon(1e-12));
    CHECK(report.lhs == doctest::Approx(2.8284271247461903).epsilon(1e-14));
    CHECK(report.sup == doctest::Approx(2.0).epsilon(1e-14));

    // the same form violates constant 1
    auto bad = check_inequality(littlewood_witness(), 1.0);
    CHECK(!bad.satisfied);
    CHECK(bad.ratio > 1.0);
}

TEST_CASE("inequality check edge cases") {
    auto zero = MultilinearForm::make(2, 2, std::vector<double>(4, 0.0));
    auto report = check_inequality(zero, 1.0);
    CHECK(report.satisfied);
    CHECK(report.ratio == 0.0);
    CHECK_THROWS_AS(check_inequality(zero, 0.0), std::domain_error);
    CHECK_THROWS_AS(check_inequality(zero, -2.0), std::domain_error);
}

TEST_CASE("extremal witness layout") {
    auto w = littlewood_witness();
    CHECK(w.m == 2);
    CHECK(w.N == 2);
    CHECK(w.coefficients == std::vector<double>{1.0, 1.0, 1.0, -1.0});
}

TEST_CASE("random forms are deterministic in the seed") {
    auto a = random_form(3, 3, 42, CoeffDistribution::UniformInterval);
    auto b = random_form(3, 3, 42, CoeffDistribution::UniformInterval);
    CHECK(a.coefficients == b.coefficients);
    auto c = random_form(3, 3, 43, CoeffDistribution::UniformInterval);
    CHECK(a.coefficients != c.coefficients);
}

TEST_CASE("random form bit mapping is pinned") {
    // first four mt19937_64(42) outputs, mapped through (bits >> 11) * 2^-53
    // stretched to [-1, 1)
    auto f = random_form(2, 2, 42, CoeffDistribution::UniformInterval);
    CHECK(f.coefficients[0] == 0.51031106590907793);
    CHECK(f.coefficients[1] == 0.27806278770939485);
    CHECK(f.coefficients[2] == 0.5042904014960532);
    CHECK(f.coefficients[3] == -0.72745463273512589);

    auto s = random_form(2, 2, 42, CoeffDistribution::UniformSigns);
    CHECK(s.coefficients == std::vector<double>{-1.0, -1.0, -1.0, -1.0});
}

TEST_CASE("random form ranges") {
    auto signs = random_form(2, 4, 5, CoeffDistribution::UniformSigns);
    for (double c : signs.coefficients) CHECK(std::abs(c) == 1.0);
    auto vals = random_form(2, 4, 5, CoeffDistribution::UniformInterval);
    for (double c : vals.coefficients) {
        CHECK(c >= -1.0);
        CHECK(c < 1.0);
    }
    CHECK_THROWS_AS(random_form(3, 13, 5, CoeffDistribution::UniformSigns),
                    std::length_error);
}

TEST_CASE("mixed norm dominates the euclidean norm") {
    // p = 2m/(m+1) < 2, so ||a||_p >= ||a||_2
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto f = random_form(2, 5, seed, CoeffDistribution::UniformInterval);
        double sq = 0.0;
        for (double c : f.coefficients) sq += c * c;
        CHECK(lhs_mixed_norm(f) >= std::sqrt(sq) - 1e-12);
    }
}

TEST_CASE("random sweep satisfies the recursion constants") {
    struct Config {
        int m;
        int N;
    };
    static constexpr Config configs[] = {{2, 2}, {2, 6}, {3, 3}, {4, 3}};
    for (const Config& cfg : configs) {
        const double constant = c_real_recursive(cfg.m).value();
        double max_ratio = 0.0;
        for (std::uint64_t trial = 0; trial < 50; ++trial) {
            auto dist = trial % 2 == 0 ? CoeffDistribution::UniformSigns
                                       : CoeffDistribution::UniformInterval;
            auto f = random_form(cfg.m, cfg.N, 1000 * cfg.m + 10 * cfg.N + trial,
                                 dist);
            auto report = check_inequality(f, constant);
            CHECK(report.satisfied);
            max_ratio = std::max(max_ratio, report.ratio);
        }
        CHECK(max_ratio <= constant + 1e-9);
        CHECK(max_ratio > 0.0);
    }
}

TEST_SUITE_END();
