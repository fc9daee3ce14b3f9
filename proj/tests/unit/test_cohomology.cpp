#include "doctest.h"

#include <numeric>

#include "exseq/cohomology.hpp"

using namespace exseq;

namespace {

std::vector<VarietySpec> specs() {
    return {VarietySpec::toric(1, 1, {-2}), VarietySpec::toric(2, 2, {0, -2}), VarietySpec::toric(4, 3, {0, -1, -1}),
            VarietySpec::cotangent(2), VarietySpec::cotangent(3), VarietySpec::tangent_dual(3)};
}

}  // namespace

TEST_CASE("binomials") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(2, 3) == 0);
    CHECK(binom(-1, 0) == 0);
    CHECK(binom_poly(-1, 2) == 1);
    CHECK(binom_poly(-3, 2) == 6);
    CHECK(binom_poly(4, 0) == 1);
}

TEST_CASE("structure sheaf") {
    for (const auto& s : specs()) {
        CohomologyVector h = h_dims(s, {0, 0});
        CHECK(h.size() == std::size_t(dim_variety(s) + 1));
        CHECK(h[0] == 1);
        CHECK(std::accumulate(h.begin() + 1, h.end(), std::int64_t(0)) == 0);
    }
}

TEST_CASE("Serre duality") {
    for (const auto& s : specs()) {
        Bundle k = canonical_bundle(s);
        int n = dim_variety(s);
        for (int i = -7; i <= 7; ++i)
            for (int j = -7; j <= 7; ++j) {
                CohomologyVector a = h_dims(s, {i, j}), b = h_dims(s, k - Bundle{i, j});
                for (int q = 0; q <= n; ++q) REQUIRE(a[q] == b[n - q]);
            }
    }
}

TEST_CASE("product case is Kunneth") {
    VarietySpec s = VarietySpec::toric(2, 1, {0});
    // h^0(O(1,1)) on P^2 x P^1
    CHECK(h_dims(s, {1, 1})[0] == 6);
    // h^3(O(-3,-2)) = h^2(O_P2(-3)) h^1(O_P1(-2))
    CHECK(h_dims(s, {-3, -2})[3] == 1);
}

TEST_CASE("toric horizontal strip is immaculate") {
    for (const auto& s : {VarietySpec::toric(1, 1, {-2}), VarietySpec::toric(2, 2, {0, -2}), VarietySpec::toric(4, 3, {0, -1, -1})})
        for (int j = -s.v; j <= -1; ++j)
            for (int i = -10; i <= 10; ++i) CHECK(is_immaculate(s, {i, j}));
}

TEST_CASE("flag variety of P^2") {
    VarietySpec s = VarietySpec::cotangent(2);
    CHECK(h_dims(s, {1, 0})[0] == 3);
    CHECK(h_dims(s, {1, 1})[0] == 8);
    CHECK(h_dims(s, {2, -1})[0] == 0);
    CHECK(is_immaculate(s, {-1, 0}));
    CHECK(is_immaculate(s, {0, -1}));
    CHECK(is_immaculate(s, {1, -3}));
    CHECK_FALSE(is_immaculate(s, {1, -2}));
    CHECK_FALSE(is_immaculate(s, {-2, -2}));
}

TEST_CASE("cotangent formula agrees with the oracle") {
    for (int l = 2; l <= 3; ++l) {
        VarietySpec s = VarietySpec::cotangent(l);
        for (int i = -8; i <= 8; ++i)
            for (int j = -8; j <= 8; ++j) REQUIRE(h_dims(s, {i, j}) == oracle_cotangent(s, {i, j}, 40));
    }
}

TEST_CASE("maculate regions carry the cohomological degree") {
    for (const auto& s : specs()) {
        if (s.kind == Kind::TangentProjDual) continue;
        auto regions = maculate_regions(s);
        for (int i = -9; i <= 9; ++i)
            for (int j = -9; j <= 9; ++j) {
                std::uint64_t mask = 0;
                for (const auto& r : regions)
                    if (r.contains({i, j})) mask |= std::uint64_t(1) << r.k;
                REQUIRE(mask == nonzero_degrees(s, {i, j}));
            }
    }
}

TEST_CASE("magnitude on X_ell") {
    for (int l = 2; l <= 3; ++l) {
        VarietySpec s = VarietySpec::cotangent(l);
        for (int i = -6; i <= 6; ++i)
            for (int j = -6; j <= 6; ++j) {
                CohomologyVector h = h_dims(s, {i, j});
                std::int64_t total = std::accumulate(h.begin(), h.end(), std::int64_t(0));
                CHECK(magnitude_cotangent(l, {i, j}) == total);
            }
    }
}

TEST_CASE("discrepancy report") {
    MagnitudeReport r = magnitude_discrepancy_report(2, 6);
    CHECK(r.points == 13 * 13);
    CHECK(r.region_degree_mismatches == 0);
}

TEST_CASE("cache returns the direct value") {
    VarietySpec s = VarietySpec::toric(2, 2, {0, -2});
    CohomologyCache c(s);
    for (int i = -3; i <= 3; ++i) CHECK(c.get({i, 2}) == h_dims(s, {i, 2}));
    CHECK(c.get({1, 1}) == c.get({1, 1}));
}

TEST_CASE("acyclic and effective") {
    VarietySpec s = VarietySpec::cotangent(2);
    CHECK(is_acyclic(s, {0, 0}));
    CHECK(is_effective(s, {1, 0}));
    CHECK_FALSE(is_effective(s, {-1, 0}));
    CHECK_FALSE(is_acyclic(s, {-2, -2}));
}
