#include "doctest.h"

#include "exseq/cohomology.hpp"
#include "exseq/poset.hpp"
#include "exseq/rouquier.hpp"

using namespace exseq;

TEST_CASE("Orlov sequences") {
    VarietySpec s = VarietySpec::cotangent(2);
    auto seq = orlov_sequence(s, default_gaps(s));
    CHECK(seq.size() == 6);
    CHECK(is_exceptional_sequence(s, seq));
    CHECK(is_strong_sequence(s, seq));
    CHECK(tilting_rows(VarietySpec::toric(2, 3, {0, 0, 0})) == 4);
    CHECK(tilting_rows(s) == 2);
}

TEST_CASE("flag-type bundles reach the lower bound") {
    for (int l = 2; l <= 4; ++l) {
        VarietySpec s = VarietySpec::cotangent(l);
        TiltingSpec t = orlov_tilting(s, default_gaps(s));
        CHECK(compute_i0(t) == 0);
        CHECK(generation_time_bound(t) == dim_variety(s));
        RouquierResult r = rouquier_dimension(s);
        CHECK(r.exact);
        CHECK(r.dim == 2 * l - 1);
        CHECK(r.lower == r.dim);
        CHECK(r.upper == r.dim);
    }
}

TEST_CASE("dual bundle: strongness needs gaps of at least two") {
    VarietySpec s = VarietySpec::tangent_dual(3);
    for (int g0 = 0; g0 <= 3; ++g0)
        for (int g1 = 0; g1 <= 3; ++g1) CHECK(is_strong_sequence(s, orlov_sequence(s, {g0, g1})) == (g0 >= 2 && g1 >= 2));
    CHECK_THROWS_AS(orlov_tilting(s, {1, 2}), std::invalid_argument);
    RouquierResult r = rouquier_dimension(s);
    CHECK_FALSE(r.exact);
    CHECK(r.lower == 5);
    CHECK(r.upper == 8);
}

TEST_CASE("toric default tilting") {
    for (auto s : {VarietySpec::toric(1, 1, {-1}), VarietySpec::toric(2, 2, {0, -1}), VarietySpec::toric(3, 1, {-2})}) {
        TiltingSpec t = orlov_tilting(s, default_gaps(s));
        CHECK(compute_i0(t) == 0);
        CHECK(rouquier_dimension(s).exact);
        CHECK(anticanonical_nef(s));
    }
}

TEST_CASE("anticanonical nef") {
    CHECK(anticanonical_nef(VarietySpec::cotangent(2)));
    CHECK(anticanonical_nef(VarietySpec::toric(1, 1, {-2})));
    CHECK_FALSE(anticanonical_nef(VarietySpec::toric(1, 1, {-3})));
}
