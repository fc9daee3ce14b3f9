#include "doctest.h"

#include <algorithm>

#include "exseq/poset.hpp"
#include "exseq/toric.hpp"

using namespace exseq;

namespace {

std::vector<Bundle> cat(std::vector<Bundle> a, const std::vector<Bundle>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<std::string> names(const std::vector<int>& ks) {
    std::vector<std::string> out;
    for (int k : ks) out.push_back(layer_name(k));
    return out;
}

const std::vector<Bundle> kFig4X{{2, 6}, {3, 6}, {4, 6}, {2, 7}, {3, 7}, {4, 7}, {3, 8}};

}  // namespace

TEST_CASE("delta up region") {
    VarietySpec s = VarietySpec::toric(4, 3, {0, 0, 0});
    CHECK(in_delta_up(s, {1, 4}));
    CHECK(in_delta_up(s, {4, 4}));
    CHECK(in_delta_up(s, {3, 6}));
    CHECK_FALSE(in_delta_up(s, {5, 4}));
    CHECK_FALSE(in_delta_up(s, {0, 4}));
    CHECK_FALSE(in_delta_up(s, {1, 3}));
}

TEST_CASE("admissible enumeration matches brute force") {
    for (auto s : {VarietySpec::toric(1, 1, {0}), VarietySpec::toric(1, 1, {-2}), VarietySpec::toric(2, 1, {-1}), VarietySpec::toric(2, 2, {0, -1}),
                   VarietySpec::toric(1, 2, {0, -1})}) {
        auto a = enumerate_admissible(s), b = enumerate_admissible_bruteforce(s);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        for (const auto& x : a) CHECK(is_admissible_set(s, x));
    }
}

TEST_CASE("admissible rows are intervals") {
    auto rows = admissible_rows({{0, 4}, {1, 4}, {0, 5}});
    CHECK(rows.size() == 2);
    CHECK(rows[4] == std::pair<int, int>{0, 1});
    CHECK(admissible_rows({{0, 4}, {2, 4}}).empty());
}

TEST_CASE("built sets are maximal exceptional") {
    for (auto s : {VarietySpec::toric(1, 1, {-2}), VarietySpec::toric(2, 2, {0, -2}), VarietySpec::toric(2, 1, {-1})}) {
        auto all = enumerate_mes(s, 2);
        CHECK_FALSE(all.empty());
        for (const auto& m : all) {
            REQUIRE(m.bundles.size() == std::size_t(rank_k0(s)));
            CHECK(is_exceptional_set(s, m.bundles));
            LayerDecomposition d = decompose_layers(s, m.bundles);
            CHECK(d.admissible == m.x);
        }
    }
}

TEST_CASE("construction picture, product case") {
    VarietySpec s = VarietySpec::toric(4, 3, {0, 0, 0});
    std::vector<Bundle> set = cat({{2, 4}, {3, 4}, {4, 4}, {2, 5}, {3, 5}, {4, 5}, {3, 6}},
                                  {{1, 0}, {0, 1}, {1, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 2}, {6, 3}, {7, 3}, {3, 3}, {4, 3}, {5, 3}, {0, 0}});
    CHECK(is_maximal_exceptional(s, set));
    LayerDecomposition d = decompose_layers(s, set);
    CHECK(d.x.size() == 7);
}

TEST_CASE("construction picture, twisted case") {
    VarietySpec s = VarietySpec::toric(4, 3, {0, -1, -1});
    CHECK(s.alpha == 1);
    CHECK(s.beta == 2);
    std::vector<Bundle> set{{0, 4}, {1, 4},  {2, 4},  {0, 5}, {0, 6}, {1, 5}, {0, 0}, {1, 0}, {-1, 1}, {5, 3},
                            {0, 1}, {1, 1}, {-2, 2}, {-1, 2}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 3},  {4, 3}};
    CHECK(is_maximal_exceptional(s, set));
    CHECK(decompose_layers(s, set).x.size() == 6);
}

TEST_CASE("displaced layer in the product case") {
    VarietySpec s = VarietySpec::toric(4, 5, {0, 0, 0, 0, 0});
    std::vector<Bundle> left = cat(kFig4X, {{1, 0}, {0, 1}, {1, 1}, {-1, 2}, {0, 2}, {1, 2}, {0, 0}, {2, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3},
                                            {4, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 4}, {5, 4}, {0, 5}, {1, 5}, {2, 5}, {-1, 5}, {-2, 5}});
    REQUIRE(is_maximal_exceptional(s, left));
    LayerDecomposition d = decompose_layers(s, left);
    CHECK(names(displaced_layers(s, d)) == std::vector<std::string>{"5"});
    CHECK_FALSE(is_strongly_exceptional(s, left));
    CHECK_FALSE(strongness_by_layers(s, left));

    std::vector<Bundle> right = cat(kFig4X, {{1, 0}, {0, 1}, {1, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}, {-1, 3},
                                             {1, 4}, {2, 4}, {3, 4}, {4, 4}, {5, 4}, {5, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {0, 0}});
    REQUIRE(is_maximal_exceptional(s, right));
    d = decompose_layers(s, right);
    CHECK_FALSE(has_displaced_layer(s, d));
    CHECK(is_strongly_exceptional(s, right));
    CHECK(strongness_by_layers(s, right));
}

TEST_CASE("bad and displaced layers in the twisted case") {
    VarietySpec s = VarietySpec::toric(3, 3, {0, -1, -1});
    std::vector<Bundle> left{{0, 4}, {1, 4}, {0, 5}, {0, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 2}, {-1, 3}, {0, 3}, {1, 3}, {2, 3}};
    REQUIRE(is_maximal_exceptional(s, left));
    LayerDecomposition d = decompose_layers(s, left);
    CHECK_FALSE(has_displaced_layer(s, d));
    CHECK(is_strongly_exceptional(s, left));

    std::vector<Bundle> right{{0, 4}, {1, 4}, {0, 5}, {0, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {-1, 3}, {0, 3}, {1, 3}, {2, 3}};
    REQUIRE(is_maximal_exceptional(s, right));
    d = decompose_layers(s, right);
    auto bad = names(bad_layers(s, d));
    CHECK(std::count(bad.begin(), bad.end(), "3") == 1);
    auto disp = names(displaced_layers(s, d));
    CHECK(std::count(disp.begin(), disp.end(), "inf") == 1);
    CHECK_FALSE(is_strongly_exceptional(s, right));
    CHECK_FALSE(is_effective_set(s, right));
}

TEST_CASE("Hirzebruch surface: effective but not strong") {
    VarietySpec s = VarietySpec::toric(1, 1, {-2});
    std::vector<Bundle> set{{0, 0}, {-2, 1}, {-1, 1}, {-1, 2}};
    REQUIRE(is_maximal_exceptional(s, set));
    CHECK(is_effective_set(s, set));
    CHECK_FALSE(is_strongly_exceptional(s, set));
    LayerDecomposition d = decompose_layers(s, set);
    CHECK(names(displaced_layers(s, d)) == std::vector<std::string>{"1"});
    CHECK_FALSE(has_bad_layer(s, d));
    CHECK(effectiveness_by_layers(s, set));
    CHECK_FALSE(strongness_by_layers(s, set));
}

TEST_CASE("layer verdicts agree with cohomology on small grids") {
    for (auto s : {VarietySpec::toric(1, 1, {-2}), VarietySpec::toric(2, 2, {0, -1}), VarietySpec::toric(1, 2, {0, -1}), VarietySpec::toric(2, 1, {-2})})
        for (const auto& m : enumerate_mes(s, 2)) {
            CHECK(strongness_by_layers(s, m.bundles) == is_strongly_exceptional(s, m.bundles));
            CHECK(effectiveness_by_layers(s, m.bundles) == is_effective_set(s, m.bundles));
        }
}

TEST_CASE("decomposition is twist invariant") {
    VarietySpec s = VarietySpec::toric(1, 1, {-2});
    std::vector<Bundle> set{{0, 0}, {-2, 1}, {-1, 1}, {-1, 2}};
    auto a = decompose_layers(s, set);
    auto b = decompose_layers(s, twist_all(set, {3, -5}));
    CHECK(vertical_lex(a.x) == vertical_lex(b.x));
    CHECK(b.twist - a.twist == Bundle{-3, 5});
}

TEST_CASE("non-maximal input is a shape error") {
    VarietySpec s = VarietySpec::toric(1, 1, {-2});
    CHECK_THROWS_AS(decompose_layers(s, {{0, 0}, {1, 0}}), ShapeError);
}

TEST_CASE("acyclicity threshold") {
    ThresholdCheck a = acyclicity_threshold(VarietySpec::toric(2, 2, {0, -2}));
    CHECK_FALSE(a.closed_form);
    CHECK_FALSE(a.scan);
    ThresholdCheck b = acyclicity_threshold(VarietySpec::toric(4, 3, {0, -1, -1}));
    CHECK(b.closed_form);
    CHECK(b.scan);
    for (int l = 1; l <= 3; ++l)
        for (int a2 = 0; a2 <= 2; ++a2) {
            ThresholdCheck t = acyclicity_threshold(VarietySpec::toric(l, 1, {-a2}));
            CHECK(t.closed_form == t.scan);
        }
}

TEST_CASE("helpers") {
    CHECK(layer_name(kMinusInf) == "-inf");
    CHECK(layer_name(kPlusInf) == "inf");
    CHECK(sigma_involution({{1, 2}}) == std::vector<Bundle>{{2, 1}});
    CHECK(horizontal_lex({{0, 1}, {1, 0}}) == std::vector<Bundle>{{0, 1}, {1, 0}});
    CHECK(vertical_lex({{0, 1}, {1, 0}}) == std::vector<Bundle>{{1, 0}, {0, 1}});
}
