#include "doctest.h"

#include <set>

#include "exseq/poset.hpp"
#include "exseq/x2.hpp"

using namespace exseq;

namespace {

const std::vector<std::vector<Bundle>>& window8() {
    static const auto all = enumerate_mes_x2(8);
    return all;
}

}  // namespace

TEST_CASE("colours of Pic/Lambda") {
    CHECK(color_of({0, 0}) == Color::NonImmaculate);
    CHECK(color_of({2, 0}) == Color::Blue);
    CHECK(color_of({0, 2}) == Color::Blue);
    CHECK(color_of({0, 1}) == Color::Red);
    CHECK(color_of({1, 0}) == Color::Green);
    CHECK(color_of({1, 1}) == Color::Mixed);
    CHECK(color_of({4, -3}) == Color::Green);
    CHECK(color_of({-2, -2}) == Color::Mixed);
}

TEST_CASE("canonical set") {
    auto c = canonical_set({{3, 4}, {2, 5}, {5, 3}});
    CHECK(c == std::vector<Bundle>{{0, 0}, {-2, 1}, {-3, 2}});
}

TEST_CASE("every template is an exceptional sequence") {
    VarietySpec s = x2_spec();
    for (MesClass c : {MesClass::II, MesClass::III, MesClass::IV, MesClass::V})
        for (int k = 0; k < template_count(c); ++k) CHECK(is_exceptional_sequence(s, class_template(c, k)));
    for (int a = -8; a <= 8; ++a)
        for (int k = 0; k < 3; ++k) CHECK(is_exceptional_sequence(s, class_template(MesClass::I, k, a)));
}

TEST_CASE("enumeration: every set is maximal exceptional and classified") {
    VarietySpec s = x2_spec();
    const auto& all = window8();
    REQUIRE_FALSE(all.empty());
    std::set<std::string> seen;
    for (const auto& m : all) {
        CHECK(is_maximal_exceptional(s, m));
        CHECK(canonical_set(m) == m);
        MesClassLabel l = classify(m);
        REQUIRE(l.cls != MesClass::Unclassified);
        CHECK(canonical_set(reconstruct(l)) == m);
        CHECK(is_exceptional_sequence(s, reconstruct(l)));
        seen.insert(class_name(l.cls, l.sigma_applied));
    }
    CHECK(seen == std::set<std::string>{"i", "i'", "ii", "iii", "iii'", "iv", "v"});
}

TEST_CASE("enumeration is deterministic across thread counts") {
    CHECK(enumerate_mes_x2(5, 1) == enumerate_mes_x2(5, 3));
}

TEST_CASE("templates inside the window are found") {
    std::set<std::vector<Bundle>> all(window8().begin(), window8().end());
    for (MesClass c : {MesClass::II, MesClass::III, MesClass::IV, MesClass::V})
        for (int k = 0; k < 6; ++k) CHECK(all.count(canonical_set(class_template(c, k))) == 1);
    for (int a = -3; a <= 3; ++a) CHECK(all.count(canonical_set(class_template(MesClass::I, 0, a))) == 1);
}

TEST_CASE("class ii and iii overlap class i as sets") {
    auto ii = classify_all(canonical_set(class_template(MesClass::II, 4)));
    REQUIRE(ii.size() >= 2);
    CHECK(ii.front().cls == MesClass::II);
    bool has_i1 = false;
    for (const auto& l : ii) has_i1 = has_i1 || (l.cls == MesClass::I && l.parameter == 1);
    CHECK(has_i1);
}

TEST_CASE("gap points") {
    for (const auto& m : window8()) {
        GapReport g = gap_points(m);
        CHECK(g.valid);
        CHECK(g.injective);
        CHECK(g.gaps.size() == 3);
        for (auto [d, n] : g.diagonal_counts) CHECK(n <= 2);
        CHECK(diagonal_precedence_holds(m));
    }
    GapReport bad = gap_points({{0, 0}, {3, 0}});
    CHECK_FALSE(bad.injective);
    CHECK_FALSE(bad.valid);
}

TEST_CASE("strongly cyclic") {
    CHECK(strongly_cyclic(class_template(MesClass::I, 0, 1)));
    CHECK(strongly_cyclic(class_template(MesClass::II, 0)));
    CHECK_FALSE(strongly_cyclic(class_template(MesClass::I, 0, 6)));
}

TEST_CASE("pF0 of the Orlov sequence is empty for small a") {
    CHECK(pf0_table(class_template(MesClass::I, 0, 1)).pairs().empty());
}

TEST_CASE("labels") {
    MesClassLabel l{MesClass::III, 2, true, {0, 0}, std::nullopt};
    CHECK(label_name(l) == "iii' #3");
    CHECK(class_name(MesClass::Unclassified, true) == "unclassified");
}
