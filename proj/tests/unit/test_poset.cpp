#include "doctest.h"

#include <algorithm>

#include "exseq/poset.hpp"

using namespace exseq;

namespace {

Relation chain(std::size_t n) {
    Relation r(n);
    for (std::size_t k = 0; k + 1 < n; ++k) r.add(k, k + 1);
    return r;
}

}  // namespace

TEST_CASE("transitive hull of a chain") {
    Relation h = transitive_hull(chain(4));
    CHECK(h.has(0, 3));
    CHECK(h.has(1, 3));
    CHECK_FALSE(h.has(3, 0));
    CHECK(h.pairs().size() == 6);
}

TEST_CASE("cycles are reported") {
    Relation r = chain(3);
    r.add(2, 0);
    try {
        check_antisymmetric(r);
        FAIL("no cycle reported");
    } catch (const CycleError& e) {
        CHECK(e.cycle().size() >= 2);
    }
}

TEST_CASE("linear extensions") {
    std::vector<Bundle> labels{{0, 0}, {1, 0}, {2, 0}};
    bool trunc = true;
    CHECK(linear_extensions(Relation(3), labels, 100, &trunc).size() == 6);
    CHECK_FALSE(trunc);
    CHECK(linear_extensions(transitive_hull(chain(3)), labels, 100, &trunc).size() == 1);
    CHECK(linear_extensions(Relation(3), labels, 4, &trunc).size() == 4);
    CHECK(trunc);
}

TEST_CASE("extend partial order") {
    Relation p = transitive_hull(chain(2));
    Relation q = extend_partial_order(Relation::diagonal(3), 2, 0);
    CHECK(q.has(2, 0));
    CHECK(q.contains(Relation::diagonal(3)));
    CHECK(p.has(0, 1));
}

TEST_CASE("Beilinson sequence on P^1 x P^1") {
    VarietySpec s = VarietySpec::toric(1, 1, {0});
    std::vector<Bundle> seq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(is_exceptional_sequence(s, seq));
    CHECK(is_exceptional_set(s, seq));
    CHECK(is_maximal_exceptional(s, seq));
    CHECK(is_strongly_exceptional(s, seq));
    std::vector<Bundle> rev(seq.rbegin(), seq.rend());
    CHECK_FALSE(is_exceptional_sequence(s, rev));
    // (1,0) and (0,1) are orthogonal, so two orders
    OrderList o = exceptional_orders(s, seq);
    CHECK(o.orders.size() == 2);
    CHECK_FALSE(o.truncated);
}

TEST_CASE("orders are exactly the exceptional permutations") {
    VarietySpec s = VarietySpec::cotangent(2);
    std::vector<Bundle> set{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 1}, {3, 1}};
    REQUIRE(is_exceptional_set(s, set));
    std::vector<std::vector<Bundle>> brute;
    std::vector<Bundle> p = set;
    std::sort(p.begin(), p.end());
    do
        if (is_exceptional_sequence(s, p)) brute.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto orders = exceptional_orders(s, set).orders;
    std::sort(orders.begin(), orders.end());
    CHECK(orders == brute);
}

TEST_CASE("pF0 is F minus Eff") {
    VarietySpec s = VarietySpec::cotangent(2);
    std::vector<Bundle> seq{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 1}, {3, 1}};
    Relation f = compute_F(s, seq), e = eff_relation(s, seq);
    CHECK(pf0(s, seq) == relation_minus(f, e));
    CHECK(associated_poset(s, seq).contains(f));
}

TEST_CASE("not exceptional") {
    VarietySpec s = VarietySpec::cotangent(2);
    std::vector<Bundle> bad{{0, 0}, {3, 0}};
    CHECK_FALSE(is_exceptional_set(s, bad));
    CHECK_FALSE(exceptional_order(s, bad).has_value());
}
