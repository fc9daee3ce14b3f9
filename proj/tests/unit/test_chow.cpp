#include "doctest.h"

#include "exseq/chow.hpp"

using namespace exseq;

namespace {

// P(T) over P^2: c(T) = 1 + 3h + 3h^2
ChowRing tangent_ring() { return ChowRing(2, {3, 3}); }

}  // namespace

TEST_CASE("ring relations") {
    ChowRing r = tangent_ring();
    auto h = r.h(), H = r.hp();
    CHECK(r.mul(h, r.mul(h, h)) == r.zero());
    CHECK(r.mul(h, H) == r.mul(H, h));
    // H^2 = -3h H - 3h^2
    CHECK(r.mul(H, H) == r.sub(r.scale(r.mul(h, H), -3), r.scale(r.mul(h, h), 3)));
    CHECK(r.degree(r.mul(r.mul(h, h), H)) == 1);
}

TEST_CASE("one is a unit") {
    ChowRing r = tangent_ring();
    auto x = r.linear(2, -5);
    CHECK(r.mul(r.one(), x) == x);
    CHECK(r.add(x, r.zero()) == x);
    CHECK(r.sub(x, x) == r.zero());
    CHECK(r.monomial(1, 1, 4) == r.scale(r.mul(r.h(), r.hp()), 4));
}

TEST_CASE("division by a total Chern class") {
    ChowRing r = tangent_ring();
    auto num = r.add(r.one(), r.add(r.scale(r.h(), -3), r.scale(r.mul(r.h(), r.h()), 3)));
    auto q = divide_total_chern(r, num, r.linear(0, 1));
    CHECK(q == r.linear(-3, -1));
    CHECK(r.mul(q, r.linear(0, 1)) == num);
    CHECK_THROWS(divide_total_chern(r, num, r.scale(r.one(), 2)));
}

TEST_CASE("coordinate change") {
    for (std::int64_t i = -4; i <= 4; ++i)
        for (std::int64_t j = -4; j <= 4; ++j) CHECK(tangent_to_nef(nef_to_tangent({i, j})) == ChowCoords{i, j});
    CHECK(nef_to_tangent({-1, -1}) == ChowCoords{-3, -1});
}

TEST_CASE("banana kernel") {
    BananaCheck b = verify_banana_ses();
    CHECK(b.division);
    CHECK(b.product);
    CHECK(b.coordinates);
    CHECK(b.control_rejected);
    CHECK(b.ok());
}

TEST_CASE("format") {
    ChowRing r = tangent_ring();
    CHECK(r.format(r.zero()) == "0");
    CHECK_FALSE(r.format(r.linear(-3, -1)).empty());
}
