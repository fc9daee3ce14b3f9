#include "doctest.h"

#include "exseq/mutation.hpp"
#include "exseq/poset.hpp"
#include "exseq/toric.hpp"
#include "exseq/x2.hpp"

using namespace exseq;

namespace {

const std::vector<Bundle> kOrlov{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 1}, {3, 1}};

}  // namespace

TEST_CASE("helixing round trip") {
    VarietySpec s = x2_spec();
    auto r = helix_right(s, kOrlov);
    CHECK(r.front() == Bundle{1, 0});
    CHECK(r.back() == Bundle{2, 2});
    CHECK(helix_left(s, r) == kOrlov);
    CHECK(is_exceptional_sequence(s, r));
}

TEST_CASE("helixing rejects non-exceptional input") {
    CHECK_THROWS(helix_right(x2_spec(), {{0, 0}, {-3, 0}}));
}

TEST_CASE("orthogonal swap") {
    VarietySpec s = VarietySpec::toric(1, 1, {0});
    std::vector<Bundle> seq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(mutually_orthogonal(s, {1, 0}, {0, 1}));
    CHECK(swap_orthogonal(s, seq, 1) == std::vector<Bundle>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK_THROWS_AS(swap_orthogonal(s, seq, 0), PreconditionError);
}

TEST_CASE("lex operator sorts vertically") {
    VarietySpec s = VarietySpec::toric(1, 1, {0});
    std::vector<Bundle> seq{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(lex_operator(s, seq) == std::vector<Bundle>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("Orlov type") {
    VarietySpec s = x2_spec();
    CHECK(is_orlov_type(s, kOrlov));
    CHECK(is_orlov_type(s, sigma_involution(kOrlov), 2));
    CHECK_FALSE(is_orlov_type(s, class_template(MesClass::II, 0)));
}

TEST_CASE("banana mutations follow the documented pattern") {
    std::vector<Bundle> want{{1, 0}, {1, 1}, {2, -1}};
    // banana moves are checked on a full sequence; build one containing the pattern
    for (const auto& m : enumerate_mes_x2(6)) {
        MesClassLabel l = classify(m);
        auto full = reconstruct(l);
        for (std::size_t i = 0; i + 2 < full.size(); ++i) {
            Bundle t = full[i];
            if (full[i + 1] - t == Bundle{1, 0} && full[i + 2] - t == Bundle{1, 1}) {
                try {
                    auto out = banana_right(full, i);
                    CHECK(out[i] == t + want[0]);
                    CHECK(out[i + 1] == t + want[1]);
                    CHECK(out[i + 2] == t + want[2]);
                    CHECK(banana_left(out, i) == full);
                    return;
                } catch (const PreconditionError&) {
                }
            }
        }
    }
    FAIL("no sequence in the window admits the right banana move");
}

TEST_CASE("reduction of the Orlov sequence is trivial") {
    DerivationTrace t = reduce_to_orlov(kOrlov);
    CHECK(is_orlov_type(x2_spec(), t.final_sequence(), t.projection));
    CHECK(replay(t) == t.final_sequence());
}

TEST_CASE("every class reduces and replays") {
    VarietySpec s = x2_spec();
    for (MesClass c : {MesClass::II, MesClass::III, MesClass::IV, MesClass::V})
        for (int k = 0; k < 6; ++k) {
            auto seq = class_template(c, k);
            for (bool sigma : {false, true}) {
                auto in = sigma ? sigma_involution(seq) : seq;
                in = twist_all(in, {2, -1});
                DerivationTrace t = reduce_to_orlov(in);
                CHECK(is_orlov_type(s, t.final_sequence(), t.projection));
                CHECK(replay(t) == t.final_sequence());
                CHECK(t.shifts.size() == 6);
            }
        }
    for (int a = -6; a <= 6; ++a) {
        DerivationTrace t = reduce_to_orlov(class_template(MesClass::I, 1, a));
        CHECK(is_orlov_type(s, t.final_sequence(), t.projection));
    }
}

TEST_CASE("replay catches a tampered trace") {
    DerivationTrace t = reduce_to_orlov(class_template(MesClass::IV, 3));
    REQUIRE_FALSE(t.steps.empty());
    t.steps.back().after.back() = t.steps.back().after.back() + Bundle{1, 0};
    CHECK_THROWS(replay(t));
}

TEST_CASE("step names") {
    CHECK(step_name(StepKind::HelixR) == "helix_right");
    CHECK(step_name(StepKind::BananaLeft) == "banana_left");
}
