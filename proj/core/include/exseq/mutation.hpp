#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "exseq/variety.hpp"

namespace exseq {

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// (E2, ..., En, E1 - K) and its inverse
std::vector<Bundle> helix_right(const VarietySpec& s, const std::vector<Bundle>& seq);
std::vector<Bundle> helix_left(const VarietySpec& s, const std::vector<Bundle>& seq);

bool mutually_orthogonal(const VarietySpec& s, Bundle a, Bundle b);
// swaps positions i, i+1
std::vector<Bundle> swap_orthogonal(const VarietySpec& s, const std::vector<Bundle>& seq, std::size_t i);

std::vector<Bundle> lex_operator(const VarietySpec& s, const std::vector<Bundle>& seq);
std::vector<Bundle> helex(const VarietySpec& s, const std::vector<Bundle>& seq);

// consecutive horizontal chains of length ell+1; projection 2 reads columns instead of rows
bool is_orlov_type(const VarietySpec& s, const std::vector<Bundle>& seq, int projection = 1);

// X_2 only. Right: the first bundle of the triple at i moves to the end,
//   t+((-2,1),(-1,-1),(-1,0)) -> t+((-1,-1),(-1,0),(0,0))
//   t+((0,0),(1,0),(1,1))     -> t+((1,0),(1,1),(2,-1))
// Left is the inverse.
std::vector<Bundle> banana_right(const std::vector<Bundle>& seq, std::size_t i);
std::vector<Bundle> banana_left(const std::vector<Bundle>& seq, std::size_t i);

enum class StepKind { HelixL, HelixR, Swap, Lex, BananaLeft, BananaRight, Twist };
std::string step_name(StepKind k);

struct Step {
    StepKind kind = StepKind::Twist;
    std::size_t index = 0;  // Swap / Banana position
    Bundle twist;           // Twist only
    std::vector<Bundle> before;
    std::vector<Bundle> after;
};

struct DerivationTrace {
    VarietySpec spec;
    std::vector<Bundle> initial;
    std::vector<Step> steps;
    std::vector<int> shifts;  // per final position; audit only
    int projection = 1;       // which projection the final sequence is Orlov-type for

    const std::vector<Bundle>& final_sequence() const { return steps.empty() ? initial : steps.back().after; }
};

std::vector<Bundle> apply_step(const VarietySpec& s, const std::vector<Bundle>& seq, const Step& st);
// re-applies every step, checking before/after; returns the final sequence
std::vector<Bundle> replay(const DerivationTrace& t);

// input: a 6-element MES on X_2, as a set or sequence
DerivationTrace reduce_to_orlov(const std::vector<Bundle>& mes);

}  // namespace exseq
