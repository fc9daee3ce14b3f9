#pragma once

#include <optional>
#include <vector>

#include "exseq/variety.hpp"

namespace exseq {

struct TiltingSpec {
    VarietySpec spec;
    std::vector<Bundle> bundles;
    std::vector<int> starts;  // a_0 = 0, a_1, ... : row k is (a_k .. a_k + ell, k)
};

int tilting_rows(const VarietySpec& s);
std::vector<int> default_gaps(const VarietySpec& s);

// rows of ell+1 consecutive bundles, row k starting at a_k, a_{k+1} - a_k = gaps[k]
std::vector<Bundle> orlov_sequence(const VarietySpec& s, const std::vector<int>& gaps);
bool is_strong_sequence(const VarietySpec& s, const std::vector<Bundle>& seq);
// throws PreconditionError-like std::invalid_argument if the sequence is not strong
TiltingSpec orlov_tilting(const VarietySpec& s, const std::vector<int>& gaps);

// largest i with H^i(b - a - K) != 0 over ordered pairs (a, b)
int compute_i0(const TiltingSpec& t);
int generation_time_bound(const TiltingSpec& t);

struct RouquierResult {
    int dim = 0;
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::optional<TiltingSpec> witness;
    int i0 = 0;
};

// gap_window bounds each gap in the search when the default is not a witness
RouquierResult rouquier_dimension(const VarietySpec& s, int gap_window = -1);

bool anticanonical_nef(const VarietySpec& s);

}  // namespace exseq
