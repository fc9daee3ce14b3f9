#pragma once

#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exseq/variety.hpp"

namespace exseq {

inline constexpr int kMinusInf = std::numeric_limits<int>::min();
inline constexpr int kPlusInf = std::numeric_limits<int>::max();

// {i > -beta, j > V, i + alpha j <= ell + alpha (V+1) - beta}
bool in_delta_up(const VarietySpec& s, Bundle p);

// Points of an admissible set, vertical-lex sorted.
using AdmissibleSet = std::vector<Bundle>;
// free-chain offsets, keyed by the row (V+1..2V+1) of an empty layer
using Offsets = std::map<int, int>;

// rows as intervals [lo, hi]; empty map if some row is not an interval
std::map<int, std::pair<int, int>> admissible_rows(const AdmissibleSet& x);
bool is_admissible_set(const VarietySpec& s, const AdmissibleSet& x, std::string* why = nullptr);

std::vector<AdmissibleSet> enumerate_admissible(const VarietySpec& s);
// subset scan of Delta_up filtered by is_admissible_set (small specs only)
std::vector<AdmissibleSet> enumerate_admissible_bruteforce(const VarietySpec& s);

struct BuiltMes {
    std::vector<Bundle> bundles;  // vertical-lex order
    std::vector<Bundle> x;
    std::vector<Bundle> y;
    std::vector<Bundle> z;
};

// rows of X(k) = empty that need an offset
std::vector<int> free_rows(const VarietySpec& s, const AdmissibleSet& x);
BuiltMes build_mes(const VarietySpec& s, const AdmissibleSet& x, const Offsets& offsets);

struct EnumeratedMes {
    AdmissibleSet x;
    Offsets offsets;
    std::vector<Bundle> bundles;
};

std::vector<EnumeratedMes> enumerate_mes(const VarietySpec& s, int window, bool verify = true);

struct Layer {
    int index = 0;  // 0..V, or kMinusInf / kPlusInf
    Bundle left;
    Bundle right;
};

struct LayerDecomposition {
    Bundle twist;  // added to the input set to reach normal position
    std::vector<Bundle> x, y, z, z_free, z_residual;
    AdmissibleSet admissible;
    Offsets offsets;
    std::vector<Layer> layers;  // ascending index
};

class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

LayerDecomposition decompose_layers(const VarietySpec& s, const std::vector<Bundle>& set);

std::vector<int> displaced_layers(const VarietySpec& s, const LayerDecomposition& d);
std::vector<int> bad_layers(const VarietySpec& s, const LayerDecomposition& d);
bool has_displaced_layer(const VarietySpec& s, const LayerDecomposition& d);
bool has_bad_layer(const VarietySpec& s, const LayerDecomposition& d);
bool strongness_by_layers(const VarietySpec& s, const std::vector<Bundle>& set);
bool effectiveness_by_layers(const VarietySpec& s, const std::vector<Bundle>& set);

struct ThresholdCheck {
    bool closed_form = false;  // ell >= alpha V
    bool scan = false;         // no non-acyclic point of Eff and -Imm in the window
    Bundle witness;            // first offending point when scan is false
};

ThresholdCheck acyclicity_threshold(const VarietySpec& s, int window = -1);

std::vector<Bundle> vertical_lex(std::vector<Bundle> seq);
std::vector<Bundle> horizontal_lex(std::vector<Bundle> seq);
std::vector<Bundle> sigma_involution(std::vector<Bundle> seq);
std::vector<Bundle> twist_all(std::vector<Bundle> seq, Bundle t);

std::string layer_name(int index);

}  // namespace exseq
