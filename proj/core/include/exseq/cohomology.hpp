#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "exseq/variety.hpp"

namespace exseq {

// h^0 .. h^dim
using CohomologyVector = std::vector<std::int64_t>;

// C(n,k) with C(n,k) = 0 for n < k or n < 0.
std::int64_t binom(std::int64_t n, std::int64_t k);
// n(n-1)...(n-k+1)/k!, defined for every integer n.
std::int64_t binom_poly(std::int64_t n, std::int64_t k);

CohomologyVector h_dims_toric(const VarietySpec& s, Bundle L);
CohomologyVector h_dims_cotangent(const VarietySpec& s, Bundle L);
CohomologyVector h_dims_tangent_dual(const VarietySpec& s, Bundle L);
CohomologyVector h_dims(const VarietySpec& s, Bundle L);

// Independent check for X_ell via the Euler sequence and Serre duality.
// window < 0 selects the default 3*ell+3.
CohomologyVector oracle_cotangent(const VarietySpec& s, Bundle L, int window = -1);

// A maculate region: apex + cone(ray1, ray2), cohomology in degree k.
struct MaculateRegion {
    int k = 0;
    Bundle apex;
    Bundle ray1;
    Bundle ray2;
    bool contains(Bundle p) const;
};

std::vector<MaculateRegion> maculate_regions(const VarietySpec& s);

// bit k set iff h^k(L) != 0
std::uint64_t nonzero_degrees(const VarietySpec& s, Bundle L);

bool is_immaculate(const VarietySpec& s, Bundle L);
bool is_acyclic(const VarietySpec& s, Bundle L);
bool is_effective(const VarietySpec& s, Bundle L);

// |C(j+l,l)C(i+l,l) - C(j-1+l,l)C(i-1+l,l)| with generalized binomials.
std::int64_t magnitude_cotangent(int ell, Bundle L);

// the reference closed form read literally; poly selects generalized binomials
std::int64_t printed_magnitude(int ell, Bundle L, bool poly);

struct Substitution {
    int a, b, e;  // i' = a i + b j + e
    int c, d, f;  // j' = c i + d j + f
};

struct MagnitudeMismatch {
    Bundle L;
    std::int64_t printed;
    std::int64_t oracle;
};

struct MagnitudeReport {
    int ell = 2;
    int window = 8;
    int points = 0;
    std::vector<MagnitudeMismatch> mismatches;        // printed (naive binomials) vs oracle
    std::vector<Substitution> naive_substitutions;    // affine changes making the naive reading exact
    std::vector<Substitution> poly_substitutions;     // same with generalized binomials
    int region_degree_mismatches = 0;                 // region degree vs oracle support
};

MagnitudeReport magnitude_discrepancy_report(int ell, int window, int coef_range = 2, int shift_range = 3);

// Lazily filled per-spec table; not thread safe.
class CohomologyCache {
public:
    explicit CohomologyCache(VarietySpec s) : spec_(std::move(s)) {}
    const CohomologyVector& get(Bundle L);
    const VarietySpec& spec() const { return spec_; }

private:
    VarietySpec spec_;
    std::unordered_map<std::uint64_t, CohomologyVector> table_;
};

}  // namespace exseq
