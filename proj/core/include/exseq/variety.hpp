#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace exseq {

// A line bundle O(i h + j H) in nef coordinates.
struct Bundle {
    int i = 0;
    int j = 0;

    friend constexpr Bundle operator+(Bundle a, Bundle b) { return {a.i + b.i, a.j + b.j}; }
    friend constexpr Bundle operator-(Bundle a, Bundle b) { return {a.i - b.i, a.j - b.j}; }
    friend constexpr Bundle operator-(Bundle a) { return {-a.i, -a.j}; }
    friend constexpr bool operator==(Bundle, Bundle) = default;
    friend constexpr auto operator<=>(Bundle, Bundle) = default;
};

// order by j first, then i
constexpr bool vlex_less(Bundle a, Bundle b) { return a.j != b.j ? a.j < b.j : a.i < b.i; }
constexpr bool hlex_less(Bundle a, Bundle b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
constexpr Bundle swap_coords(Bundle a) { return {a.j, a.i}; }

std::string to_string(Bundle b);

enum class Kind { Toric, CotangentProj, TangentProjDual };

struct VarietySpec {
    Kind kind = Kind::Toric;
    int ell = 1;
    int v = 1;           // fibre dimension (ell-1 for the two flag-type bundles)
    std::vector<int> c;  // twists c^1..c^V, toric only
    int alpha = 0;
    int beta = 0;

    // c may carry V entries, or V+1 entries with a leading 0.
    static VarietySpec toric(int ell, int v, std::vector<int> c);
    static VarietySpec cotangent(int ell);
    static VarietySpec tangent_dual(int ell);

    bool is_toric() const { return kind == Kind::Toric; }
    std::string name() const;
    friend bool operator==(const VarietySpec&, const VarietySpec&) = default;
};

int dim_variety(const VarietySpec& s);
int rank_k0(const VarietySpec& s);
Bundle canonical_bundle(const VarietySpec& s);

// apex + cone spanned by two rays (closed, real cone)
struct Cone {
    Bundle apex;
    Bundle ray1;
    Bundle ray2;
    bool contains(Bundle p) const;
};

Cone effective_cone(const VarietySpec& s);
Cone nef_cone(const VarietySpec& s);
bool in_effective_cone(const VarietySpec& s, Bundle p);
bool in_nef_cone(const VarietySpec& s, Bundle p);
inline bool nef_le(Bundle a, Bundle b) { return b.i >= a.i && b.j >= a.j; }

// Closed-form immaculate locus: a union of strips f in [lo,hi] (optionally
// cut by g >= gmin) and finite point lists.
struct ImmPiece {
    enum class Type { Strip, Points };
    Type type = Type::Strip;
    Bundle f;
    long lo = 0;
    long hi = 0;
    bool half = false;
    Bundle g;
    long gmin = 0;
    std::vector<Bundle> points;
    bool contains(Bundle p) const;
};

std::vector<ImmPiece> immaculate_pieces(const VarietySpec& s);
bool in_immaculate_pieces(const VarietySpec& s, Bundle p);

struct Sublattice {
    Bundle g1;
    Bundle g2;
    std::int64_t det() const { return std::int64_t(g1.i) * g2.j - std::int64_t(g2.i) * g1.j; }
    bool contains(Bundle p) const;
};

// U * [g1 g2] * W = diag(d0, d1) with d0 | d1, both positive
struct SmithForm {
    std::array<std::int64_t, 2> d{};
    std::array<std::array<std::int64_t, 2>, 2> u{};
};

SmithForm smith_form(const Sublattice& lam);

struct QuotientClass {
    int r1 = 0;
    int r2 = 0;
    friend bool operator==(QuotientClass, QuotientClass) = default;
    friend auto operator<=>(QuotientClass, QuotientClass) = default;
};

QuotientClass quotient_project(const Sublattice& lam, Bundle p);
QuotientClass quotient_project(const SmithForm& snf, Bundle p);

Sublattice canonical_sublattice(const VarietySpec& s);
bool is_admissible(const VarietySpec& s, const Sublattice& lam);
bool is_admissible_scan(const VarietySpec& s, const Sublattice& lam, int window);

}  // namespace exseq
