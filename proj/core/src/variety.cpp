#include "exseq/variety.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace exseq {

std::string to_string(Bundle b) { return "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")"; }

VarietySpec VarietySpec::toric(int ell, int v, std::vector<int> c) {
    if (ell < 1 || v < 1) throw std::invalid_argument("toric spec needs ell >= 1 and v >= 1");
    if (c.empty()) c.assign(std::size_t(v), 0);
    if (c.size() == std::size_t(v) + 1) {
        if (c.front() != 0) throw std::invalid_argument("c with V+1 entries must start with 0");
        c.erase(c.begin());
    }
    if (c.size() != std::size_t(v)) throw std::invalid_argument("c must have V entries");
    int prev = 0;
    for (int x : c) {
        if (x > prev) throw std::invalid_argument("twists must be <= 0 and weakly decreasing");
        prev = x;
    }
    VarietySpec s;
    s.kind = Kind::Toric;
    s.ell = ell;
    s.v = v;
    s.c = std::move(c);
    s.alpha = -s.c.back();
    s.beta = -std::accumulate(s.c.begin(), s.c.end(), 0);
    if (s.beta > s.alpha * s.v) throw std::invalid_argument("effective inequality violated");
    return s;
}

VarietySpec VarietySpec::cotangent(int ell) {
    if (ell < 2) throw std::invalid_argument("cotangent spec needs ell >= 2");
    VarietySpec s;
    s.kind = Kind::CotangentProj;
    s.ell = ell;
    s.v = ell - 1;
    return s;
}

VarietySpec VarietySpec::tangent_dual(int ell) {
    if (ell < 2) throw std::invalid_argument("tangent_dual spec needs ell >= 2");
    VarietySpec s;
    s.kind = Kind::TangentProjDual;
    s.ell = ell;
    s.v = ell - 1;
    return s;
}

std::string VarietySpec::name() const {
    switch (kind) {
    case Kind::Toric: {
        std::string out = "X(" + std::to_string(ell) + "," + std::to_string(v) + ";0";
        for (int x : c) out += "," + std::to_string(x);
        return out + ")";
    }
    case Kind::CotangentProj: return "X_" + std::to_string(ell);
    case Kind::TangentProjDual: return "X_" + std::to_string(ell) + "^dual";
    }
    return "?";
}

int dim_variety(const VarietySpec& s) { return s.is_toric() ? s.ell + s.v : 2 * s.ell - 1; }

int rank_k0(const VarietySpec& s) { return s.is_toric() ? (s.ell + 1) * (s.v + 1) : s.ell * (s.ell + 1); }

Bundle canonical_bundle(const VarietySpec& s) {
    switch (s.kind) {
    case Kind::Toric: return {s.beta - s.ell - 1, -s.v - 1};
    case Kind::CotangentProj: return {-s.ell, -s.ell};
    case Kind::TangentProjDual: return {-2, -s.ell};
    }
    return {};
}

namespace {
std::int64_t cross(Bundle a, Bundle b) { return std::int64_t(a.i) * b.j - std::int64_t(a.j) * b.i; }
int sgn(std::int64_t x) { return (x > 0) - (x < 0); }
}  // namespace

bool Cone::contains(Bundle p) const {
    Bundle v = p - apex;
    int d = sgn(cross(ray1, ray2));
    if (d == 0) throw std::logic_error("degenerate cone");
    return sgn(cross(v, ray2)) * d >= 0 && sgn(cross(ray1, v)) * d >= 0;
}

Cone effective_cone(const VarietySpec& s) {
    if (s.kind == Kind::TangentProjDual) throw std::domain_error("cones not modelled for the dual tangent bundle");
    if (s.is_toric()) return {{0, 0}, {1, 0}, {-s.alpha, 1}};
    return {{0, 0}, {1, 0}, {0, 1}};
}

Cone nef_cone(const VarietySpec& s) {
    if (s.kind == Kind::TangentProjDual) throw std::domain_error("cones not modelled for the dual tangent bundle");
    return {{0, 0}, {1, 0}, {0, 1}};
}

bool in_effective_cone(const VarietySpec& s, Bundle p) {
    if (s.is_toric()) return p.j >= 0 && p.i + s.alpha * p.j >= 0;
    if (s.kind == Kind::CotangentProj) return p.i >= 0 && p.j >= 0;
    throw std::domain_error("cones not modelled for the dual tangent bundle");
}

bool in_nef_cone(const VarietySpec& s, Bundle p) {
    if (s.kind == Kind::TangentProjDual) throw std::domain_error("cones not modelled for the dual tangent bundle");
    return p.i >= 0 && p.j >= 0;
}

bool ImmPiece::contains(Bundle p) const {
    if (type == Type::Points) return std::find(points.begin(), points.end(), p) != points.end();
    long val = long(f.i) * p.i + long(f.j) * p.j;
    if (val < lo || val > hi) return false;
    return !half || long(g.i) * p.i + long(g.j) * p.j >= gmin;
}

std::vector<ImmPiece> immaculate_pieces(const VarietySpec& s) {
    std::vector<ImmPiece> out;
    auto strip = [](Bundle f, long lo, long hi) {
        ImmPiece p;
        p.f = f;
        p.lo = lo;
        p.hi = hi;
        return p;
    };
    if (s.kind == Kind::CotangentProj) {
        out.push_back(strip({0, 1}, -s.ell + 1, -1));
        out.push_back(strip({1, 0}, -s.ell + 1, -1));
        out.push_back(strip({1, 1}, -s.ell, -s.ell));
        return out;
    }
    if (s.kind != Kind::Toric) throw std::domain_error("closed-form immaculate locus only for toric and cotangent specs");
    out.push_back(strip({0, 1}, -s.v, -1));
    Bundle k = canonical_bundle(s);
    if (s.alpha == 0) {
        ImmPiece up = strip({1, 0}, -s.ell, -1);
        up.half = true;
        up.g = {0, 1};
        up.gmin = 0;
        ImmPiece down = strip({1, 0}, k.i + 1, k.i + s.ell);
        down.half = true;
        down.g = {0, -1};
        down.gmin = s.v + 1;
        out.push_back(up);
        out.push_back(down);
    } else {
        ImmPiece up, down;
        up.type = down.type = ImmPiece::Type::Points;
        for (int j = 0; -s.alpha * j - 1 >= -s.ell; ++j)
            for (int i = -s.ell; i + s.alpha * j <= -1; ++i) {
                up.points.push_back({i, j});
                down.points.push_back(k - Bundle{i, j});
            }
        out.push_back(up);
        out.push_back(down);
    }
    return out;
}

bool in_immaculate_pieces(const VarietySpec& s, Bundle p) {
    for (const auto& piece : immaculate_pieces(s))
        if (piece.contains(p)) return true;
    return false;
}

bool Sublattice::contains(Bundle p) const {
    std::int64_t d = det();
    if (d == 0) throw std::invalid_argument("singular sublattice");
    std::int64_t x = std::int64_t(p.i) * g2.j - std::int64_t(p.j) * g2.i;
    std::int64_t y = std::int64_t(g1.i) * p.j - std::int64_t(g1.j) * p.i;
    return x % d == 0 && y % d == 0;
}

SmithForm smith_form(const Sublattice& lam) {
    if (lam.det() == 0) throw std::invalid_argument("singular sublattice");
    using M = std::array<std::array<std::int64_t, 2>, 2>;
    M m{{{lam.g1.i, lam.g2.i}, {lam.g1.j, lam.g2.j}}};
    M u{{{1, 0}, {0, 1}}};
    auto swap_rows = [&] {
        std::swap(m[0], m[1]);
        std::swap(u[0], u[1]);
    };
    auto swap_cols = [&] {
        std::swap(m[0][0], m[0][1]);
        std::swap(m[1][0], m[1][1]);
    };
    for (;;) {
        int bi = -1, bj = -1;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                if (m[r][c] != 0 && (bi < 0 || std::llabs(m[r][c]) < std::llabs(m[bi][bj]))) {
                    bi = r;
                    bj = c;
                }
        if (bi == 1) swap_rows();
        if (bj == 1) swap_cols();
        std::int64_t q = m[1][0] / m[0][0];
        for (int c = 0; c < 2; ++c) {
            m[1][c] -= q * m[0][c];
            u[1][c] -= q * u[0][c];
        }
        q = m[0][1] / m[0][0];
        for (int r = 0; r < 2; ++r) m[r][1] -= q * m[r][0];
        if (m[1][0] != 0 || m[0][1] != 0) continue;
        if (m[1][1] % m[0][0] != 0) {
            for (int c = 0; c < 2; ++c) {
                m[0][c] += m[1][c];
                u[0][c] += u[1][c];
            }
            continue;
        }
        break;
    }
    SmithForm out;
    out.d = {std::llabs(m[0][0]), std::llabs(m[1][1])};
    out.u = u;
    return out;
}

QuotientClass quotient_project(const SmithForm& snf, Bundle p) {
    auto md = [](std::int64_t x, std::int64_t d) { return int(((x % d) + d) % d); };
    std::int64_t x = snf.u[0][0] * p.i + snf.u[0][1] * p.j;
    std::int64_t y = snf.u[1][0] * p.i + snf.u[1][1] * p.j;
    return {md(x, snf.d[0]), md(y, snf.d[1])};
}

QuotientClass quotient_project(const Sublattice& lam, Bundle p) { return quotient_project(smith_form(lam), p); }

Sublattice canonical_sublattice(const VarietySpec& s) {
    if (s.is_toric()) return {canonical_bundle(s), {-s.ell - 1, 0}};
    if (s.kind == Kind::CotangentProj) return {{-s.ell - 1, 0}, {0, -s.ell - 1}};
    throw std::domain_error("no canonical sublattice for the dual tangent bundle");
}

bool is_admissible(const VarietySpec& s, const Sublattice& lam) {
    if (lam.det() == 0) throw std::invalid_argument("singular sublattice");
    // Lambda = -Lambda, so checking Imm suffices.
    for (const auto& piece : immaculate_pieces(s)) {
        if (piece.type == ImmPiece::Type::Points) {
            for (Bundle p : piece.points)
                if (p != Bundle{} && lam.contains(p)) return false;
            continue;
        }
        // f(Lambda) = gZ; every nonempty fibre of f is an unbounded line in both
        // directions of g, so the half-strip cut never empties it.
        long a = long(piece.f.i) * lam.g1.i + long(piece.f.j) * lam.g1.j;
        long b = long(piece.f.i) * lam.g2.i + long(piece.f.j) * lam.g2.j;
        long g = std::gcd(a, b);
        for (long c = piece.lo; c <= piece.hi; ++c)
            if (c % g == 0) return false;
    }
    return true;
}

bool is_admissible_scan(const VarietySpec& s, const Sublattice& lam, int window) {
    for (int i = -window; i <= window; ++i)
        for (int j = -window; j <= window; ++j) {
            Bundle p{i, j};
            if (p == Bundle{} || !lam.contains(p)) continue;
            if (in_immaculate_pieces(s, p) || in_immaculate_pieces(s, -p)) return false;
        }
    return true;
}

}  // namespace exseq
