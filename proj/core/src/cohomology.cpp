#include "exseq/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace exseq {

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || n < k) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (std::int64_t m = 0; m < k; ++m) r = r * (n - m) / (m + 1);
    return std::int64_t(r);
}

std::int64_t binom_poly(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    __int128 r = 1;
    for (std::int64_t m = 0; m < k; ++m) r = r * (n - m) / (m + 1);
    return std::int64_t(r);
}

namespace {

CohomologyVector serre_dual(const VarietySpec& s, Bundle L, CohomologyVector (*f)(const VarietySpec&, Bundle)) {
    CohomologyVector d = f(s, canonical_bundle(s) - L);
    std::reverse(d.begin(), d.end());
    return d;
}

// number of multisets of size n from the twist values with given sum
std::vector<std::int64_t> multiset_sums(const std::vector<int>& t, int n) {
    int top = 0;
    for (int x : t) top = std::max(top, x);
    int smax = top * n;
    std::vector<std::vector<std::int64_t>> dp(std::size_t(n) + 1, std::vector<std::int64_t>(std::size_t(smax) + 1, 0));
    dp[0][0] = 1;
    for (int x : t)
        for (int m = 1; m <= n; ++m)
            for (int sum = x; sum <= smax; ++sum) dp[std::size_t(m)][std::size_t(sum)] += dp[std::size_t(m - 1)][std::size_t(sum - x)];
    return dp[std::size_t(n)];
}

std::int64_t h0_proj(int ell, std::int64_t d) { return d >= 0 ? binom(d + ell, ell) : 0; }
std::int64_t htop_proj(int ell, std::int64_t d) { return d <= -ell - 1 ? binom(-d - 1, ell) : 0; }

}  // namespace

CohomologyVector h_dims_toric(const VarietySpec& s, Bundle L) {
    if (!s.is_toric()) throw std::invalid_argument("h_dims_toric needs a toric spec");
    CohomologyVector out(std::size_t(dim_variety(s)) + 1, 0);
    if (L.j >= 0) {
        std::vector<int> t{0};
        for (int x : s.c) t.push_back(-x);
        auto counts = multiset_sums(t, L.j);
        for (std::size_t sum = 0; sum < counts.size(); ++sum) {
            if (counts[sum] == 0) continue;
            std::int64_t d = L.i + std::int64_t(sum);
            out[0] += counts[sum] * h0_proj(s.ell, d);
            out[std::size_t(s.ell)] += counts[sum] * htop_proj(s.ell, d);
        }
        return out;
    }
    if (L.j >= -s.v) return out;
    return serre_dual(s, L, h_dims_toric);
}

namespace {

CohomologyVector cotangent_upper(int ell, Bundle L) {
    CohomologyVector out(std::size_t(2 * ell), 0);
    std::int64_t a = binom(L.j - 1 + ell, ell);
    std::int64_t b = binom(L.j + ell, ell);
    out[0] = b * h0_proj(ell, L.i) - a * h0_proj(ell, L.i - 1);
    std::int64_t ha = a * htop_proj(ell, L.i - 1);
    std::int64_t hb = b * htop_proj(ell, L.i);
    out[std::size_t(ell - 1)] += std::max<std::int64_t>(0, ha - hb);
    out[std::size_t(ell)] += std::max<std::int64_t>(0, hb - ha);
    return out;
}

}  // namespace

CohomologyVector oracle_cotangent(const VarietySpec& s, Bundle L, int window) {
    if (s.kind != Kind::CotangentProj) throw std::invalid_argument("oracle_cotangent needs a cotangent spec");
    if (window < 0) window = 3 * s.ell + 3;
    if (std::abs(L.i) > window || std::abs(L.j) > window) throw std::out_of_range("outside oracle window");
    if (L.j >= 0) return cotangent_upper(s.ell, L);
    if (L.j > -s.ell) return CohomologyVector(std::size_t(2 * s.ell), 0);
    CohomologyVector d = cotangent_upper(s.ell, canonical_bundle(s) - L);
    std::reverse(d.begin(), d.end());
    return d;
}

std::int64_t magnitude_cotangent(int ell, Bundle L) {
    std::int64_t v = binom_poly(L.j + ell, ell) * binom_poly(L.i + ell, ell) -
                     binom_poly(L.j - 1 + ell, ell) * binom_poly(L.i - 1 + ell, ell);
    return v < 0 ? -v : v;
}

std::int64_t printed_magnitude(int ell, Bundle L, bool poly) {
    auto C = poly ? binom_poly : binom;
    std::int64_t i = L.i, j = L.j;
    std::int64_t v = C(i - j + ell, ell) * C(j + ell, ell) - C(i - j + 1 + ell, ell) * C(j - 1 + ell, ell);
    return v < 0 ? -v : v;
}

bool MaculateRegion::contains(Bundle p) const { return Cone{apex, ray1, ray2}.contains(p); }

std::vector<MaculateRegion> maculate_regions(const VarietySpec& s) {
    int l = s.ell;
    if (s.is_toric()) {
        int V = s.v, a = s.alpha;
        return {{0, {0, 0}, {1, 0}, {-a, 1}},
                {l, {-l - 1, 0}, {-1, 0}, {0, 1}},
                {V, {s.beta, -V - 1}, {1, 0}, {0, -1}},
                {l + V, canonical_bundle(s), {-1, 0}, {a, -1}}};
    }
    if (s.kind == Kind::CotangentProj) {
        return {{0, {0, 0}, {1, 0}, {0, 1}},
                {l - 1, {-l, 1}, {0, 1}, {-1, 1}},
                {l, {-l - 1, 0}, {-1, 1}, {-1, 0}},
                {l - 1, {1, -l}, {1, 0}, {1, -1}},
                {l, {0, -l - 1}, {1, -1}, {0, -1}},
                {2 * l - 1, {-l, -l}, {-1, 0}, {0, -1}}};
    }
    throw std::domain_error("regions for the dual tangent bundle are only available pointwise");
}

CohomologyVector h_dims_cotangent(const VarietySpec& s, Bundle L) {
    if (s.kind != Kind::CotangentProj) throw std::invalid_argument("h_dims_cotangent needs a cotangent spec");
    CohomologyVector out(std::size_t(2 * s.ell), 0);
    int hits = 0;
    for (const auto& r : maculate_regions(s)) {
        if (!r.contains(L)) continue;
        ++hits;
        out[std::size_t(r.k)] = magnitude_cotangent(s.ell, L);
        if (out[std::size_t(r.k)] == 0) throw std::logic_error("zero magnitude inside a maculate region at " + to_string(L));
    }
    if (hits > 1) throw std::logic_error("overlapping maculate regions at " + to_string(L));
    return out;
}

CohomologyVector h_dims_tangent_dual(const VarietySpec& s, Bundle L) {
    if (s.kind != Kind::TangentProjDual) throw std::invalid_argument("h_dims_tangent_dual needs a tangent_dual spec");
    int l = s.ell;
    CohomologyVector out(std::size_t(2 * l), 0);
    if (L.j >= 0) {
        CohomologyVector w = h_dims_cotangent(VarietySpec::cotangent(l), {-(l + L.i + L.j + 1), L.j});
        for (int k = 0; k <= l; ++k) out[std::size_t(k)] = w[std::size_t(l - k)];
        for (int k = l + 1; k < 2 * l; ++k)
            if (w[std::size_t(k)] != 0) throw std::logic_error("unexpected degree in dual reduction");
        return out;
    }
    if (L.j > -l) return out;
    return serre_dual(s, L, h_dims_tangent_dual);
}

CohomologyVector h_dims(const VarietySpec& s, Bundle L) {
    switch (s.kind) {
    case Kind::Toric: return h_dims_toric(s, L);
    case Kind::CotangentProj: return h_dims_cotangent(s, L);
    case Kind::TangentProjDual: return h_dims_tangent_dual(s, L);
    }
    return {};
}

std::uint64_t nonzero_degrees(const VarietySpec& s, Bundle L) {
    std::uint64_t m = 0;
    if (s.kind == Kind::TangentProjDual) {
        auto d = h_dims_tangent_dual(s, L);
        for (std::size_t k = 0; k < d.size(); ++k)
            if (d[k] != 0) m |= std::uint64_t(1) << k;
        return m;
    }
    for (const auto& r : maculate_regions(s))
        if (r.contains(L)) m |= std::uint64_t(1) << r.k;
    return m;
}

bool is_immaculate(const VarietySpec& s, Bundle L) { return nonzero_degrees(s, L) == 0; }
bool is_acyclic(const VarietySpec& s, Bundle L) { return (nonzero_degrees(s, L) & ~std::uint64_t(1)) == 0; }
bool is_effective(const VarietySpec& s, Bundle L) { return (nonzero_degrees(s, L) & 1) != 0; }

MagnitudeReport magnitude_discrepancy_report(int ell, int window, int coef_range, int shift_range) {
    VarietySpec s = VarietySpec::cotangent(ell);
    MagnitudeReport rep;
    rep.ell = ell;
    rep.window = window;
    std::vector<std::pair<Bundle, std::int64_t>> truth;
    for (int i = -window; i <= window; ++i)
        for (int j = -window; j <= window; ++j) {
            Bundle L{i, j};
            CohomologyVector o = oracle_cotangent(s, L, window);
            std::int64_t mag = 0;
            std::uint64_t support = 0;
            for (std::size_t k = 0; k < o.size(); ++k)
                if (o[k] != 0) {
                    mag += o[k];
                    support |= std::uint64_t(1) << k;
                }
            if (support != nonzero_degrees(s, L)) ++rep.region_degree_mismatches;
            truth.emplace_back(L, mag);
            std::int64_t p = printed_magnitude(ell, L, false);
            if (p != mag) rep.mismatches.push_back({L, p, mag});
        }
    rep.points = int(truth.size());
    // try the substitutions on points close to the origin first; it rejects most candidates early
    std::stable_sort(truth.begin(), truth.end(), [](const auto& x, const auto& y) {
        return std::abs(x.first.i) + std::abs(x.first.j) < std::abs(y.first.i) + std::abs(y.first.j);
    });
    for (int a = -coef_range; a <= coef_range; ++a)
        for (int b = -coef_range; b <= coef_range; ++b)
            for (int c = -coef_range; c <= coef_range; ++c)
                for (int d = -coef_range; d <= coef_range; ++d) {
                    if (a * d - b * c == 0) continue;
                    for (int e = -shift_range; e <= shift_range; ++e)
                        for (int f = -shift_range; f <= shift_range; ++f)
                            for (int poly = 0; poly < 2; ++poly) {
                                bool ok = true;
                                for (const auto& [L, mag] : truth) {
                                    Bundle t{a * L.i + b * L.j + e, c * L.i + d * L.j + f};
                                    if (printed_magnitude(ell, t, poly != 0) != mag) {
                                        ok = false;
                                        break;
                                    }
                                }
                                if (ok) (poly ? rep.poly_substitutions : rep.naive_substitutions).push_back({a, b, e, c, d, f});
                            }
                }
    return rep;
}

const CohomologyVector& CohomologyCache::get(Bundle L) {
    std::uint64_t key = (std::uint64_t(std::uint32_t(L.i)) << 32) | std::uint32_t(L.j);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    return table_.emplace(key, h_dims(spec_, L)).first->second;
}

}  // namespace exseq
