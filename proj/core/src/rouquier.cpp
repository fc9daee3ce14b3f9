#include "exseq/rouquier.hpp"

#include <algorithm>
#include <stdexcept>

#include "exseq/cohomology.hpp"
#include "exseq/poset.hpp"

namespace exseq {

int tilting_rows(const VarietySpec& s) { return s.is_toric() ? s.v + 1 : s.ell; }

std::vector<int> default_gaps(const VarietySpec& s) {
    int g = s.kind == Kind::Toric ? 0 : s.kind == Kind::CotangentProj ? 1 : s.ell - 1;
    return std::vector<int>(std::size_t(tilting_rows(s) - 1), g);
}

std::vector<Bundle> orlov_sequence(const VarietySpec& s, const std::vector<int>& gaps) {
    if (int(gaps.size()) != tilting_rows(s) - 1) throw std::invalid_argument("wrong number of gaps");
    std::vector<Bundle> out;
    int a = 0;
    for (int k = 0; k < tilting_rows(s); ++k) {
        if (k > 0) a += gaps[std::size_t(k - 1)];
        for (int t = 0; t <= s.ell; ++t) out.push_back({a + t, k});
    }
    return out;
}

bool is_strong_sequence(const VarietySpec& s, const std::vector<Bundle>& seq) {
    return is_exceptional_sequence(s, seq) && is_strongly_exceptional(s, seq);
}

TiltingSpec orlov_tilting(const VarietySpec& s, const std::vector<int>& gaps) {
    auto seq = orlov_sequence(s, gaps);
    if (!is_strong_sequence(s, seq)) throw std::invalid_argument("sequence with these gaps is not strongly exceptional");
    TiltingSpec t{s, seq, {0}};
    for (int g : gaps) t.starts.push_back(t.starts.back() + g);
    return t;
}

int compute_i0(const TiltingSpec& t) {
    Bundle k = canonical_bundle(t.spec);
    int best = 0;
    for (Bundle a : t.bundles)
        for (Bundle b : t.bundles) {
            std::uint64_t m = nonzero_degrees(t.spec, b - a - k);
            for (int d = 63; d > best; --d)
                if ((m >> d) & 1U) {
                    best = d;
                    break;
                }
        }
    return best;
}

int generation_time_bound(const TiltingSpec& t) { return dim_variety(t.spec) + compute_i0(t); }

bool anticanonical_nef(const VarietySpec& s) { return in_nef_cone(s, -canonical_bundle(s)); }

RouquierResult rouquier_dimension(const VarietySpec& s, int gap_window) {
    RouquierResult r;
    r.dim = dim_variety(s);
    r.lower = r.dim;
    if (gap_window < 0) gap_window = s.ell + s.alpha * s.v + 2;
    auto consider = [&](const std::vector<int>& gaps) {
        auto seq = orlov_sequence(s, gaps);
        if (!is_strong_sequence(s, seq)) return;
        TiltingSpec t = orlov_tilting(s, gaps);
        int i0 = compute_i0(t);
        if (!r.witness || i0 < r.i0) {
            r.i0 = i0;
            r.witness = t;
        }
    };
    consider(default_gaps(s));
    if (!r.witness || r.i0 > 0) {
        std::size_t n = default_gaps(s).size();
        std::vector<int> g(n, 0);
        for (;;) {
            consider(g);
            if (r.witness && r.i0 == 0) break;
            std::size_t k = 0;
            while (k < n && g[k] == gap_window) g[k++] = 0;
            if (k == n) break;
            ++g[k];
        }
    }
    if (!r.witness) {
        r.upper = -1;
        return r;
    }
    r.upper = r.dim + r.i0;
    r.exact = r.i0 == 0;
    return r;
}

}  // namespace exseq
