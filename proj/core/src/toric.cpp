#include "exseq/toric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "exseq/cohomology.hpp"
#include "exseq/poset.hpp"

namespace exseq {

namespace {

void require_toric(const VarietySpec& s) {
    if (!s.is_toric()) throw std::invalid_argument("toric spec required");
}

int delta_up_bound(const VarietySpec& s) { return s.ell + s.alpha * (s.v + 1) - s.beta; }

std::vector<Bundle> row_points(int lo, int hi, int j) {
    std::vector<Bundle> out;
    for (int i = lo; i <= hi; ++i) out.push_back({i, j});
    return out;
}

}  // namespace

bool in_delta_up(const VarietySpec& s, Bundle p) {
    return p.i > -s.beta && p.j > s.v && p.i + s.alpha * p.j <= delta_up_bound(s);
}

std::map<int, std::pair<int, int>> admissible_rows(const AdmissibleSet& x) {
    std::map<int, std::vector<int>> cols;
    for (Bundle p : x) cols[p.j].push_back(p.i);
    std::map<int, std::pair<int, int>> out;
    for (auto& [j, is] : cols) {
        std::sort(is.begin(), is.end());
        if (is.back() - is.front() + 1 != int(is.size())) return {};
        out[j] = {is.front(), is.back()};
    }
    return out;
}

bool is_admissible_set(const VarietySpec& s, const AdmissibleSet& x, std::string* why) {
    require_toric(s);
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (x.empty()) return true;
    std::set<Bundle> pts(x.begin(), x.end());
    if (pts.size() != x.size()) return fail("duplicate points");
    for (Bundle p : x) {
        if (!in_delta_up(s, p)) return fail("point outside Delta_up");
        if (p.j < s.v + 1 || p.j > 2 * s.v + 1) return fail("row outside V+1..2V+1");
    }
    if (!pts.count({s.ell - s.beta, s.v + 1})) return fail("normalisation point missing");
    for (Bundle p : x) {
        if (p.j == s.v + 1) continue;
        for (int t = 0; t <= s.alpha; ++t)
            if (!pts.count({p.i + t, p.j - 1})) return fail("ascending slimness violated");
    }
    auto rows = admissible_rows(x);
    if (rows.empty()) return fail("row is not an interval");
    return true;
}

std::vector<AdmissibleSet> enumerate_admissible(const VarietySpec& s) {
    require_toric(s);
    std::vector<AdmissibleSet> out{AdmissibleSet{}};
    int V = s.v;
    std::vector<std::pair<int, int>> rows;
    auto emit = [&] {
        AdmissibleSet x;
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (Bundle p : row_points(rows[r].first, rows[r].second, V + 1 + int(r))) x.push_back(p);
        std::sort(x.begin(), x.end(), vlex_less);
        out.push_back(std::move(x));
    };
    auto fits = [&](int lo, int hi, int j) { return lo > -s.beta && hi + s.alpha * j <= delta_up_bound(s); };
    auto rec = [&](auto&& self, int j) -> void {
        emit();
        if (j > 2 * V + 1) return;
        auto [plo, phi] = rows.back();
        for (int lo = plo; lo <= phi; ++lo)
            for (int hi = lo; hi + s.alpha <= phi; ++hi) {
                if (!fits(lo, hi, j)) continue;
                rows.push_back({lo, hi});
                self(self, j + 1);
                rows.pop_back();
            }
    };
    int hi = s.ell - s.beta;
    for (int lo = -s.beta + 1; lo <= hi; ++lo) {
        if (!fits(lo, hi, V + 1)) continue;
        rows.push_back({lo, hi});
        rec(rec, V + 2);
        rows.pop_back();
    }
    return out;
}

std::vector<AdmissibleSet> enumerate_admissible_bruteforce(const VarietySpec& s) {
    require_toric(s);
    std::vector<Bundle> cells;
    for (int j = s.v + 1; j <= 2 * s.v + 1; ++j)
        for (int i = -s.beta + 1; i + s.alpha * j <= delta_up_bound(s); ++i) cells.push_back({i, j});
    if (cells.size() > 20) throw std::invalid_argument("Delta_up too large for the subset scan");
    std::vector<AdmissibleSet> out;
    for (std::uint32_t mask = 0; mask < (1U << cells.size()); ++mask) {
        AdmissibleSet x;
        for (std::size_t b = 0; b < cells.size(); ++b)
            if ((mask >> b) & 1U) x.push_back(cells[b]);
        std::sort(x.begin(), x.end(), vlex_less);
        if (is_admissible_set(s, x)) out.push_back(std::move(x));
    }
    return out;
}

std::vector<int> free_rows(const VarietySpec& s, const AdmissibleSet& x) {
    std::set<int> used;
    for (Bundle p : x) used.insert(p.j);
    std::vector<int> out;
    for (int k = s.v + 1; k <= 2 * s.v + 1; ++k)
        if (!used.count(k)) out.push_back(k);
    return out;
}

BuiltMes build_mes(const VarietySpec& s, const AdmissibleSet& x, const Offsets& offsets) {
    require_toric(s);
    std::string why;
    if (!is_admissible_set(s, x, &why)) throw std::invalid_argument("not admissible: " + why);
    auto rows = admissible_rows(x);
    auto free = free_rows(s, x);
    if (offsets.size() != free.size()) throw std::invalid_argument("offsets must be given exactly for the empty layers");
    for (int k : free)
        if (!offsets.count(k)) throw std::invalid_argument("missing offset for row " + std::to_string(k));
    BuiltMes out;
    out.x = x;
    int start = -s.beta;
    for (int k = s.v + 1; k <= 2 * s.v + 1; ++k) {
        auto it = rows.find(k);
        if (it != rows.end()) {
            auto [lo, hi] = it->second;
            start = hi - s.ell;
            for (Bundle p : row_points(start, lo - 1, k)) out.y.push_back(p);
        } else {
            start += offsets.at(k);
            for (Bundle p : row_points(start, start + s.ell, k)) out.y.push_back(p);
        }
    }
    for (Bundle p : out.y) out.z.push_back(p + Bundle{s.beta, -s.v - 1});
    out.bundles = out.z;
    out.bundles.insert(out.bundles.end(), out.x.begin(), out.x.end());
    std::sort(out.bundles.begin(), out.bundles.end(), vlex_less);
    return out;
}

std::vector<EnumeratedMes> enumerate_mes(const VarietySpec& s, int window, bool verify) {
    require_toric(s);
    std::vector<EnumeratedMes> out;
    for (const auto& x : enumerate_admissible(s)) {
        auto free = free_rows(s, x);
        std::vector<int> off(free.size(), -window);
        for (;;) {
            Offsets o;
            for (std::size_t r = 0; r < free.size(); ++r) o[free[r]] = off[r];
            BuiltMes b = build_mes(s, x, o);
            if (verify && !is_maximal_exceptional(s, b.bundles))
                throw std::logic_error("construction produced a non-exceptional set");
            out.push_back({x, o, std::move(b.bundles)});
            std::size_t r = 0;
            while (r < off.size() && off[r] == window) off[r++] = -window;
            if (r == off.size()) break;
            ++off[r];
        }
    }
    return out;
}

LayerDecomposition decompose_layers(const VarietySpec& s, const std::vector<Bundle>& set) {
    require_toric(s);
    if (int(set.size()) != rank_k0(s)) throw ShapeError("set size differs from the rank of K_0");
    LayerDecomposition d;
    int jmin = set.front().j;
    for (Bundle p : set) jmin = std::min(jmin, p.j);
    std::vector<Bundle> pts;
    for (Bundle p : set) pts.push_back(p + Bundle{0, -jmin});
    int V = s.v;
    int shift = 0;
    bool has_x = false;
    int xmax = 0, zmin = 0;
    bool zseen = false;
    for (Bundle p : pts) {
        if (p.j == V + 1) {
            xmax = has_x ? std::max(xmax, p.i) : p.i;
            has_x = true;
        }
        if (p.j == 0) {
            zmin = zseen ? std::min(zmin, p.i) : p.i;
            zseen = true;
        }
    }
    shift = has_x ? s.ell - s.beta - xmax : -zmin;
    d.twist = {shift, -jmin};
    for (Bundle& p : pts) p = p + Bundle{shift, 0};
    std::sort(pts.begin(), pts.end(), vlex_less);
    for (Bundle p : pts) {
        if (p.j >= V + 1)
            d.x.push_back(p);
        else
            d.z.push_back(p);
    }
    std::string why;
    if (!is_admissible_set(s, d.x, &why)) throw ShapeError("upper part is not admissible: " + why);
    d.admissible = d.x;
    for (Bundle p : d.z) d.y.push_back(p - Bundle{s.beta, -V - 1});
    auto xrows = admissible_rows(d.x);
    int prev_start = -s.beta;
    for (int k = V + 1; k <= 2 * V + 1; ++k) {
        std::vector<int> yi, xi;
        for (Bundle p : d.y)
            if (p.j == k) yi.push_back(p.i);
        for (Bundle p : d.x)
            if (p.j == k) xi.push_back(p.i);
        std::vector<int> all = yi;
        all.insert(all.end(), xi.begin(), xi.end());
        std::sort(all.begin(), all.end());
        if (int(all.size()) != s.ell + 1 || all.back() - all.front() != s.ell)
            throw ShapeError("row " + std::to_string(k) + " is not a horizontal chain");
        if (!xi.empty() && !yi.empty() && *std::max_element(yi.begin(), yi.end()) > *std::min_element(xi.begin(), xi.end()))
            throw ShapeError("completed part is not to the left in row " + std::to_string(k));
        if (yi.empty()) throw ShapeError("row " + std::to_string(k) + " has no completed part");
        if (xi.empty()) d.offsets[k] = all.front() - prev_start;
        prev_start = all.front();
    }
    std::vector<int> free_idx;
    for (int k = 0; k <= V; ++k)
        if (!xrows.count(k + V + 1)) free_idx.push_back(k);
    for (Bundle p : d.z) {
        bool fr = std::find(free_idx.begin(), free_idx.end(), p.j) != free_idx.end();
        (fr ? d.z_free : d.z_residual).push_back(p);
    }
    if (!d.z_residual.empty()) {
        int k0 = d.z_residual.back().j;
        Bundle r = d.z_residual.back();
        for (Bundle p : d.z_residual)
            if (p.j == k0) r = std::max(r, p);
        d.layers.push_back({kMinusInf, r - Bundle{s.ell, 0}, r});
    }
    for (int k : free_idx) {
        Bundle lo{0, 0}, hi{0, 0};
        bool first = true;
        for (Bundle p : d.z_free)
            if (p.j == k) {
                if (first) lo = hi = p;
                lo = std::min(lo, p);
                hi = std::max(hi, p);
                first = false;
            }
        d.layers.push_back({k, lo, hi});
    }
    if (!d.x.empty()) {
        Bundle l = d.x.front();
        d.layers.push_back({kPlusInf, l, l + Bundle{s.ell, 0}});
    }
    return d;
}

std::vector<int> displaced_layers(const VarietySpec&, const LayerDecomposition& d) {
    std::vector<int> out;
    for (std::size_t b = 0; b < d.layers.size(); ++b)
        for (std::size_t a = 0; a < b; ++a)
            if (!nef_le(d.layers[a].left, d.layers[b].left)) {
                out.push_back(d.layers[b].index);
                break;
            }
    return out;
}

std::vector<int> bad_layers(const VarietySpec& s, const LayerDecomposition& d) {
    std::vector<int> out;
    for (std::size_t b = 0; b < d.layers.size(); ++b)
        for (std::size_t a = 0; a < b; ++a)
            if (!nef_le(d.layers[a].left, d.layers[b].left) &&
                !in_effective_cone(s, d.layers[b].left - d.layers[a].right)) {
                out.push_back(d.layers[b].index);
                break;
            }
    return out;
}

bool has_displaced_layer(const VarietySpec& s, const LayerDecomposition& d) { return !displaced_layers(s, d).empty(); }
bool has_bad_layer(const VarietySpec& s, const LayerDecomposition& d) { return !bad_layers(s, d).empty(); }

bool strongness_by_layers(const VarietySpec& s, const std::vector<Bundle>& set) {
    return !has_displaced_layer(s, decompose_layers(s, set));
}

bool effectiveness_by_layers(const VarietySpec& s, const std::vector<Bundle>& set) {
    return !has_bad_layer(s, decompose_layers(s, set));
}

ThresholdCheck acyclicity_threshold(const VarietySpec& s, int window) {
    require_toric(s);
    if (window < 0) window = std::max(12, s.alpha * s.v + s.ell + 2);
    ThresholdCheck t;
    t.closed_form = s.ell >= s.alpha * s.v;
    t.scan = true;
    for (int j = -window; j <= window && t.scan; ++j)
        for (int i = -window; i <= window; ++i) {
            Bundle p{i, j};
            if (is_effective(s, p) && is_immaculate(s, -p) && !is_acyclic(s, p)) {
                t.scan = false;
                t.witness = p;
                break;
            }
        }
    return t;
}

std::vector<Bundle> vertical_lex(std::vector<Bundle> seq) {
    std::sort(seq.begin(), seq.end(), vlex_less);
    return seq;
}

std::vector<Bundle> horizontal_lex(std::vector<Bundle> seq) {
    std::sort(seq.begin(), seq.end(), hlex_less);
    return seq;
}

std::vector<Bundle> sigma_involution(std::vector<Bundle> seq) {
    for (Bundle& p : seq) p = swap_coords(p);
    return seq;
}

std::vector<Bundle> twist_all(std::vector<Bundle> seq, Bundle t) {
    for (Bundle& p : seq) p = p + t;
    return seq;
}

std::string layer_name(int index) {
    if (index == kMinusInf) return "-inf";
    if (index == kPlusInf) return "inf";
    return std::to_string(index);
}

}  // namespace exseq
