#include "exseq/x2.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "exseq/cohomology.hpp"
#include "exseq/mutation.hpp"
#include "exseq/parallel.hpp"

namespace exseq {

VarietySpec x2_spec() { return VarietySpec::cotangent(2); }

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

using Seq = std::vector<Bundle>;

Seq sigma_seq(Seq s) {
    for (Bundle& p : s) p = swap_coords(p);
    return s;
}

const std::vector<Seq>& fixed_templates(MesClass c) {
    static const std::vector<Seq> ii{
        {{0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {1, 3}}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}},
        {{0, 0}, {-1, 1}, {0, 1}, {0, 2}, {1, 1}, {1, 2}}, {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 1}},
        {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 1}, {1, 2}}, {{0, 0}, {1, -1}, {1, 0}, {2, 0}, {1, 1}, {2, 1}}};
    static const std::vector<Seq> iii{
        {{0, 0}, {-2, 1}, {-1, 1}, {0, 2}, {1, 2}, {-1, 3}}, {{0, 0}, {1, 0}, {2, 1}, {3, 1}, {1, 2}, {4, 1}},
        {{0, 0}, {1, 1}, {2, 1}, {0, 2}, {3, 1}, {1, 2}},    {{0, 0}, {1, 0}, {-1, 1}, {2, 0}, {0, 1}, {1, 1}},
        {{0, 0}, {-2, 1}, {1, 0}, {-1, 1}, {0, 1}, {1, 2}},  {{0, 0}, {3, -1}, {1, 0}, {2, 0}, {3, 1}, {4, 1}}};
    static const std::vector<Seq> iv{
        {{0, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {1, 4}},    {{0, 0}, {2, 0}, {0, 1}, {1, 1}, {1, 3}, {2, 1}},
        {{0, 0}, {-2, 1}, {-1, 1}, {-1, 3}, {0, 1}, {0, 2}}, {{0, 0}, {1, 0}, {1, 2}, {2, 0}, {2, 1}, {4, 1}},
        {{0, 0}, {0, 2}, {1, 0}, {1, 1}, {3, 1}, {1, 2}},    {{0, 0}, {1, -2}, {1, -1}, {3, -1}, {1, 0}, {2, 0}}};
    static const std::vector<Seq> v{
        {{0, 0}, {0, 2}, {1, 2}, {-1, 3}, {1, 3}, {1, 4}}, {{0, 0}, {1, 0}, {-1, 1}, {1, 1}, {1, 2}, {2, 0}},
        {{0, 0}, {-2, 1}, {0, 1}, {0, 2}, {1, 0}, {1, 2}}, {{0, 0}, {2, 0}, {2, 1}, {3, -1}, {3, 1}, {4, 1}},
        {{0, 0}, {0, 1}, {1, -1}, {1, 1}, {2, 1}, {0, 2}}, {{0, 0}, {1, -2}, {1, 0}, {2, 0}, {0, 1}, {2, 1}}};
    switch (c) {
    case MesClass::II: return ii;
    case MesClass::III: return iii;
    case MesClass::IV: return iv;
    case MesClass::V: return v;
    default: throw std::invalid_argument("no fixed templates for this class");
    }
}

bool pair_ok(const VarietySpec& s, Bundle a, Bundle b) { return is_immaculate(s, a - b) || is_immaculate(s, b - a); }

}  // namespace

std::string color_name(Color c) {
    switch (c) {
    case Color::Blue: return "blue";
    case Color::Green: return "green";
    case Color::Red: return "red";
    case Color::Mixed: return "mixed";
    case Color::NonImmaculate: return "non-immaculate";
    }
    return "?";
}

Color color_of(Bundle L) {
    int a = mod3(L.i), b = mod3(L.j);
    if ((a == 2 && b == 0) || (a == 0 && b == 2)) return Color::Blue;
    if (b == 1 && a != 1) return Color::Red;
    if (a == 1 && b != 1) return Color::Green;
    if (a == 1 && b == 1) return Color::Mixed;
    return Color::NonImmaculate;
}

Seq canonical_set(Seq set) {
    if (set.empty()) return set;
    std::sort(set.begin(), set.end(), vlex_less);
    Bundle m = set.front();
    for (Bundle& p : set) p = p - m;
    return set;
}

std::vector<Seq> enumerate_mes_x2(int window, unsigned threads) {
    VarietySpec s = x2_spec();
    std::vector<Bundle> cands;
    for (int j = 0; j <= window; ++j)
        for (int i = -window; i <= window; ++i) {
            Bundle p{i, j};
            if (j == 0 && i <= 0) continue;
            if (pair_ok(s, {0, 0}, p)) cands.push_back(p);
        }
    std::set<Seq> found;
    std::mutex m;
    auto worker = [&](std::size_t first) {
        std::vector<Seq> local;
        Seq cur{{0, 0}, cands[first]};
        int diag[3] = {0, 0, 0};
        std::set<std::pair<int, int>> classes;
        auto put = [&](Bundle p, int d) {
            diag[(mod3(p.i) - mod3(p.j) + 3) % 3] += d;
            if (d > 0)
                classes.insert({mod3(p.i), mod3(p.j)});
            else
                classes.erase({mod3(p.i), mod3(p.j)});
        };
        for (Bundle p : cur) put(p, 1);
        if (classes.size() != 2 || diag[(mod3(cands[first].i) - mod3(cands[first].j) + 3) % 3] > 2) return;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (cur.size() == 6) {
                if (is_exceptional_set(s, cur)) local.push_back(cur);
                return;
            }
            for (std::size_t k = start; k < cands.size(); ++k) {
                Bundle p = cands[k];
                if (classes.count({mod3(p.i), mod3(p.j)})) continue;
                if (diag[(mod3(p.i) - mod3(p.j) + 3) % 3] >= 2) continue;
                bool ok = true;
                for (Bundle q : cur)
                    if (!pair_ok(s, p, q)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                cur.push_back(p);
                put(p, 1);
                self(self, k + 1);
                put(p, -1);
                cur.pop_back();
            }
        };
        rec(rec, first + 1);
        std::lock_guard<std::mutex> g(m);
        for (auto& x : local) found.insert(canonical_set(x));
    };
    parallel_for(cands.size(), worker, threads);
    return {found.begin(), found.end()};
}

GapReport gap_points(const Seq& mes) {
    GapReport r;
    std::set<std::pair<int, int>> img;
    for (Bundle p : mes) img.insert({mod3(p.i), mod3(p.j)});
    r.injective = img.size() == mes.size();
    for (int d = 0; d < 3; ++d) r.diagonal_counts[d] = 0;
    for (auto [a, b] : img) ++r.diagonal_counts[(a - b + 3) % 3];
    bool ok = r.injective;
    for (int d = 0; d < 3; ++d) {
        std::vector<QuotientClass> missing;
        for (int t = 0; t < 3; ++t)
            if (!img.count({(t + d) % 3, t})) missing.push_back({(t + d) % 3, t});
        if (missing.size() == 1)
            r.gaps[d] = missing.front();
        else
            ok = false;
        if (r.diagonal_counts[d] > 2) ok = false;
    }
    r.valid = ok;
    return r;
}

bool diagonal_precedence_holds(const Seq& mes) {
    VarietySpec s = x2_spec();
    GapReport g = gap_points(mes);
    if (!g.valid) return false;
    Relation p = associated_poset(s, mes);
    auto over = [&](QuotientClass q) {
        for (std::size_t k = 0; k < mes.size(); ++k)
            if (mod3(mes[k].i) == q.r1 && mod3(mes[k].j) == q.r2) return k;
        throw std::logic_error("class not hit");
    };
    for (auto [d, gap] : g.gaps) {
        std::size_t a = over({(gap.r1 + 1) % 3, (gap.r2 + 1) % 3});
        std::size_t b = over({(gap.r1 + 2) % 3, (gap.r2 + 2) % 3});
        if (!p.has(a, b)) return false;
    }
    return true;
}

std::string class_name(MesClass c, bool primed) {
    static const char* names[] = {"i", "ii", "iii", "iv", "v", "unclassified"};
    std::string n = names[int(c)];
    if (primed && c != MesClass::Unclassified) n += "'";
    return n;
}

int template_count(MesClass c) { return c == MesClass::I ? 3 : c == MesClass::Unclassified ? 0 : 6; }

Seq class_template(MesClass c, int k, int a) {
    if (c == MesClass::I) {
        switch (k) {
        case 0: return {{0, 0}, {1, 0}, {2, 0}, {a, 1}, {a + 1, 1}, {a + 2, 1}};
        case 1: return {{0, 0}, {1, 0}, {a - 1, 1}, {a, 1}, {a + 1, 1}, {1, 2}};
        case 2: return {{0, 0}, {a - 2, 1}, {a - 1, 1}, {a, 1}, {0, 2}, {1, 2}};
        default: throw std::out_of_range("class i has three sequences");
        }
    }
    const auto& t = fixed_templates(c);
    if (k < 0 || k >= int(t.size())) throw std::out_of_range("template index");
    return t[std::size_t(k)];
}

std::string label_name(const MesClassLabel& l) {
    std::string n = class_name(l.cls, l.sigma_applied);
    if (l.cls == MesClass::Unclassified) return n;
    n += " #" + std::to_string(l.helix_index + 1);
    if (l.parameter) n += " a=" + std::to_string(*l.parameter);
    return n;
}

Seq reconstruct(const MesClassLabel& l) {
    if (l.cls == MesClass::Unclassified) throw std::invalid_argument("cannot reconstruct an unclassified set");
    Seq t = class_template(l.cls, l.helix_index, l.parameter.value_or(0));
    if (l.sigma_applied) t = sigma_seq(t);
    for (Bundle& p : t) p = p + l.twist;
    return t;
}

std::vector<MesClassLabel> classify_all(const Seq& mes) {
    std::vector<MesClassLabel> out;
    if (mes.size() != 6) return out;
    Seq target = canonical_set(mes);
    Bundle base = *std::min_element(mes.begin(), mes.end(), vlex_less);
    int extent = 0;
    for (Bundle p : target) extent = std::max({extent, std::abs(p.i), std::abs(p.j)});
    auto try_match = [&](MesClass c, int k, std::optional<int> a, bool sigma) {
        Seq t = class_template(c, k, a.value_or(0));
        if (sigma) t = sigma_seq(t);
        if (canonical_set(t) != target) return;
        Bundle tmin = *std::min_element(t.begin(), t.end(), vlex_less);
        out.push_back({c, k, sigma, base - tmin, a});
    };
    // fixed classes before the class i family, unprimed before primed
    for (bool sigma : {false, true}) {
        for (MesClass c : {MesClass::II, MesClass::III, MesClass::IV, MesClass::V})
            for (int k = 0; k < 6; ++k) try_match(c, k, std::nullopt, sigma);
        for (int k = 0; k < 3; ++k)
            for (int a = -extent - 4; a <= extent + 4; ++a) try_match(MesClass::I, k, a, sigma);
    }
    return out;
}

MesClassLabel classify(const Seq& mes) {
    auto all = classify_all(mes);
    return all.empty() ? MesClassLabel{} : all.front();
}

Relation pf0_table(const Seq& seq) { return pf0(x2_spec(), seq); }

bool strongly_cyclic(const Seq& seq) {
    VarietySpec s = x2_spec();
    Seq cur = seq;
    for (std::size_t r = 0; r < seq.size(); ++r) {
        if (!is_strongly_exceptional(s, cur)) return false;
        cur = helix_right(s, cur);
    }
    return true;
}

}  // namespace exseq
