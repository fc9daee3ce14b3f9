#include "exseq_tools/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <mutex>
#include <set>

#include "exseq/chow.hpp"
#include "exseq/cohomology.hpp"
#include "exseq/mutation.hpp"
#include "exseq/parallel.hpp"
#include "exseq/poset.hpp"
#include "exseq/rouquier.hpp"
#include "exseq/toric.hpp"
#include "exseq/x2.hpp"

namespace exseq::tools {

namespace {

using Seq = std::vector<Bundle>;
using PairList = std::vector<std::pair<int, int>>;  // 1-based positions

struct CriterionInfo {
    const char* id;
    const char* section;
    double limit;
};

const CriterionInfo kCriteria[] = {
    {"cohomology-sanity", "cohomology", 10},
    {"immaculate-strips", "cohomology", 5},
    {"exceptional-orders", "posets", 60},
    {"layer-criteria", "toric", 300},
    {"acyclicity-threshold", "toric", 0},
    {"x2-classification", "x2", 300},
    {"x2-strongness-table", "x2", 0},
    {"orlov-reduction", "mutation", 120},
    {"kernel-chern-class", "chow", 0},
    {"rouquier-dimension", "rouquier", 30},
    {"gap-points", "x2", 0},
};

const std::vector<Seq>& x2_window8() {
    static const std::vector<Seq> sets = enumerate_mes_x2(8);
    return sets;
}

json bundles_json(const Seq& s) { return to_json(s); }

PairList pairs_of(const Relation& r) {
    PairList out;
    for (auto [a, b] : r.pairs()) out.push_back({int(a) + 1, int(b) + 1});
    std::sort(out.begin(), out.end());
    return out;
}

json pairs_json(const PairList& p) {
    json a = json::array();
    for (auto [x, y] : p) a.push_back(json::array({x, y}));
    return a;
}

PairList block(int ilo, int ihi, int jlo, int jhi) {
    PairList out;
    for (int i = ilo; i <= ihi; ++i)
        for (int j = jlo; j <= jhi; ++j) out.push_back({i, j});
    return out;
}

// ---------------------------------------------------------------- 1
void cohomology_sanity(Verdict& v) {
    std::vector<VarietySpec> specs{VarietySpec::toric(1, 1, {0, -2}), VarietySpec::toric(4, 3, {0, -1, -1}),
                                   VarietySpec::toric(4, 3, {0, 0, 0}), VarietySpec::cotangent(2), VarietySpec::cotangent(3)};
    json per = json::array();
    bool ok = true;
    for (const auto& s : specs) {
        int serre = 0, region = 0, oracle = 0, points = 0;
        json example;
        Bundle k = canonical_bundle(s);
        int dim = dim_variety(s);
        for (int i = -12; i <= 12; ++i)
            for (int j = -12; j <= 12; ++j) {
                Bundle L{i, j};
                ++points;
                CohomologyVector h = h_dims(s, L);
                CohomologyVector d = h_dims(s, k - L);
                for (int q = 0; q <= dim; ++q)
                    if (h[std::size_t(q)] != d[std::size_t(dim - q)]) {
                        ++serre;
                        if (example.is_null()) example = {{"kind", "serre"}, {"L", to_json(L)}};
                        break;
                    }
                std::uint64_t support = 0;
                for (std::size_t q = 0; q < h.size(); ++q)
                    if (h[q] != 0) support |= std::uint64_t(1) << q;
                if (support != nonzero_degrees(s, L)) {
                    ++region;
                    if (example.is_null()) example = {{"kind", "region"}, {"L", to_json(L)}};
                }
                if (s.kind == Kind::CotangentProj && h != oracle_cotangent(s, L, 64)) {
                    ++oracle;
                    if (example.is_null()) example = {{"kind", "oracle"}, {"L", to_json(L)}};
                }
            }
        per.push_back({{"spec", s.name()}, {"points", points}, {"serre_failures", serre}, {"region_failures", region},
                       {"oracle_failures", oracle}, {"first_failure", example}});
        ok = ok && serre == 0 && region == 0 && oracle == 0;
    }
    v.details["specs"] = per;
    v.status = ok ? Status::Pass : Status::Fail;
}

// ---------------------------------------------------------------- 2
void immaculate_strips(Verdict& v, const VerifyOptions& opt) {
    VarietySpec s = VarietySpec::cotangent(2);
    auto pieces = immaculate_pieces(s);
    int strips = 0;
    for (const auto& p : pieces) strips += p.type == ImmPiece::Type::Strip;
    int mism = 0;
    json first;
    for (int i = -12; i <= 12; ++i)
        for (int j = -12; j <= 12; ++j)
            if (in_immaculate_pieces(s, {i, j}) != is_immaculate(s, {i, j})) {
                ++mism;
                if (first.is_null()) first = to_json(Bundle{i, j});
            }
    MagnitudeReport rep = magnitude_discrepancy_report(2, 8);
    json r;
    r["ell"] = rep.ell;
    r["window"] = rep.window;
    r["points"] = rep.points;
    r["printed_mismatches"] = rep.mismatches.size();
    r["region_degree_mismatches"] = rep.region_degree_mismatches;
    json sample = json::array();
    for (std::size_t k = 0; k < rep.mismatches.size() && k < 20; ++k)
        sample.push_back({{"L", to_json(rep.mismatches[k].L)}, {"printed", rep.mismatches[k].printed}, {"oracle", rep.mismatches[k].oracle}});
    r["mismatch_sample"] = sample;
    auto subs = [](const std::vector<Substitution>& xs) {
        json a = json::array();
        for (const auto& x : xs) a.push_back({{"i", {x.a, x.b, x.e}}, {"j", {x.c, x.d, x.f}}});
        return a;
    };
    r["naive_substitutions"] = subs(rep.naive_substitutions);
    r["generalized_substitutions"] = subs(rep.poly_substitutions);
    v.details["strips"] = strips;
    v.details["strip_mismatches"] = mism;
    v.details["first_mismatch"] = first;
    v.details["magnitude_report"] = r;
    bool archived = true;
    if (!opt.archive_dir.empty()) {
        std::filesystem::create_directories(opt.archive_dir);
        std::string path = opt.archive_dir + "/magnitude_report.json";
        write_text(path, r.dump(2) + "\n");
        v.details["archived_to"] = path;
    } else {
        archived = false;
        v.details["archived_to"] = nullptr;
    }
    bool ok = strips == 3 && mism == 0 && rep.region_degree_mismatches == 0 && rep.points > 0;
    if (!archived) v.details["note"] = "no archive directory given";
    v.status = ok && archived ? Status::Pass : Status::Fail;
}

// ---------------------------------------------------------------- 3
void exceptional_orders_check(Verdict& v) {
    VarietySpec s = x2_spec();
    const auto& sets = x2_window8();
    int bad = 0;
    long perms_checked = 0;
    json first;
    for (const auto& set : sets) {
        std::vector<std::size_t> idx(set.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
        std::set<std::vector<std::size_t>> exc;
        do {
            Seq seq;
            for (std::size_t k : idx) seq.push_back(set[k]);
            ++perms_checked;
            if (is_exceptional_sequence(s, seq)) exc.insert(idx);
        } while (std::next_permutation(idx.begin(), idx.end()));
        bool trunc = false;
        auto ext = linear_extensions(associated_poset(s, set), set, 100000, &trunc);
        std::set<std::vector<std::size_t>> lin(ext.begin(), ext.end());
        if (trunc || lin != exc) {
            ++bad;
            if (first.is_null()) first = {{"set", bundles_json(set)}, {"exceptional", exc.size()}, {"extensions", lin.size()}};
        }
    }
    v.details["sets"] = sets.size();
    v.details["permutations"] = perms_checked;
    v.details["mismatching_sets"] = bad;
    v.details["first_mismatch"] = first;
    v.status = bad == 0 && !sets.empty() ? Status::Pass : Status::Fail;
}

// ---------------------------------------------------------------- 4
void layer_criteria(Verdict& v, const VerifyOptions& opt) {
    auto grid = toric_grid(3, 3, 2);
    std::vector<long> counts(grid.size(), 0), mism(grid.size(), 0);
    std::vector<json> firsts(grid.size());
    parallel_for(
        grid.size(),
        [&](std::size_t g) {
            const auto& s = grid[g];
            for (const auto& m : enumerate_mes(s, 3, false)) {
                ++counts[g];
                bool exc = is_maximal_exceptional(s, m.bundles);
                bool st = exc && is_strongly_exceptional(s, m.bundles);
                bool ef = exc && is_effective_set(s, m.bundles);
                auto d = decompose_layers(s, m.bundles);
                bool lst = !has_displaced_layer(s, d), lef = !has_bad_layer(s, d);
                if (!exc || st != lst || ef != lef) {
                    if (mism[g]++ == 0)
                        firsts[g] = {{"spec", s.name()}, {"set", bundles_json(m.bundles)}, {"strong", st}, {"strong_by_layers", lst},
                                     {"effective", ef}, {"effective_by_layers", lef}, {"maximal_exceptional", exc}};
                }
            }
        },
        opt.threads);
    long total = 0, bad = 0;
    json first;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        total += counts[g];
        bad += mism[g];
        if (first.is_null() && !firsts[g].is_null()) first = firsts[g];
    }
    v.details["specs"] = grid.size();
    v.details["sets"] = total;
    v.details["mismatches"] = bad;
    v.details["first_mismatch"] = first;
    v.status = bad == 0 && total > 0 ? Status::Pass : Status::Fail;
}

// ---------------------------------------------------------------- 5
void acyclicity(Verdict& v) {
    auto grid = toric_grid(3, 3, 2);
    grid.push_back(VarietySpec::toric(2, 2, {0, -2}));
    grid.push_back(VarietySpec::toric(4, 3, {0, -1, -1}));
    int bad = 0;
    json rows = json::array();
    for (const auto& s : grid) {
        ThresholdCheck t = acyclicity_threshold(s);
        if (t.closed_form != t.scan) {
            ++bad;
            rows.push_back({{"spec", s.name()}, {"closed_form", t.closed_form}, {"scan", t.scan}, {"witness", to_json(t.witness)}});
        }
    }
    ThresholdCheck left = acyclicity_threshold(VarietySpec::toric(2, 2, {0, -2}));
    ThresholdCheck right = acyclicity_threshold(VarietySpec::toric(4, 3, {0, -1, -1}));
    v.details["specs"] = grid.size();
    v.details["disagreements"] = rows;
    v.details["l2_v2_a2"] = {{"closed_form", left.closed_form}, {"scan", left.scan}, {"witness", to_json(left.witness)}};
    v.details["l4_v3_a1"] = {{"closed_form", right.closed_form}, {"scan", right.scan}};
    bool ok = bad == 0 && !left.closed_form && !left.scan && right.closed_form && right.scan;
    v.status = ok ? Status::Pass : Status::Fail;
}

// ---------------------------------------------------------------- 6
bool fits_window(const Seq& canon, int w) {
    for (Bundle p : canon)
        if (p.j < 0 || p.j > w || p.i < -w || p.i > w) return false;
    return true;
}

void x2_classification(Verdict& v) {
    const int w = 8;
    const auto& sets = x2_window8();
    std::set<Seq> found(sets.begin(), sets.end());
    std::map<std::string, int> counts;
    json unclassified = json::array();
    std::map<std::string, std::set<int>> params;
    for (const auto& s : sets) {
        MesClassLabel l = classify(s);
        if (l.cls == MesClass::Unclassified || canonical_set(reconstruct(l)) != s) {
            unclassified.push_back(bundles_json(s));
            continue;
        }
        ++counts[class_name(l.cls, l.sigma_applied)];
        for (const auto& any : classify_all(s))
            if (any.cls == MesClass::I) params[class_name(MesClass::I, any.sigma_applied) + " #" + std::to_string(any.helix_index + 1)].insert(*any.parameter);
    }
    json missing = json::array();
    std::set<std::string> classes_seen;
    auto expect = [&](Seq t, const std::string& name) {
        Seq c = canonical_set(t);
        if (!fits_window(c, w)) return;
        if (!found.count(c))
            missing.push_back({{"class", name}, {"set", bundles_json(c)}});
        else
            classes_seen.insert(name.substr(0, name.find(' ')));
    };
    for (bool sigma : {false, true}) {
        auto sg = [&](Seq t) {
            if (sigma)
                for (Bundle& p : t) p = swap_coords(p);
            return t;
        };
        for (MesClass c : {MesClass::II, MesClass::III, MesClass::IV, MesClass::V})
            for (int k = 0; k < 6; ++k) expect(sg(class_template(c, k)), class_name(c, sigma) + " #" + std::to_string(k + 1));
        for (int k = 0; k < 3; ++k)
            for (int a = -3 * w; a <= 3 * w; ++a)
                expect(sg(class_template(MesClass::I, k, a)), class_name(MesClass::I, sigma) + " #" + std::to_string(k + 1) + " a=" + std::to_string(a));
    }
    json pj = json::object();
    for (auto& [k, s] : params) pj[k] = std::vector<int>(s.begin(), s.end());
    v.details["window"] = w;
    v.details["sets"] = sets.size();
    v.details["by_class"] = counts;
    v.details["class_i_parameters"] = pj;
    v.details["unclassified"] = unclassified;
    v.details["missing"] = missing;
    bool all_classes = true;
    for (const char* c : {"i", "i'", "ii", "iii", "iii'", "iv", "v"}) all_classes = all_classes && counts.count(c) > 0;
    v.details["all_classes_present"] = all_classes;
    v.status = unclassified.empty() && missing.empty() && all_classes ? Status::Pass : Status::Fail;
}

// ---------------------------------------------------------------- 7
struct PrintedEntry {
    MesClass cls;
    int k;
    std::vector<int> samples;  // class i parameters; empty otherwise
    PairList expected;
    std::string range;
};

std::vector<PrintedEntry> printed_table() {
    std::vector<PrintedEntry> t;
    t.push_back({MesClass::I, 0, {1, 5, 6, 7, 8}, {}, "a>=1"});
    t.push_back({MesClass::I, 0, {-6, -7, -8}, block(1, 3, 4, 6), "a<=-6"});
    t.push_back({MesClass::I, 1, {5, 6, 7, 8}, {{3, 6}, {4, 6}, {5, 6}}, "a>=5"});
    t.push_back({MesClass::I, 1, {1}, {}, "a=1"});
    t.push_back({MesClass::I, 1, {-4, -5, -6, -7, -8}, block(1, 2, 3, 5), "a<=-4"});
    t.push_back({MesClass::I, 2, {7, 8}, block(2, 4, 5, 6), "a>=7"});
    t.push_back({MesClass::I, 2, {1}, {}, "a=1"});
    t.push_back({MesClass::I, 2, {-4, -5, -6, -7, -8}, {{1, 2}, {1, 3}, {1, 4}}, "a<=-4"});
    for (int k = 0; k < 6; ++k) t.push_back({MesClass::II, k, {}, {}, ""});
    const PairList iii[6] = {{{2, 3}, {4, 5}}, {{1, 2}, {3, 4}}, {{2, 3}}, {{1, 2}, {5, 6}}, {{4, 5}}, {{3, 4}, {5, 6}}};
    const PairList ivv[6] = {{{3, 4}}, {{2, 3}, {5, 6}}, {{1, 2}, {4, 5}}, {{3, 4}}, {{2, 3}, {5, 6}}, {{1, 2}, {4, 5}}};
    for (int k = 0; k < 6; ++k) t.push_back({MesClass::III, k, {}, iii[k], ""});
    for (int k = 0; k < 6; ++k) t.push_back({MesClass::IV, k, {}, ivv[k], ""});
    for (int k = 0; k < 6; ++k) t.push_back({MesClass::V, k, {}, ivv[k], ""});
    return t;
}

void strongness_table(Verdict& v) {
    VarietySpec s = x2_spec();
    json failures = json::array();
    int checked = 0, consistency = 0;
    for (const auto& e : printed_table()) {
        std::vector<int> as = e.samples.empty() ? std::vector<int>{0} : e.samples;
        for (int a : as) {
            Seq seq = class_template(e.cls, e.k, a);
            PairList got = pairs_of(pf0_table(seq));
            ++checked;
            if (got.empty() != is_strongly_exceptional(s, seq)) ++consistency;
            if (got != e.expected) {
                json f = {{"class", class_name(e.cls, false)}, {"sequence", e.k + 1}, {"expected", pairs_json(e.expected)}, {"computed", pairs_json(got)}};
                if (!e.samples.empty()) {
                    f["a"] = a;
                    f["printed_range"] = e.range;
                }
                failures.push_back(f);
            }
        }
    }
    // printed rows matched against rotated computed rows, as a diagnostic
    json rotations = json::object();
    const auto table = printed_table();
    for (MesClass c : {MesClass::III, MesClass::IV, MesClass::V}) {
        std::vector<int> shifts;
        for (int r = 0; r < 6; ++r) {
            bool all = true;
            for (const auto& e : table)
                if (e.cls == c && pairs_of(pf0_table(class_template(c, (e.k + r) % 6))) != e.expected) all = false;
            if (all) shifts.push_back(r);
        }
        rotations[class_name(c, false)] = shifts;
    }
    json cyclic = json::object();
    bool cyc_ok = true;
    for (int k = 0; k < 3; ++k) {
        bool c = strongly_cyclic(class_template(MesClass::I, k, 1));
        cyclic["i #" + std::to_string(k + 1) + " a=1"] = c;
        cyc_ok = cyc_ok && c;
    }
    bool ii_cyclic = strongly_cyclic(class_template(MesClass::II, 0));
    cyclic["ii"] = ii_cyclic;
    cyc_ok = cyc_ok && ii_cyclic;
    json transitions = json::object();
    for (int k = 0; k < 3; ++k) {
        json row = json::object();
        for (int a = -8; a <= 8; ++a) row[std::to_string(a)] = pairs_json(pairs_of(pf0_table(class_template(MesClass::I, k, a))));
        transitions["i #" + std::to_string(k + 1)] = row;
    }
    v.details["entries_checked"] = checked;
    v.details["mismatches"] = failures;
    v.details["matching_rotations"] = rotations;
    v.details["strongly_cyclic"] = cyclic;
    v.details["strongness_consistency_failures"] = consistency;
    v.details["class_i_transitions"] = transitions;
    v.status = failures.empty() && cyc_ok && consistency == 0 ? Status::Pass : Status::Fail;
}

// ---------------------------------------------------------------- 8
void orlov_reduction(Verdict& v) {
    VarietySpec s = x2_spec();
    const auto& sets = x2_window8();
    int ok = 0;
    json failures = json::array();
    std::map<std::string, int> steps;
    for (const auto& set : sets) {
        try {
            DerivationTrace t = reduce_to_orlov(set);
            Seq fin = replay(t);
            if (!is_orlov_type(s, fin, t.projection)) throw std::logic_error("final sequence is not Orlov type");
            for (const auto& st : t.steps) ++steps[step_name(st.kind)];
            ++ok;
        } catch (const std::exception& e) {
            failures.push_back({{"set", bundles_json(set)}, {"error", e.what()}});
        }
    }
    v.details["sets"] = sets.size();
    v.details["reduced"] = ok;
    v.details["step_counts"] = steps;
    v.details["failures"] = failures;
    v.status = failures.empty() && ok == int(sets.size()) && ok > 0 ? Status::Pass : Status::Fail;
}

// ---------------------------------------------------------------- 9
void kernel_chern(Verdict& v) {
    BananaCheck b = verify_banana_ses();
    ChowRing ring(2, {3, 3});
    auto num = ring.add(ring.sub(ring.one(), ring.scale(ring.h(), 3)), ring.scale(ring.monomial(2, 0), 3));
    auto q = divide_total_chern(ring, num, ring.linear(0, 1));
    v.details["division"] = b.division;
    v.details["product"] = b.product;
    v.details["coordinates"] = b.coordinates;
    v.details["control_rejected"] = b.control_rejected;
    v.details["quotient"] = ring.format(q);
    v.status = b.ok() ? Status::Pass : Status::Fail;
}

// ---------------------------------------------------------------- 10
void rouquier_check(Verdict& v) {
    bool ok = true;
    json cot = json::array();
    for (int l = 2; l <= 4; ++l) {
        VarietySpec s = VarietySpec::cotangent(l);
        TiltingSpec t = orlov_tilting(s, default_gaps(s));
        int i0 = compute_i0(t);
        RouquierResult r = rouquier_dimension(s);
        bool good = i0 == 0 && r.exact && r.lower == 2 * l - 1 && r.upper == 2 * l - 1;
        ok = ok && good;
        cot.push_back({{"spec", s.name()}, {"i0", i0}, {"rouquier", r.lower}, {"exact", r.exact}, {"generation_time", generation_time_bound(t)}});
    }
    int toric_checked = 0;
    json toric_bad = json::array();
    for (const auto& s : toric_grid(3, 3, 3)) {
        if (s.ell + 1 < s.beta) continue;
        ++toric_checked;
        auto gaps = default_gaps(s);
        int i0 = -1;
        if (is_strong_sequence(s, orlov_sequence(s, gaps))) i0 = compute_i0(orlov_tilting(s, gaps));
        RouquierResult r = rouquier_dimension(s);
        if (i0 != 0 || !r.exact || r.lower != dim_variety(s) || anticanonical_nef(s) != true)
            toric_bad.push_back({{"spec", s.name()}, {"i0", i0}, {"exact", r.exact}});
    }
    ok = ok && toric_bad.empty() && toric_checked > 0;
    // X_3 dual: strong iff every gap >= ell - 1, both directions on a box of gap vectors
    VarietySpec d = VarietySpec::tangent_dual(3);
    int agree = 0, disagree = 0;
    json dis = json::array();
    for (int g1 = 0; g1 <= 4; ++g1)
        for (int g2 = 0; g2 <= 4; ++g2) {
            bool strong = is_strong_sequence(d, orlov_sequence(d, {g1, g2}));
            bool crit = g1 >= 2 && g2 >= 2;
            if (strong == crit)
                ++agree;
            else {
                ++disagree;
                dis.push_back(json::array({g1, g2}));
            }
        }
    RouquierResult rd = rouquier_dimension(d);
    bool dual_ok = disagree == 0 && !rd.exact && rd.lower == 5 && rd.upper == 8;
    ok = ok && dual_ok;
    v.details["cotangent"] = cot;
    v.details["toric_checked"] = toric_checked;
    v.details["toric_failures"] = toric_bad;
    v.details["dual_criterion_agree"] = agree;
    v.details["dual_criterion_disagree"] = dis;
    v.details["dual_interval"] = json::array({rd.lower, rd.upper});
    v.status = ok ? Status::Pass : Status::Fail;
}

// ---------------------------------------------------------------- 11
void gap_points_check(Verdict& v) {
    const auto& sets = x2_window8();
    int bad = 0, prec = 0;
    json first;
    for (const auto& s : sets) {
        GapReport g = gap_points(s);
        bool ok = g.valid && s.size() == 6 && g.gaps.size() == 3;
        for (auto [d, c] : g.diagonal_counts) ok = ok && c == 2;
        if (!ok) {
            ++bad;
            if (first.is_null()) first = bundles_json(s);
        }
        if (!diagonal_precedence_holds(s)) ++prec;
    }
    v.details["sets"] = sets.size();
    v.details["failures"] = bad;
    v.details["precedence_failures"] = prec;
    v.details["first_failure"] = first;
    v.status = bad == 0 && prec == 0 && !sets.empty() ? Status::Pass : Status::Fail;
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "?";
}

json to_json(const Verdict& v) {
    return {{"criterion", v.criterion}, {"id", v.id}, {"section", v.section}, {"status", status_name(v.status)},
            {"seconds", v.seconds}, {"limit_seconds", v.limit_seconds}, {"details", v.details}};
}

int criterion_count() { return int(std::size(kCriteria)); }

std::string criterion_id(int n) {
    if (n < 1 || n > criterion_count()) throw std::out_of_range("no such criterion");
    return kCriteria[n - 1].id;
}

std::string criterion_section(int n) {
    if (n < 1 || n > criterion_count()) throw std::out_of_range("no such criterion");
    return kCriteria[n - 1].section;
}

std::vector<std::string> section_names() {
    std::vector<std::string> out;
    for (const auto& c : kCriteria)
        if (std::find(out.begin(), out.end(), c.section) == out.end()) out.push_back(c.section);
    return out;
}

std::vector<VarietySpec> toric_grid(int max_ell, int max_v, int max_alpha) {
    std::vector<VarietySpec> out;
    for (int l = 1; l <= max_ell; ++l)
        for (int V = 1; V <= max_v; ++V) {
            std::vector<int> c;
            auto rec = [&](auto&& self, int prev) -> void {
                if (int(c.size()) == V) {
                    try {
                        out.push_back(VarietySpec::toric(l, V, c));
                    } catch (const std::invalid_argument&) {
                    }
                    return;
                }
                for (int x = prev; x >= -max_alpha; --x) {
                    c.push_back(x);
                    self(self, x);
                    c.pop_back();
                }
            };
            rec(rec, 0);
        }
    return out;
}

Verdict run_criterion(int n, const VerifyOptions& opt) {
    Verdict v;
    v.criterion = n;
    v.id = criterion_id(n);
    v.section = criterion_section(n);
    v.limit_seconds = kCriteria[n - 1].limit;
    v.details = json::object();
    auto t0 = std::chrono::steady_clock::now();
    try {
        switch (n) {
        case 1: cohomology_sanity(v); break;
        case 2: immaculate_strips(v, opt); break;
        case 3: exceptional_orders_check(v); break;
        case 4: layer_criteria(v, opt); break;
        case 5: acyclicity(v); break;
        case 6: x2_classification(v); break;
        case 7: strongness_table(v); break;
        case 8: orlov_reduction(v); break;
        case 9: kernel_chern(v); break;
        case 10: rouquier_check(v); break;
        case 11: gap_points_check(v); break;
        }
    } catch (const std::exception& e) {
        v.status = Status::Fail;
        v.details["exception"] = e.what();
    }
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.limit_seconds > 0 && v.seconds > v.limit_seconds) {
        v.status = Status::Fail;
        v.details["time_limit_exceeded"] = true;
    }
    return v;
}

std::vector<Verdict> run_section(const std::string& section, const VerifyOptions& opt) {
    std::vector<Verdict> out;
    for (int n = 1; n <= criterion_count(); ++n)
        if (section == "all" || criterion_section(n) == section) out.push_back(run_criterion(n, opt));
    if (out.empty()) throw std::invalid_argument("unknown section '" + section + "'");
    return out;
}

}  // namespace exseq::tools
