#include "exseq/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "exseq/cohomology.hpp"

namespace exseq {

Relation::Relation(std::size_t size) : n(size), rows(size, 0) {
    if (size > 64) throw std::invalid_argument("relations support at most 64 elements");
}

Relation Relation::diagonal(std::size_t size) {
    Relation r(size);
    for (std::size_t a = 0; a < size; ++a) r.add(a, a);
    return r;
}

bool Relation::contains(const Relation& other) const {
    for (std::size_t a = 0; a < n; ++a)
        if ((other.rows[a] & ~rows[a]) != 0) return false;
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && has(a, b)) out.emplace_back(a, b);
    return out;
}

Relation relation_minus(const Relation& a, const Relation& b) {
    Relation r(a.n);
    for (std::size_t x = 0; x < a.n; ++x) r.rows[x] = a.rows[x] & ~b.rows[x];
    return r;
}

namespace {

void check_distinct(const std::vector<Bundle>& set) {
    std::set<Bundle> seen(set.begin(), set.end());
    if (seen.size() != set.size()) throw std::invalid_argument("duplicate line bundles");
}

}  // namespace

bool is_exceptional_sequence(const VarietySpec& s, const std::vector<Bundle>& seq) {
    check_distinct(seq);
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (!is_immaculate(s, seq[a] - seq[b])) return false;
    return true;
}

Bundle delta(const VarietySpec& s, const std::vector<Bundle>& set, std::size_t a, std::size_t b) {
    Bundle d = set[b] - set[a];
    if (d != Bundle{} && !is_immaculate(s, d) && !is_immaculate(s, -d))
        throw std::domain_error("difference " + to_string(d) + " is neither immaculate nor anti-immaculate");
    return d;
}

Relation compute_F(const VarietySpec& s, const std::vector<Bundle>& set) {
    check_distinct(set);
    std::size_t n = set.size();
    Relation direct = Relation::diagonal(n);
    Relation via_delta = Relation::diagonal(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            // A - B not in -Imm
            if (!is_immaculate(s, -(set[a] - set[b]))) direct.add(a, b);
            Bundle d = delta(s, set, a, b);
            if (is_immaculate(s, -d) && !is_immaculate(s, d)) via_delta.add(a, b);
        }
    if (!(direct == via_delta)) throw std::logic_error("the two descriptions of F disagree");
    return direct;
}

Relation eff_relation(const VarietySpec& s, const std::vector<Bundle>& set) {
    std::size_t n = set.size();
    Relation r = Relation::diagonal(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            Bundle d = set[b] - set[a];
            if (is_effective(s, d) && is_immaculate(s, -d)) r.add(a, b);
        }
    return r;
}

Relation pf0(const VarietySpec& s, const std::vector<Bundle>& set) {
    return relation_minus(compute_F(s, set), eff_relation(s, set));
}

Relation transitive_hull(const Relation& r) {
    Relation h = r;
    for (std::size_t k = 0; k < h.n; ++k)
        for (std::size_t a = 0; a < h.n; ++a)
            if (h.has(a, k)) h.rows[a] |= h.rows[k];
    return h;
}

void check_antisymmetric(const Relation& r) {
    Relation h = transitive_hull(r);
    for (std::size_t a = 0; a < h.n; ++a)
        for (std::size_t b = a + 1; b < h.n; ++b)
            if (h.has(a, b) && h.has(b, a)) {
                // recover an explicit cycle a -> ... -> b -> ... -> a by BFS in r
                auto path = [&](std::size_t from, std::size_t to) {
                    std::vector<std::size_t> prev(r.n, r.n);
                    std::vector<std::size_t> queue{from};
                    prev[from] = from;
                    for (std::size_t q = 0; q < queue.size(); ++q) {
                        std::size_t x = queue[q];
                        for (std::size_t y = 0; y < r.n; ++y)
                            if (x != y && r.has(x, y) && prev[y] == r.n) {
                                prev[y] = x;
                                queue.push_back(y);
                            }
                    }
                    std::vector<std::size_t> p;
                    for (std::size_t x = to; x != from; x = prev[x]) p.push_back(x);
                    std::reverse(p.begin(), p.end());
                    return p;
                };
                std::vector<std::size_t> cycle{a};
                for (std::size_t x : path(a, b)) cycle.push_back(x);
                for (std::size_t x : path(b, a)) cycle.push_back(x);
                throw CycleError("relation is not antisymmetric", cycle);
            }
}

Relation associated_poset(const VarietySpec& s, const std::vector<Bundle>& set) {
    Relation f = compute_F(s, set);
    check_antisymmetric(f);
    return transitive_hull(f);
}

Relation extend_partial_order(const Relation& r, std::size_t x, std::size_t y) {
    if (x != y && r.has(y, x)) throw std::invalid_argument("reverse of the forced pair is already present");
    Relation q = r;
    q.add(x, y);
    Relation h = transitive_hull(q);
    check_antisymmetric(h);
    return h;
}

std::vector<std::vector<std::size_t>> linear_extensions(const Relation& p, const std::vector<Bundle>& labels, std::size_t limit,
                                                        bool* truncated) {
    std::size_t n = p.n;
    std::vector<std::size_t> by_label(n);
    std::iota(by_label.begin(), by_label.end(), 0);
    std::sort(by_label.begin(), by_label.end(), [&](std::size_t a, std::size_t b) { return vlex_less(labels[a], labels[b]); });
    std::vector<std::uint64_t> preds(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && p.has(a, b)) preds[b] |= std::uint64_t(1) << a;
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    bool cut = false;
    auto rec = [&](auto&& self, std::uint64_t placed) -> void {
        if (cut) return;
        if (cur.size() == n) {
            if (out.size() >= limit) {
                cut = true;
                return;
            }
            out.push_back(cur);
            return;
        }
        for (std::size_t x : by_label) {
            if ((placed >> x) & 1U) continue;
            if ((preds[x] & ~placed) != 0) continue;
            cur.push_back(x);
            self(self, placed | (std::uint64_t(1) << x));
            cur.pop_back();
            if (cut) return;
        }
    };
    rec(rec, 0);
    if (truncated) *truncated = cut;
    return out;
}

OrderList exceptional_orders(const VarietySpec& s, const std::vector<Bundle>& set, std::size_t limit) {
    Relation p = associated_poset(s, set);
    OrderList res;
    for (const auto& idx : linear_extensions(p, set, limit, &res.truncated)) {
        std::vector<Bundle> seq;
        for (std::size_t x : idx) seq.push_back(set[x]);
        if (!is_exceptional_sequence(s, seq)) throw std::logic_error("linear extension is not exceptional");
        res.orders.push_back(std::move(seq));
    }
    return res;
}

std::optional<std::vector<Bundle>> exceptional_order(const VarietySpec& s, const std::vector<Bundle>& set) {
    if (!is_exceptional_set(s, set)) return std::nullopt;
    auto res = exceptional_orders(s, set, 1);
    if (res.orders.empty()) return std::nullopt;
    return res.orders.front();
}

bool is_exceptional_set(const VarietySpec& s, const std::vector<Bundle>& set) {
    check_distinct(set);
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b) {
            Bundle d = set[b] - set[a];
            if (!is_immaculate(s, d) && !is_immaculate(s, -d)) return false;
        }
    try {
        check_antisymmetric(compute_F(s, set));
    } catch (const CycleError&) {
        return false;
    }
    return true;
}

bool is_maximal_exceptional(const VarietySpec& s, const std::vector<Bundle>& set) {
    return int(set.size()) == rank_k0(s) && is_exceptional_set(s, set);
}

bool is_strongly_exceptional(const VarietySpec& s, const std::vector<Bundle>& set) {
    Relation f = compute_F(s, set);
    for (auto [a, b] : f.pairs())
        if (!is_acyclic(s, set[b] - set[a])) return false;
    return true;
}

bool is_effective_set(const VarietySpec& s, const std::vector<Bundle>& set) {
    return compute_F(s, set) == eff_relation(s, set);
}

}  // namespace exseq
