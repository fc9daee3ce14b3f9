#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exseq/variety.hpp"

namespace exseq {

// Binary relation on indices 0..n-1, n <= 64.
struct Relation {
    std::size_t n = 0;
    std::vector<std::uint64_t> rows;

    Relation() = default;
    explicit Relation(std::size_t size);
    static Relation diagonal(std::size_t size);

    bool has(std::size_t a, std::size_t b) const { return (rows[a] >> b) & 1U; }
    void add(std::size_t a, std::size_t b) { rows[a] |= std::uint64_t(1) << b; }
    bool contains(const Relation& other) const;
    // off-diagonal pairs in (a, b) order
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
    friend bool operator==(const Relation&, const Relation&) = default;
};

Relation relation_minus(const Relation& a, const Relation& b);

// Raised when a relation meant to be a partial order has a cycle.
class CycleError : public std::runtime_error {
public:
    CycleError(const std::string& what, std::vector<std::size_t> cycle)
        : std::runtime_error(what), cycle_(std::move(cycle)) {}
    const std::vector<std::size_t>& cycle() const { return cycle_; }

private:
    std::vector<std::size_t> cycle_;
};

bool is_exceptional_sequence(const VarietySpec& s, const std::vector<Bundle>& seq);
Bundle delta(const VarietySpec& s, const std::vector<Bundle>& set, std::size_t a, std::size_t b);

Relation compute_F(const VarietySpec& s, const std::vector<Bundle>& set);
Relation eff_relation(const VarietySpec& s, const std::vector<Bundle>& set);
// F minus Eff
Relation pf0(const VarietySpec& s, const std::vector<Bundle>& set);

Relation transitive_hull(const Relation& r);
// throws CycleError if r has a nontrivial cycle
void check_antisymmetric(const Relation& r);
Relation associated_poset(const VarietySpec& s, const std::vector<Bundle>& set);
Relation extend_partial_order(const Relation& r, std::size_t x, std::size_t y);

struct OrderList {
    std::vector<std::vector<Bundle>> orders;
    bool truncated = false;
};

std::vector<std::vector<std::size_t>> linear_extensions(const Relation& p, const std::vector<Bundle>& labels, std::size_t limit, bool* truncated);
OrderList exceptional_orders(const VarietySpec& s, const std::vector<Bundle>& set, std::size_t limit = 10000);
std::optional<std::vector<Bundle>> exceptional_order(const VarietySpec& s, const std::vector<Bundle>& set);

bool is_exceptional_set(const VarietySpec& s, const std::vector<Bundle>& set);
bool is_maximal_exceptional(const VarietySpec& s, const std::vector<Bundle>& set);
bool is_strongly_exceptional(const VarietySpec& s, const std::vector<Bundle>& set);
bool is_effective_set(const VarietySpec& s, const std::vector<Bundle>& set);

}  // namespace exseq
