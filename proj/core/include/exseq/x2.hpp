#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exseq/poset.hpp"
#include "exseq/variety.hpp"

namespace exseq {

// Everything here runs on X_2 = P(Omega(-1)) over P^2.
VarietySpec x2_spec();

enum class Color { Blue, Green, Red, Mixed, NonImmaculate };
std::string color_name(Color c);
Color color_of(Bundle L);

// twist so the vertical-lex minimum is (0,0), then sort vertical-lex
std::vector<Bundle> canonical_set(std::vector<Bundle> set);

// threads = 0 picks EXSEQ_THREADS or the hardware count
std::vector<std::vector<Bundle>> enumerate_mes_x2(int window, unsigned threads = 0);

struct GapReport {
    std::map<int, QuotientClass> gaps;           // diagonal index (r1 - r2 mod 3) -> missing class
    std::map<int, int> diagonal_counts;          // image points per diagonal
    bool injective = false;
    bool valid = false;                          // injective, <= 2 per diagonal, one gap each
};

GapReport gap_points(const std::vector<Bundle>& mes);
// elements over gap+(1,1) come before those over gap+(2,2) in the poset
bool diagonal_precedence_holds(const std::vector<Bundle>& mes);

enum class MesClass { I, II, III, IV, V, Unclassified };
std::string class_name(MesClass c, bool primed);

// sequence k (0-based) of a class; parameter a is used by class I only
std::vector<Bundle> class_template(MesClass c, int k, int a = 0);
// class I: sequence 0,1,2 for each a; others: six sequences
int template_count(MesClass c);

struct MesClassLabel {
    MesClass cls = MesClass::Unclassified;
    int helix_index = 0;  // which template sequence, 0-based
    bool sigma_applied = false;
    Bundle twist;
    std::optional<int> parameter;
};

std::string label_name(const MesClassLabel& l);

MesClassLabel classify(const std::vector<Bundle>& mes);
// every matching label, in the order classify prefers them
std::vector<MesClassLabel> classify_all(const std::vector<Bundle>& mes);
// template -> sigma -> twist; an exceptional order of the classified set
std::vector<Bundle> reconstruct(const MesClassLabel& l);

// F minus Eff, indices follow the sequence order
Relation pf0_table(const std::vector<Bundle>& seq);
bool strongly_cyclic(const std::vector<Bundle>& seq);

}  // namespace exseq
