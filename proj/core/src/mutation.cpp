#include "exseq/mutation.hpp"

#include <algorithm>
#include <optional>

#include "exseq/cohomology.hpp"
#include "exseq/poset.hpp"
#include "exseq/x2.hpp"

namespace exseq {

namespace {

using Seq = std::vector<Bundle>;

void check_output(const VarietySpec& s, const Seq& out, const char* op) {
    if (!is_exceptional_sequence(s, out)) throw std::logic_error(std::string(op) + " produced a non-exceptional sequence");
}

void check_triple(const Seq& seq, std::size_t i) {
    if (i + 2 >= seq.size()) throw PreconditionError("banana position out of range");
}

}  // namespace

Seq helix_right(const VarietySpec& s, const Seq& seq) {
    if (seq.empty()) return seq;
    Seq out(seq.begin() + 1, seq.end());
    out.push_back(seq.front() - canonical_bundle(s));
    check_output(s, out, "helix_right");
    return out;
}

Seq helix_left(const VarietySpec& s, const Seq& seq) {
    if (seq.empty()) return seq;
    Seq out{seq.back() + canonical_bundle(s)};
    out.insert(out.end(), seq.begin(), seq.end() - 1);
    check_output(s, out, "helix_left");
    return out;
}

bool mutually_orthogonal(const VarietySpec& s, Bundle a, Bundle b) {
    return is_immaculate(s, a - b) && is_immaculate(s, b - a);
}

Seq swap_orthogonal(const VarietySpec& s, const Seq& seq, std::size_t i) {
    if (i + 1 >= seq.size()) throw PreconditionError("swap position out of range");
    if (!mutually_orthogonal(s, seq[i], seq[i + 1]))
        throw PreconditionError("pair " + to_string(seq[i]) + ", " + to_string(seq[i + 1]) + " is not mutually orthogonal");
    Seq out = seq;
    std::swap(out[i], out[i + 1]);
    check_output(s, out, "swap_orthogonal");
    return out;
}

Seq lex_operator(const VarietySpec& s, const Seq& seq) {
    Seq cur = seq;
    for (std::size_t pass = 0; pass < cur.size(); ++pass) {
        bool moved = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i)
            if (vlex_less(cur[i + 1], cur[i])) {
                cur = swap_orthogonal(s, cur, i);
                moved = true;
            }
        if (!moved) break;
    }
    return cur;
}

Seq helex(const VarietySpec& s, const Seq& seq) { return helix_right(s, lex_operator(s, seq)); }

bool is_orlov_type(const VarietySpec& s, const Seq& seq, int projection) {
    if (int(seq.size()) != rank_k0(s) || seq.empty()) return false;
    Seq cur = seq;
    if (projection == 2)
        for (Bundle& p : cur) p = swap_coords(p);
    std::size_t w = std::size_t(s.ell) + 1;
    if (cur.size() % w != 0) return false;
    int j0 = cur.front().j;
    for (std::size_t r = 0; r * w < cur.size(); ++r) {
        Bundle first = cur[r * w];
        if (first.j != j0 + int(r)) return false;
        for (std::size_t t = 0; t < w; ++t)
            if (cur[r * w + t] != first + Bundle{int(t), 0}) return false;
    }
    return is_exceptional_sequence(s, seq);
}

Seq banana_right(const Seq& seq, std::size_t i) {
    check_triple(seq, i);
    Bundle x = seq[i], y = seq[i + 1], z = seq[i + 2];
    Seq out = seq;
    Bundle t = z + Bundle{1, 0};
    if (x == t + Bundle{-2, 1} && y == t + Bundle{-1, -1}) {
        out[i] = y;
        out[i + 1] = z;
        out[i + 2] = t;
    } else if (y == x + Bundle{1, 0} && z == x + Bundle{1, 1}) {
        out[i] = y;
        out[i + 1] = z;
        out[i + 2] = x + Bundle{2, -1};
    } else {
        throw PreconditionError("triple at " + std::to_string(i) + " matches no right rewrite pattern");
    }
    check_output(x2_spec(), out, "banana_right");
    return out;
}

Seq banana_left(const Seq& seq, std::size_t i) {
    check_triple(seq, i);
    Bundle x = seq[i], y = seq[i + 1], z = seq[i + 2];
    Seq out = seq;
    if (x == z + Bundle{-1, -1} && y == z + Bundle{-1, 0}) {
        out[i] = z + Bundle{-2, 1};
        out[i + 1] = x;
        out[i + 2] = y;
    } else if (y == x + Bundle{0, 1} && z == x + Bundle{1, -1}) {
        Bundle t = x - Bundle{1, 0};
        out[i] = t;
        out[i + 1] = x;
        out[i + 2] = y;
    } else {
        throw PreconditionError("triple at " + std::to_string(i) + " matches no left rewrite pattern");
    }
    check_output(x2_spec(), out, "banana_left");
    return out;
}

std::string step_name(StepKind k) {
    switch (k) {
    case StepKind::HelixL: return "helix_left";
    case StepKind::HelixR: return "helix_right";
    case StepKind::Swap: return "swap";
    case StepKind::Lex: return "lex";
    case StepKind::BananaLeft: return "banana_left";
    case StepKind::BananaRight: return "banana_right";
    case StepKind::Twist: return "twist";
    }
    return "?";
}

Seq apply_step(const VarietySpec& s, const Seq& seq, const Step& st) {
    switch (st.kind) {
    case StepKind::HelixL: return helix_left(s, seq);
    case StepKind::HelixR: return helix_right(s, seq);
    case StepKind::Swap: return swap_orthogonal(s, seq, st.index);
    case StepKind::Lex: return lex_operator(s, seq);
    case StepKind::BananaLeft: return banana_left(seq, st.index);
    case StepKind::BananaRight: return banana_right(seq, st.index);
    case StepKind::Twist: {
        Seq out = seq;
        for (Bundle& p : out) p = p + st.twist;
        return out;
    }
    }
    throw std::logic_error("unknown step");
}

Seq replay(const DerivationTrace& t) {
    Seq cur = t.initial;
    for (const Step& st : t.steps) {
        if (st.before != cur) throw std::logic_error("trace step does not start where the previous one ended");
        cur = apply_step(t.spec, cur, st);
        if (st.after != cur) throw std::logic_error("trace step result differs on replay");
    }
    return cur;
}

namespace {

struct Recorder {
    DerivationTrace& t;
    Seq cur;

    void run(StepKind k, std::size_t index = 0, Bundle tw = {}) {
        Step st{k, index, tw, cur, {}};
        st.after = apply_step(t.spec, cur, st);
        auto& sh = t.shifts;
        switch (k) {
        case StepKind::HelixR: std::rotate(sh.begin(), sh.begin() + 1, sh.end()); break;
        case StepKind::HelixL: std::rotate(sh.rbegin(), sh.rbegin() + 1, sh.rend()); break;
        case StepKind::Swap: std::swap(sh[index], sh[index + 1]); break;
        case StepKind::BananaRight:
            std::rotate(sh.begin() + long(index), sh.begin() + long(index) + 1, sh.begin() + long(index) + 3);
            sh[index + 2] += 1;
            break;
        case StepKind::BananaLeft:
            std::rotate(sh.begin() + long(index), sh.begin() + long(index) + 2, sh.begin() + long(index) + 3);
            sh[index] -= 1;
            break;
        default: break;
        }
        cur = st.after;
        t.steps.push_back(std::move(st));
    }
};

// adjacent swaps turning one exceptional order of a set into another
void reorder(Recorder& r, const Seq& target) {
    for (std::size_t pos = 0; pos < target.size(); ++pos) {
        auto it = std::find(r.cur.begin() + long(pos), r.cur.end(), target[pos]);
        if (it == r.cur.end()) throw std::logic_error("target order is not a permutation");
        for (std::size_t k = std::size_t(it - r.cur.begin()); k > pos; --k) r.run(StepKind::Swap, k - 1);
    }
}

}  // namespace

DerivationTrace reduce_to_orlov(const Seq& mes) {
    VarietySpec s = x2_spec();
    MesClassLabel label = classify(mes);
    if (label.cls == MesClass::Unclassified) throw PreconditionError("set is not one of the listed classes");
    DerivationTrace t;
    t.spec = s;
    t.shifts.assign(mes.size(), 0);
    Seq start = reconstruct(label);
    bool given_order = is_exceptional_sequence(s, mes);
    t.initial = given_order ? mes : start;
    Recorder r{t, t.initial};
    if (given_order) reorder(r, start);
    auto sig = [&](Seq q) {
        if (label.sigma_applied)
            for (Bundle& p : q) p = swap_coords(p);
        return q;
    };
    if (label.twist != Bundle{}) r.run(StepKind::Twist, 0, -label.twist);
    Seq target;
    int k = label.helix_index;
    if (label.cls == MesClass::I) {
        if (k == 1) r.run(StepKind::HelixL);
        if (k == 2) r.run(StepKind::HelixR);
        int a = label.parameter.value_or(0);
        target = sig(class_template(MesClass::I, 0, k == 2 ? 2 - a : a));
    } else {
        for (int n = (3 - k + 6) % 6; n > 0; --n) r.run(StepKind::HelixR);
        target = sig(class_template(label.cls, 3));
    }
    Bundle tw = target.front() - r.cur.front();
    if (tw != Bundle{}) r.run(StepKind::Twist, 0, tw);
    if (r.cur != target) throw std::logic_error("helix normalisation missed the reference sequence");
    if (label.sigma_applied && (label.cls == MesClass::IV || label.cls == MesClass::V))
        throw std::logic_error("primed variant of a sigma-stable class");
    switch (label.cls) {
    case MesClass::II:
    case MesClass::III: r.run(StepKind::Swap, 2); break;
    case MesClass::IV: r.run(StepKind::BananaRight, 2); break;
    case MesClass::V: r.run(StepKind::BananaLeft, 1); break;
    default: break;
    }
    t.projection = label.sigma_applied ? 2 : 1;
    if (!is_orlov_type(s, t.final_sequence(), t.projection)) throw std::logic_error("reduction did not end in Orlov type");
    return t;
}

}  // namespace exseq
