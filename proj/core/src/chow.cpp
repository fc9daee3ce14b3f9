#include "exseq/chow.hpp"

#include <sstream>
#include <stdexcept>

namespace exseq {

using Element = ChowRing::Element;

ChowRing::ChowRing(int ell, std::vector<std::int64_t> chern) : ell_(ell), chern_(std::move(chern)) {
    if (ell < 0) throw std::invalid_argument("ell must be nonnegative");
    int r = rank();
    if (r == 0) throw std::invalid_argument("rank must be positive");
    // H'^b for b < r is a basis monomial; H'^r = -sum_{i>=1} c_i h^i H'^{r-i}
    for (int b = 0; b < 2 * r; ++b) {
        if (b < r) {
            hp_pow_.push_back(monomial(0, b));
            continue;
        }
        Element prev = hp_pow_.back();
        // multiply by H': shift b, rewrite the overflow
        Element next = zero();
        for (int a = 0; a <= ell_; ++a)
            for (int q = 0; q < r; ++q) {
                std::int64_t v = prev.c[std::size_t(a)][std::size_t(q)];
                if (v == 0) continue;
                if (q + 1 < r) {
                    next.c[std::size_t(a)][std::size_t(q + 1)] += v;
                    continue;
                }
                for (int i = 1; i <= r; ++i) {
                    if (a + i > ell_) break;
                    next.c[std::size_t(a + i)][std::size_t(r - i)] -= v * chern_[std::size_t(i - 1)];
                }
            }
        hp_pow_.push_back(next);
    }
}

Element ChowRing::zero() const {
    return {std::vector<std::vector<std::int64_t>>(std::size_t(ell_) + 1, std::vector<std::int64_t>(std::size_t(rank()), 0))};
}

Element ChowRing::monomial(int a, int b, std::int64_t coef) const {
    Element e = zero();
    if (a <= ell_ && b < rank()) e.c[std::size_t(a)][std::size_t(b)] = coef;
    return e;
}

Element ChowRing::one() const { return monomial(0, 0); }
Element ChowRing::h() const { return monomial(1, 0); }
Element ChowRing::hp() const { return rank() > 1 ? monomial(0, 1) : mul(one(), hp_pow_[1]); }
Element ChowRing::constant(std::int64_t v) const { return monomial(0, 0, v); }

Element ChowRing::add(const Element& x, const Element& y) const {
    Element e = x;
    for (std::size_t a = 0; a < e.c.size(); ++a)
        for (std::size_t b = 0; b < e.c[a].size(); ++b) e.c[a][b] += y.c[a][b];
    return e;
}

Element ChowRing::scale(const Element& x, std::int64_t k) const {
    Element e = x;
    for (auto& row : e.c)
        for (auto& v : row) v *= k;
    return e;
}

Element ChowRing::sub(const Element& x, const Element& y) const { return add(x, scale(y, -1)); }

Element ChowRing::reduce_raw(const std::vector<std::vector<std::int64_t>>& raw) const {
    Element e = zero();
    for (std::size_t a = 0; a < raw.size(); ++a)
        for (std::size_t b = 0; b < raw[a].size(); ++b) {
            std::int64_t v = raw[a][b];
            if (v == 0 || int(a) > ell_) continue;
            const Element& p = hp_pow_[b];
            for (std::size_t a2 = 0; a + a2 <= std::size_t(ell_); ++a2)
                for (std::size_t b2 = 0; b2 < p.c[a2].size(); ++b2) e.c[a + a2][b2] += v * p.c[a2][b2];
        }
    return e;
}

Element ChowRing::mul(const Element& x, const Element& y) const {
    int r = rank();
    std::vector<std::vector<std::int64_t>> raw(std::size_t(2 * ell_) + 1, std::vector<std::int64_t>(std::size_t(2 * r), 0));
    for (std::size_t a = 0; a < x.c.size(); ++a)
        for (std::size_t b = 0; b < x.c[a].size(); ++b) {
            if (x.c[a][b] == 0) continue;
            for (std::size_t a2 = 0; a2 < y.c.size(); ++a2)
                for (std::size_t b2 = 0; b2 < y.c[a2].size(); ++b2) raw[a + a2][b + b2] += x.c[a][b] * y.c[a2][b2];
        }
    return reduce_raw(raw);
}

Element ChowRing::linear(std::int64_t i, std::int64_t j) const {
    return add(add(one(), scale(h(), i)), scale(hp(), j));
}

std::int64_t ChowRing::degree(const Element& x) const { return x.c[std::size_t(ell_)][std::size_t(rank() - 1)]; }

std::string ChowRing::format(const Element& x) const {
    std::ostringstream os;
    bool first = true;
    for (int tot = 0; tot <= ell_ + rank() - 1; ++tot)
        for (int a = std::min(tot, ell_); a >= 0; --a) {
            int b = tot - a;
            if (b >= rank()) continue;
            std::int64_t v = x.c[std::size_t(a)][std::size_t(b)];
            if (v == 0) continue;
            if (!first) os << (v < 0 ? " - " : " + ");
            else if (v < 0) os << "-";
            first = false;
            std::int64_t m = v < 0 ? -v : v;
            bool bare = a == 0 && b == 0;
            if (m != 1 || bare) os << m;
            if (a > 0) os << "h" << (a > 1 ? "^" + std::to_string(a) : "");
            if (b > 0) os << "H'" << (b > 1 ? "^" + std::to_string(b) : "");
        }
    if (first) os << "0";
    return os.str();
}

Element divide_total_chern(const ChowRing& ring, const Element& num, const Element& den) {
    std::int64_t c0 = den.c[0][0];
    if (c0 != 1 && c0 != -1) throw std::invalid_argument("denominator has no unit constant term");
    // den = c0 (1 - n), n nilpotent; 1/den = c0 sum n^k
    Element n = ring.sub(ring.one(), ring.scale(den, c0));
    Element inv = ring.one();
    Element pw = ring.one();
    for (int k = 1; k <= ring.ell() + ring.rank(); ++k) {
        pw = ring.mul(pw, n);
        inv = ring.add(inv, pw);
    }
    return ring.mul(num, ring.scale(inv, c0));
}

ChowCoords nef_to_tangent(ChowCoords c) { return {c.i + 2 * c.j, c.j}; }
ChowCoords tangent_to_nef(ChowCoords c) { return {c.i - 2 * c.j, c.j}; }

BananaCheck verify_banana_ses() {
    ChowRing ring(2, {3, 3});
    BananaCheck out;
    Element omega = ring.add(ring.sub(ring.one(), ring.scale(ring.h(), 3)), ring.scale(ring.monomial(2, 0), 3));
    Element quotient = ring.linear(0, 1);
    Element kernel = ring.linear(-3, -1);
    out.division = divide_total_chern(ring, omega, quotient) == kernel;
    out.product = ring.mul(kernel, quotient) == omega;
    ChowCoords k = nef_to_tangent({-1, -1});
    ChowCoords q = nef_to_tangent({-2, 1});
    out.coordinates = k == ChowCoords{-3, -1} && q == ChowCoords{0, 1} && tangent_to_nef(k) == ChowCoords{-1, -1} &&
                      tangent_to_nef(q) == ChowCoords{-2, 1};
    out.control_rejected = !(ring.mul(ring.linear(-2, -1), quotient) == omega);
    return out;
}

}  // namespace exseq
