#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace exseq {

// A(P(E)) over P^ell: Z[h,H'] / (h^{ell+1}, sum_i c_i(E) H'^{r-i}), c_i(E) = chern[i-1] h^i.
class ChowRing {
public:
    ChowRing(int ell, std::vector<std::int64_t> chern);

    int ell() const { return ell_; }
    int rank() const { return int(chern_.size()); }

    // coefficient table c[a][b] of h^a H'^b, a <= ell, b < rank
    struct Element {
        std::vector<std::vector<std::int64_t>> c;
        friend bool operator==(const Element&, const Element&) = default;
    };

    Element zero() const;
    Element one() const;
    Element h() const;
    Element hp() const;  // H'
    Element constant(std::int64_t v) const;
    Element monomial(int a, int b, std::int64_t coef = 1) const;

    Element add(const Element& x, const Element& y) const;
    Element sub(const Element& x, const Element& y) const;
    Element scale(const Element& x, std::int64_t k) const;
    Element mul(const Element& x, const Element& y) const;
    // 1 + i h + j H'
    Element linear(std::int64_t i, std::int64_t j) const;
    // total Chern class of a line bundle i h + j H'
    Element line_chern(std::int64_t i, std::int64_t j) const { return linear(i, j); }

    // coefficient of h^ell H'^{rank-1}
    std::int64_t degree(const Element& x) const;
    std::string format(const Element& x) const;

private:
    int ell_;
    std::vector<std::int64_t> chern_;
    // H'^b for b < 2 rank, reduced
    std::vector<Element> hp_pow_;
    Element reduce_raw(const std::vector<std::vector<std::int64_t>>& raw) const;
};

// numerator / denominator; the denominator needs constant term +-1
ChowRing::Element divide_total_chern(const ChowRing& ring, const ChowRing::Element& num, const ChowRing::Element& den);

// nef coordinates (i,j) -> (i+2j, j) in the h, H' basis of P(T) over P^2, and back
struct ChowCoords {
    std::int64_t i;
    std::int64_t j;
    friend bool operator==(ChowCoords, ChowCoords) = default;
};
ChowCoords nef_to_tangent(ChowCoords c);
ChowCoords tangent_to_nef(ChowCoords c);

struct BananaCheck {
    bool division = false;         // (1-3h+3h^2)/(1+H') = 1-3h-H'
    bool product = false;          // (1-3h-H')(1+H') = 1-3h+3h^2
    bool coordinates = false;      // O(-h-H), O(-2h+H) -> O(-3h-H'), O(H')
    bool control_rejected = false; // kernel -2h-H' does not satisfy the product
    bool ok() const { return division && product && coordinates && control_rejected; }
};

BananaCheck verify_banana_ses();

}  // namespace exseq
