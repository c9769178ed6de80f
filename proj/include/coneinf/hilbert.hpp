#pragma once

#include <vector>

#include "coneinf/ideal.hpp"

namespace coneinf {

// Dense univariate polynomial over the integers, coefficient of t^i at
// index i. Used for Hilbert series numerators.
struct UniPoly {
    std::vector<long long> coeffs{0};

    long long operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
    int degree() const;
    void trim();
    bool operator==(const UniPoly& o) const;
};

UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_shift(const UniPoly& a, std::size_t by); // multiply by t^by
long long uni_eval_one(const UniPoly& a);

// Divides a by (1 - t) exactly; the caller must know the division is exact.
UniPoly uni_div_one_minus_t(const UniPoly& a);

// Multiplicity of (1 - t) as a factor.
int one_minus_t_multiplicity(const UniPoly& a);

// Numerator N(t) of the Hilbert series N(t) / (1-t)^n of S/M for the
// monomial ideal M generated by `gens` in n variables. The generator list
// may contain redundant members.
UniPoly hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

// Same, reading the generators off an ideal whose generators must all be
// monomials.
UniPoly hilbert_numerator(const Ideal& I);

// Coefficients h(0..upto) of N(t) / (1-t)^n as a power series.
std::vector<long long> hilbert_series_prefix(const UniPoly& num, std::size_t nvars,
                                             std::size_t upto);

struct HilbertData {
    UniPoly numerator;       // of the initial ideal of the projective closure
    int dim_projective = 0;  // affine dim = dim of the projective closure, -1 when empty
    long long degree_scheme = 0;
};

// Dimension and scheme degree of the affine set cut out by I, read off the
// Hilbert series of the projective closure's leading-term ideal. The unit
// ideal maps to the empty-variety marker (dim -1, degree 0). The order only
// selects which leading-term ideal is used; the closure ideal is homogeneous,
// so every monomial order yields the same series.
HilbertData dim_degree(const Ideal& I, const MonomialOrder& ord,
                       std::size_t budget = kDefaultBudget);
HilbertData dim_degree(const Ideal& I, std::size_t budget = kDefaultBudget);

} // namespace coneinf
