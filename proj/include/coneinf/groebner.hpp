#pragma once

#include <vector>

#include "coneinf/ideal.hpp"
#include "coneinf/polynomial.hpp"

namespace coneinf {

// Full normal form of f modulo G: no term of the result is divisible by any
// leading monomial of G. Zero divisors in G are ignored.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& ord);

// S(f, g) = lcm/lt(f) * f - lcm/lt(g) * g, both parts made monic. Requires
// f, g non-zero.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

// Buchberger's algorithm with the normal selection strategy (pairs of
// minimal lcm degree first), the coprime-leading-term and chain criteria,
// and full interreduction of the result: output is the reduced basis, monic,
// sorted by descending leading monomial. Throws resource_limit_error once
// more than `budget` pairs have been taken from the queue.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                   std::size_t budget = kDefaultBudget);

bool ideal_member(const Polynomial& f, const Ideal& I, std::size_t budget = kDefaultBudget);

// Both inclusions, via generator membership.
bool ideal_equal(const Ideal& a, const Ideal& b, std::size_t budget = kDefaultBudget);

// Intersection with the subring in the last n-k variables, computed from a
// Groebner basis under the block(k) elimination order. The result lives in
// the context of the last n-k variable names and may be the zero ideal.
Ideal eliminate(const Ideal& I, std::size_t k, std::size_t budget = kDefaultBudget);

} // namespace coneinf
