#pragma once

#include <cstdint>
#include <vector>

#include "coneinf/cone.hpp"
#include "coneinf/ideal.hpp"

namespace coneinf {

// Fiber of the projection along the split: applies the coordinate change,
// substitutes point[i] for the i-th transformed variable, i < split.k, and
// returns an ideal in the remaining fiber variables. Verifies the fiber is
// zero dimensional; a positive dimensional fiber signals a non-generic
// point and raises genericity_error so the caller can retry.
Ideal generic_fiber(const Ideal& I, const CoordinateSplit& split, const std::vector<Rat>& point,
                    std::size_t budget = kDefaultBudget);

// True when the quotient by I is finite dimensional: either I is the unit
// ideal or every variable has a pure power among the Groebner leading terms.
bool is_zero_dimensional(const Ideal& I, std::size_t budget = kDefaultBudget);

// Vector-space dimension of the quotient ring, the number of standard
// monomials. Requires a zero dimensional ideal.
long long quotient_dimension(const Ideal& I, std::size_t budget = kDefaultBudget);

// Number of distinct points cut out by a zero dimensional ideal, counted
// without multiplicity by adjoining the squarefree part of the eliminant of
// every variable.
long long distinct_point_count(const Ideal& I, std::size_t budget = kDefaultBudget);

// Degree of the underlying set: the number of distinct points in a generic
// fiber of an admissible linear projection onto a subspace of complementary
// dimension, maximized over sampled fibers.
long long reduced_degree(const Ideal& I, std::uint64_t seed = 0,
                         std::size_t budget = kDefaultBudget);

} // namespace coneinf
