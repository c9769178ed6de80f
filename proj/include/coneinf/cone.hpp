#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coneinf/groebner.hpp"
#include "coneinf/ideal.hpp"

namespace coneinf {

using RatMatrix = std::vector<std::vector<Rat>>;

std::optional<RatMatrix> invert_rat_matrix(const RatMatrix& a);
bool is_permutation_matrix(const RatMatrix& a);

struct ConeResult {
    Ideal cone_ideal;
    bool is_homogeneous;
};

// Ideal of the tangent cone at infinity: generated by the highest forms of
// the reduced Groebner basis under a graded order (grevlex by default).
// Errors on the unit ideal and on non-graded orders.
ConeResult cone_at_infinity(const Ideal& I, const MonomialOrder& ord = MonomialOrder::grevlex(),
                            std::size_t budget = kDefaultBudget);

struct ProjectiveClosure {
    Ideal ideal; // homogeneous, in n+1 variables
    std::string homogenizing_variable;
};

// Homogenizes each element of a graded Groebner basis by a fresh last
// variable.
ProjectiveClosure projective_closure(const Ideal& I, std::size_t budget = kDefaultBudget);

// The slice of the projective closure at homogenizing variable = 0, mapped
// back to the affine variables. Tests check it generates the same ideal as
// cone_at_infinity; the two routes are computed independently.
Ideal part_at_infinity(const Ideal& I, std::size_t budget = kDefaultBudget);

// Invertible linear change of coordinates z = A w together with a split
// C^n = V1 + V2, where V1 is the span of the first k transformed
// coordinates.
struct CoordinateSplit {
    std::size_t k = 0;
    RatMatrix matrix;  // z = A w
    RatMatrix inverse; // w = A^-1 z

    static CoordinateSplit identity(std::size_t n, std::size_t k);
    static CoordinateSplit from_matrix(std::size_t k, RatMatrix a);
};

// Generators g(w) = f(A w). A permutation matrix permutes the variable
// names accordingly; any other matrix keeps the original names in place.
Ideal apply_linear_change(const Ideal& I, const CoordinateSplit& split);

// True when the cone at infinity of the transformed ideal meets
// {w_1 = ... = w_k = 0} only at the origin, decided by pure powers of every
// variable appearing among the leading terms of the combined ideal.
bool is_admissible_split(const Ideal& I, const CoordinateSplit& split,
                         std::size_t budget = kDefaultBudget);

struct LinearChangeResult {
    Ideal transformed;
    CoordinateSplit split;
};

// Tries the identity first, then matrices I + E with small random integer
// entries drawn from the seed, until is_admissible_split accepts one.
LinearChangeResult random_linear_change(const Ideal& I, std::size_t k, std::uint64_t seed,
                                        int retries = 32, std::size_t budget = kDefaultBudget);

} // namespace coneinf
