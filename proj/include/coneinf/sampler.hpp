#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "coneinf/cloud.hpp"
#include "coneinf/polynomial.hpp"

namespace coneinf {

// All roots of sum_i coeffs[i] t^i, by Durand-Kerner iteration followed by
// a Newton polish, sorted by (real, imaginary) part. The caller is expected
// to reject degenerate leading coefficients beforehand; exact trailing zero
// coefficients are trimmed. Degree 0 or less yields no roots.
std::vector<std::complex<double>> polynomial_roots(std::vector<std::complex<double>> coeffs,
                                                   int max_iterations = 200);

// Draws `count` points of the hypersurface f = 0 whose Hermitian norm lies
// in [band_lo, band_hi]: the leading n-1 coordinates are drawn from a
// seeded radial distribution scaled to the band, the last coordinate is
// solved for, and roots landing in the band with relative residual below
// residual_tol are kept. Deterministic per seed. Attempts with a degenerate
// leading coefficient are resampled; when the attempt budget runs out
// before the quota is met, throws sampling_error.
PointCloud sample_hypersurface(const Polynomial& f, double band_lo, double band_hi,
                               std::size_t count, std::uint64_t seed,
                               double residual_tol = 1e-8);

} // namespace coneinf
