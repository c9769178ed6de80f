#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coneinf/cloud.hpp"
#include "coneinf/cone.hpp"
#include "coneinf/polynomial.hpp"

namespace coneinf {

struct BandDiagnostics {
    double radius = 0;
    double max_ratio = 0;
    std::size_t samples = 0;
    std::size_t k_used = 0;
    std::size_t components = 0;
};

// Sampled profile of inner-vs-Euclidean distance ratios across radius
// bands. The verdict is a heuristic annotation: growing when the ratio rises
// by at least 50% from first to last band with a monotone trend, bounded
// when every band stays within twice the first, inconclusive otherwise.
struct LneProfile {
    std::vector<double> radii;
    std::vector<double> ratios;
    std::string verdict;
    double c_estimate = 0;
    std::vector<BandDiagnostics> bands;
};

// Per radius r, samples the band (r, 2r) of the hypersurface f = 0 (the
// draw concentrates in the band's inner tenth so each band probes a single
// scale), builds a k-nearest-neighbor graph (k doubles on disconnection,
// capped at 64; ratios are then taken within components), and records the
// max ratio of graph distance to chord over seeded source points against
// all targets.
LneProfile lne_profile(const Polynomial& f, const std::vector<double>& radii, std::size_t count,
                       std::size_t k, std::uint64_t seed);

// Region ||z''|| <= A (1 + ||z'||)^B for the split's decomposition of C^n,
// where z' is the oblique projection onto the span of the first k
// transformed coordinates and z'' the complementary part.
struct AlgebraicRegion {
    CoordinateSplit split;
    double A = 1;
    double B = 1;
};

// Norms of the two components of z under the split.
void split_norms(const CoordinateSplit& split, const CPoint& z, double& norm_zp, double& norm_zpp);

bool region_contains(const AlgebraicRegion& region, const CPoint& z);

// B = max(1, least-squares slope of log||z''|| against log(1 + ||z'||) over
// points with ||z''|| > 0); A = the max of ||z''||/(1+||z'||)^B over the
// cloud, doubled for slack, so the region contains every input point. A
// cloud with all ||z''|| = 0 gets the trivial region A = 1, B = 1.
AlgebraicRegion region_fit(const PointCloud& cloud, const CoordinateSplit& split);

struct TangentDirection {
    CPoint direction;  // unit vector, largest coordinate rotated real positive
    double residual;   // max |g(direction)| over the cone ideal's generators
    std::size_t support;  // number of samples in the cluster
};

// Samples the hypersurface f = 0 near each scale t, rescales points by 1/t,
// and clusters the resulting directions across scales; each cluster is the
// numerical shadow of a tangent direction at infinity and is scored against
// the symbolic cone by evaluating its generators.
std::vector<TangentDirection> tangent_directions(const Polynomial& f,
                                                 const std::vector<double>& scales,
                                                 std::size_t count, std::uint64_t seed,
                                                 const ConeResult& cone);

} // namespace coneinf
