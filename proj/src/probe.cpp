#include "coneinf/probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coneinf/errors.hpp"
#include "coneinf/rng.hpp"
#include "coneinf/sampler.hpp"

namespace coneinf {

namespace {

constexpr std::size_t kProfileSources = 48;
constexpr std::size_t kMaxNeighbors = 64;
constexpr double kClusterThreshold = 0.35;

std::vector<std::size_t> pick_sources(std::size_t size, std::size_t want, Rng rng) {
    if (size <= want) {
        std::vector<std::size_t> all(size);
        for (std::size_t i = 0; i < size; ++i) all[i] = i;
        return all;
    }
    std::vector<std::size_t> picked;
    std::vector<bool> used(size, false);
    while (picked.size() < want) {
        auto i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(size) - 1));
        if (used[i]) continue;
        used[i] = true;
        picked.push_back(i);
    }
    return picked;
}

} // namespace

LneProfile lne_profile(const Polynomial& f, const std::vector<double>& radii, std::size_t count,
                       std::size_t k, std::uint64_t seed) {
    if (radii.size() < 3) throw std::domain_error("profile needs at least 3 radii");
    for (std::size_t i = 0; i + 1 < radii.size(); ++i)
        if (!(radii[i] > 0 && radii[i] < radii[i + 1]))
            throw std::domain_error("radii must be positive and increasing");
    if (k == 0) k = 8;

    LneProfile profile;
    profile.radii = radii;
    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        double r = radii[ri];
        std::uint64_t band_seed = derive_rng(seed, "profile-band", ri).next_u64();
        // The sample sits in the inner tenth of the (r, 2r) band: a thin
        // shell pins every point to one scale, so sheets of the surface that
        // pass within o(r) of each other stay separated in the neighbor
        // graph instead of being bridged by chance-close samples.
        PointCloud cloud = sample_hypersurface(f, r, 1.1 * r, count, band_seed);

        std::size_t k_used = std::min(k, cloud.size() - 1);
        Graph graph;
        std::vector<int> comp;
        std::size_t ncomp = 0;
        for (;;) {
            graph = knn_graph(cloud, k_used);
            comp = graph_components(graph);
            ncomp = comp.empty()
                        ? 0
                        : static_cast<std::size_t>(
                              *std::max_element(comp.begin(), comp.end())) + 1;
            if (ncomp <= 1 || k_used >= kMaxNeighbors || k_used >= cloud.size() - 1) break;
            k_used = std::min(kMaxNeighbors, k_used * 2);
        }

        std::vector<std::size_t> sources =
            pick_sources(cloud.size(), kProfileSources, derive_rng(seed, "profile-sources", ri));
        std::vector<std::vector<double>> dists = dijkstra_batch(graph, sources);

        double band_max = 0;
        for (std::size_t si = 0; si < sources.size(); ++si) {
            std::size_t s = sources[si];
            for (std::size_t t = 0; t < cloud.size(); ++t) {
                if (t == s || !std::isfinite(dists[si][t])) continue;
                double chord = cloud.distance(s, t);
                if (chord <= 0) continue;
                band_max = std::max(band_max, dists[si][t] / chord);
            }
        }
        profile.ratios.push_back(band_max);
        profile.bands.push_back({r, band_max, cloud.size(), k_used, ncomp});
    }

    double first = profile.ratios.front();
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < profile.ratios.size(); ++i)
        monotone = monotone && profile.ratios[i + 1] >= 0.98 * profile.ratios[i];
    double peak = *std::max_element(profile.ratios.begin(), profile.ratios.end());
    if (first > 0 && profile.ratios.back() >= 1.5 * first && monotone)
        profile.verdict = "growing";
    else if (first > 0 && peak <= 2.0 * first)
        profile.verdict = "bounded";
    else
        profile.verdict = "inconclusive";
    profile.c_estimate = peak;
    return profile;
}

void split_norms(const CoordinateSplit& split, const CPoint& z, double& norm_zp,
                 double& norm_zpp) {
    std::size_t n = z.size();
    if (split.matrix.size() != n) throw std::domain_error("split size does not match point");
    std::vector<std::complex<double>> w(split.k, 0.0);
    for (std::size_t i = 0; i < split.k; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i] += to_double(split.inverse[i][j]) * z[j];
    double sp = 0, spp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::complex<double> zi = 0.0;
        for (std::size_t j = 0; j < split.k; ++j) zi += to_double(split.matrix[i][j]) * w[j];
        sp += std::norm(zi);
        spp += std::norm(z[i] - zi);
    }
    norm_zp = std::sqrt(sp);
    norm_zpp = std::sqrt(spp);
}

bool region_contains(const AlgebraicRegion& region, const CPoint& z) {
    double np = 0, npp = 0;
    split_norms(region.split, z, np, npp);
    return npp <= region.A * std::pow(1.0 + np, region.B);
}

AlgebraicRegion region_fit(const PointCloud& cloud, const CoordinateSplit& split) {
    if (cloud.size() == 0) throw std::domain_error("cannot fit a region to an empty cloud");
    std::vector<double> xs, ys;
    std::vector<std::pair<double, double>> norms(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        double np = 0, npp = 0;
        split_norms(split, cloud.point(i), np, npp);
        norms[i] = {np, npp};
        if (npp > 0) {
            xs.push_back(std::log1p(np));
            ys.push_back(std::log(npp));
        }
    }
    if (xs.empty()) return {split, 1.0, 1.0};

    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double cov = 0, var = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cov += (xs[i] - mx) * (ys[i] - my);
        var += (xs[i] - mx) * (xs[i] - mx);
    }
    double slope = var > 0 ? cov / var : 0.0;
    double b = std::max(1.0, slope);

    double a = 0;
    for (const auto& [np, npp] : norms) a = std::max(a, npp / std::pow(1.0 + np, b));
    a *= 2.0;
    return {split, a, b};
}

namespace {

CPoint normalized_direction(const CPoint& v) {
    double norm2 = 0;
    for (const auto& c : v) norm2 += std::norm(c);
    double norm = std::sqrt(norm2);
    CPoint u(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] / norm;
    std::size_t imax = 0;
    for (std::size_t i = 1; i < u.size(); ++i)
        if (std::abs(u[i]) > std::abs(u[imax])) imax = i;
    std::complex<double> phase = u[imax] / std::abs(u[imax]);
    for (auto& c : u) c /= phase;
    return u;
}

double direction_distance(const CPoint& a, const CPoint& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

} // namespace

std::vector<TangentDirection> tangent_directions(const Polynomial& f,
                                                 const std::vector<double>& scales,
                                                 std::size_t count, std::uint64_t seed,
                                                 const ConeResult& cone) {
    if (scales.empty()) throw std::domain_error("at least one scale is required");
    for (std::size_t i = 0; i < scales.size(); ++i)
        if (!(scales[i] > 0 && (i == 0 || scales[i] > scales[i - 1])))
            throw std::domain_error("scales must be positive and increasing");

    struct Cluster {
        CPoint rep;
        std::size_t support = 0;
    };
    std::vector<Cluster> clusters;
    for (std::size_t si = 0; si < scales.size(); ++si) {
        double t = scales[si];
        std::uint64_t band_seed = derive_rng(seed, "tangent-band", si).next_u64();
        PointCloud cloud = sample_hypersurface(f, 0.95 * t, 1.05 * t, count, band_seed);
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            CPoint v = cloud.point(i);
            for (auto& c : v) c /= t;
            CPoint u = normalized_direction(v);
            bool placed = false;
            for (auto& cl : clusters) {
                if (direction_distance(u, cl.rep) < kClusterThreshold) {
                    cl.rep = std::move(u);
                    ++cl.support;
                    placed = true;
                    break;
                }
            }
            if (!placed) clusters.push_back({std::move(u), 1});
        }
    }

    std::vector<TangentDirection> out;
    out.reserve(clusters.size());
    for (auto& cl : clusters) {
        double residual = 0;
        for (const auto& g : cone.cone_ideal.generators())
            residual = std::max(residual, std::abs(g.eval(cl.rep)));
        out.push_back({std::move(cl.rep), residual, cl.support});
    }
    return out;
}

} // namespace coneinf
