#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

namespace coneinf {

using CPoint = std::vector<std::complex<double>>;

// Finite sample of points of C^n, stored as interleaved real 2n-vectors
// [re z1, im z1, re z2, ...]. The Hermitian norm on C^n equals the Euclidean
// norm of the 2n-vector, so all metric work happens over the reals.
struct PointCloud {
    std::size_t complex_dim = 0;
    std::vector<double> coords;
    double band_lo = 0.0;
    double band_hi = 0.0;
    double residual_tol = 1e-8;

    std::size_t size() const { return complex_dim ? coords.size() / (2 * complex_dim) : 0; }
    void push(const CPoint& p);
    CPoint point(std::size_t i) const;
    double norm(std::size_t i) const;
    double distance(std::size_t i, std::size_t j) const;
};

// Undirected weighted graph as symmetric adjacency lists.
struct Graph {
    std::vector<std::vector<std::pair<std::size_t, double>>> adj;

    std::size_t size() const { return adj.size(); }
};

// Symmetrized k-nearest-neighbor graph with Euclidean edge weights. Ties in
// distance break toward the smaller point index, so the result is a pure
// function of the cloud. The parallel kernel assigns one row per thread and
// produces bitwise identical output to the serial reference.
Graph knn_graph_serial(const PointCloud& cloud, std::size_t k);
Graph knn_graph_parallel(const PointCloud& cloud, std::size_t k);
Graph knn_graph(const PointCloud& cloud, std::size_t k);

// Connected component label per vertex; labels are assigned in increasing
// order of the lowest vertex index in the component.
std::vector<int> graph_components(const Graph& g);

// Single-source shortest path lengths; unreachable vertices get +infinity.
std::vector<double> dijkstra(const Graph& g, std::size_t source);

// One row of distances per source. The parallel kernel runs sources
// independently and matches the serial reference bitwise.
std::vector<std::vector<double>> dijkstra_batch_serial(const Graph& g,
                                                       const std::vector<std::size_t>& sources);
std::vector<std::vector<double>> dijkstra_batch_parallel(const Graph& g,
                                                         const std::vector<std::size_t>& sources);
std::vector<std::vector<double>> dijkstra_batch(const Graph& g,
                                                const std::vector<std::size_t>& sources);

// Length of the shortest path between cloud points p and q in the
// k-nearest-neighbor graph: a discrete stand-in for the inner distance of
// the sampled set. Throws disconnected_error when the graph does not
// connect the cloud at this k.
double inner_distance(const PointCloud& cloud, std::size_t p, std::size_t q, std::size_t k);

// CSV rows: 2n real coordinate columns followed by the point norm.
void write_csv(const PointCloud& cloud, std::ostream& out);

} // namespace coneinf
