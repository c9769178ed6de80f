#include "coneinf/cloud.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "coneinf/errors.hpp"

namespace coneinf {

void PointCloud::push(const CPoint& p) {
    if (complex_dim == 0) complex_dim = p.size();
    if (p.size() != complex_dim) throw std::domain_error("point dimension mismatch");
    for (const auto& z : p) {
        coords.push_back(z.real());
        coords.push_back(z.imag());
    }
}

CPoint PointCloud::point(std::size_t i) const {
    CPoint p(complex_dim);
    const double* base = coords.data() + i * 2 * complex_dim;
    for (std::size_t c = 0; c < complex_dim; ++c) p[c] = {base[2 * c], base[2 * c + 1]};
    return p;
}

double PointCloud::norm(std::size_t i) const {
    const double* base = coords.data() + i * 2 * complex_dim;
    double s = 0;
    for (std::size_t c = 0; c < 2 * complex_dim; ++c) s += base[c] * base[c];
    return std::sqrt(s);
}

double PointCloud::distance(std::size_t i, std::size_t j) const {
    const double* a = coords.data() + i * 2 * complex_dim;
    const double* b = coords.data() + j * 2 * complex_dim;
    double s = 0;
    for (std::size_t c = 0; c < 2 * complex_dim; ++c) {
        double d = a[c] - b[c];
        s += d * d;
    }
    return std::sqrt(s);
}

namespace {

using Neighbor = std::pair<std::size_t, double>;

std::vector<Neighbor> nearest_row(const PointCloud& cloud, std::size_t i, std::size_t k) {
    std::size_t n = cloud.size();
    if (n <= 1) return {};
    std::vector<Neighbor> all;
    all.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        all.emplace_back(j, cloud.distance(i, j));
    }
    std::size_t keep = std::min(k, all.size());
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(),
                      [](const Neighbor& a, const Neighbor& b) {
                          if (a.second != b.second) return a.second < b.second;
                          return a.first < b.first;
                      });
    all.resize(keep);
    return all;
}

Graph assemble(const PointCloud& cloud, std::vector<std::vector<Neighbor>> rows) {
    std::size_t n = cloud.size();
    Graph g;
    g.adj.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, d] : rows[i]) {
            g.adj[i].emplace_back(j, d);
            g.adj[j].emplace_back(i, d);
        }
    for (std::size_t i = 0; i < n; ++i) {
        auto& a = g.adj[i];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

} // namespace

Graph knn_graph_serial(const PointCloud& cloud, std::size_t k) {
    std::size_t n = cloud.size();
    std::vector<std::vector<Neighbor>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = nearest_row(cloud, i, k);
    return assemble(cloud, std::move(rows));
}

Graph knn_graph_parallel(const PointCloud& cloud, std::size_t k) {
    std::size_t n = cloud.size();
    std::vector<std::vector<Neighbor>> rows(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        rows[static_cast<std::size_t>(i)] = nearest_row(cloud, static_cast<std::size_t>(i), k);
    return assemble(cloud, std::move(rows));
}

Graph knn_graph(const PointCloud& cloud, std::size_t k) { return knn_graph_parallel(cloud, k); }

std::vector<int> graph_components(const Graph& g) {
    std::size_t n = g.size();
    std::vector<int> label(n, -1);
    int next = 0;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (const auto& [w, d] : g.adj[v]) {
                (void)d;
                if (label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<double> dijkstra(const Graph& g, std::size_t source) {
    std::size_t n = g.size();
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[source] = 0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) continue;
        for (const auto& [w, len] : g.adj[v]) {
            double nd = d + len;
            if (nd < dist[w]) {
                dist[w] = nd;
                heap.emplace(nd, w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<double>> dijkstra_batch_serial(const Graph& g,
                                                       const std::vector<std::size_t>& sources) {
    std::vector<std::vector<double>> out(sources.size());
    for (std::size_t s = 0; s < sources.size(); ++s) out[s] = dijkstra(g, sources[s]);
    return out;
}

std::vector<std::vector<double>> dijkstra_batch_parallel(const Graph& g,
                                                         const std::vector<std::size_t>& sources) {
    std::vector<std::vector<double>> out(sources.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(sources.size()); ++s)
        out[static_cast<std::size_t>(s)] = dijkstra(g, sources[static_cast<std::size_t>(s)]);
    return out;
}

std::vector<std::vector<double>> dijkstra_batch(const Graph& g,
                                                const std::vector<std::size_t>& sources) {
    return dijkstra_batch_parallel(g, sources);
}

double inner_distance(const PointCloud& cloud, std::size_t p, std::size_t q, std::size_t k) {
    if (p >= cloud.size() || q >= cloud.size())
        throw std::domain_error("point index outside the cloud");
    Graph g = knn_graph(cloud, k);
    std::vector<int> comp = graph_components(g);
    if (!comp.empty() && *std::max_element(comp.begin(), comp.end()) > 0)
        throw disconnected_error("neighbor graph is disconnected at k = " + std::to_string(k) +
                                 "; increase k or sample more densely");
    return dijkstra(g, p)[q];
}

void write_csv(const PointCloud& cloud, std::ostream& out) {
    std::size_t n = cloud.size();
    for (std::size_t c = 0; c < cloud.complex_dim; ++c)
        out << "re" << c << ",im" << c << ",";
    out << "norm\n";
    for (std::size_t i = 0; i < n; ++i) {
        const double* base = cloud.coords.data() + i * 2 * cloud.complex_dim;
        for (std::size_t c = 0; c < 2 * cloud.complex_dim; ++c) out << base[c] << ",";
        out << cloud.norm(i) << "\n";
    }
}

} // namespace coneinf
