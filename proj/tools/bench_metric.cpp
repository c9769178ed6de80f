// Compares the serial reference metric kernels against the OpenMP ones on a
// synthetic cloud and checks that both produce identical output.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "coneinf/cloud.hpp"
#include "coneinf/rng.hpp"

using namespace coneinf;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

PointCloud synthetic_cloud(std::size_t n, std::uint64_t seed) {
    PointCloud cloud;
    Rng rng = derive_rng(seed, "bench-cloud");
    for (std::size_t i = 0; i < n; ++i) {
        double t = rng.uniform(-30.0, 30.0);
        double s = rng.uniform(-30.0, 30.0);
        CPoint p{{t, s}, {t * t - s * s, 2 * t * s}, {rng.gaussian(), rng.gaussian()}};
        cloud.push(p);
    }
    return cloud;
}

bool graphs_equal(const Graph& a, const Graph& b) {
    if (a.adj.size() != b.adj.size()) return false;
    for (std::size_t i = 0; i < a.adj.size(); ++i)
        if (a.adj[i] != b.adj[i]) return false;
    return true;
}

bool batches_equal(const std::vector<std::vector<double>>& a,
                   const std::vector<std::vector<double>>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    std::size_t n = 6000;
    std::size_t k = 8;
    std::size_t nsources = 64;
    if (argc > 1) n = static_cast<std::size_t>(std::atoll(argv[1]));
    if (argc > 2) k = static_cast<std::size_t>(std::atoll(argv[2]));

#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::printf("metric kernel benchmark: %zu points in C^3, k = %zu, %d thread%s\n", n, k,
                threads, threads == 1 ? "" : "s");
    if (threads == 1)
        std::printf("note: only one hardware thread available, expect parity not speedup\n");

    PointCloud cloud = synthetic_cloud(n, 1);

    auto t0 = std::chrono::steady_clock::now();
    Graph gs = knn_graph_serial(cloud, k);
    double serial_knn = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    Graph gp = knn_graph_parallel(cloud, k);
    double parallel_knn = seconds_since(t0);
    bool knn_match = graphs_equal(gs, gp);
    std::printf("knn graph:      serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
                serial_knn, parallel_knn, serial_knn / parallel_knn,
                knn_match ? "identical" : "MISMATCH");

    std::vector<std::size_t> sources;
    Rng rng = derive_rng(2, "bench-sources");
    for (std::size_t i = 0; i < nsources; ++i)
        sources.push_back(rng.uniform_int(0, static_cast<long long>(n) - 1));

    t0 = std::chrono::steady_clock::now();
    auto ds = dijkstra_batch_serial(gs, sources);
    double serial_dij = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto dp = dijkstra_batch_parallel(gs, sources);
    double parallel_dij = seconds_since(t0);
    bool dij_match = batches_equal(ds, dp);
    std::printf("dijkstra x%-4zu  serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
                nsources, serial_dij, parallel_dij, serial_dij / parallel_dij,
                dij_match ? "identical" : "MISMATCH");

    return knn_match && dij_match ? 0 : 1;
}
