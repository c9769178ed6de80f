#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coneinf/cone.hpp"
#include "coneinf/hilbert.hpp"
#include "coneinf/ideal.hpp"

namespace coneinf {

// Comparison of the invariants of an affine set X and of its cone at
// infinity: the dimensions always agree, the scheme degree of X bounds the
// reduced cone degree from above, and equality correlates with the sampled
// Lipschitz profile verdict for hypersurfaces.
struct TheoremReport {
    int dim_X = 0;
    int dim_cone = 0;
    long long deg_scheme_X = 0;
    long long deg_scheme_cone = 0;
    std::optional<long long> deg_reduced_cone;
    bool dims_equal = false;
    bool inequality_holds = false;
    bool equality_holds = false;
    std::optional<std::string> lne_verdict;
    std::vector<double> lne_radii;
    std::vector<double> lne_ratios;
    std::vector<std::string> notes;
};

struct VerifyOptions {
    bool with_lne = true;
    std::vector<double> lne_radii{10, 20, 40, 80};
    std::size_t lne_count = 400;
    std::size_t lne_k = 8;
};

// Runs the full symbolic pipeline on a proper ideal; the Lipschitz profile
// is attached only for hypersurface inputs (a single generator in at least
// two variables that depends on the last one). Component failures downgrade
// to notes instead of aborting the report.
TheoremReport verify_theorem(const Ideal& I, std::uint64_t seed = 0,
                             const VerifyOptions& options = {},
                             std::size_t budget = kDefaultBudget);

} // namespace coneinf
