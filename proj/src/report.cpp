#include "coneinf/report.hpp"

#include <stdexcept>

#include "coneinf/errors.hpp"
#include "coneinf/fiber.hpp"
#include "coneinf/probe.hpp"

namespace coneinf {

TheoremReport verify_theorem(const Ideal& I, std::uint64_t seed, const VerifyOptions& options,
                             std::size_t budget) {
    if (I.is_unit(budget)) throw std::domain_error("unit ideal: the variety is empty");

    TheoremReport report;
    HilbertData hx = dim_degree(I, budget);
    report.dim_X = hx.dim_projective;
    report.deg_scheme_X = hx.degree_scheme;

    ConeResult cone = cone_at_infinity(I, MonomialOrder::grevlex(), budget);
    HilbertData hc = dim_degree(cone.cone_ideal, budget);
    report.dim_cone = hc.dim_projective;
    report.deg_scheme_cone = hc.degree_scheme;
    report.dims_equal = report.dim_X == report.dim_cone;

    try {
        report.deg_reduced_cone = reduced_degree(cone.cone_ideal, seed, budget);
    } catch (const resource_limit_error& e) {
        report.notes.push_back(std::string("reduced cone degree unavailable: ") + e.what());
    } catch (const genericity_error& e) {
        report.notes.push_back(std::string("reduced cone degree unavailable: ") + e.what());
    }

    if (report.deg_reduced_cone) {
        report.inequality_holds = report.deg_scheme_X >= *report.deg_reduced_cone;
        report.equality_holds = report.deg_scheme_X == *report.deg_reduced_cone;
    } else {
        report.inequality_holds = report.deg_scheme_X >= report.deg_scheme_cone;
        report.equality_holds = false;
        report.notes.push_back("degree flags fall back to the scheme degree of the cone");
    }

    bool hypersurface = I.generators().size() == 1 && I.nvars() >= 2 &&
                        I.generators().front().degree_in(I.nvars() - 1) >= 1;
    if (options.with_lne && hypersurface) {
        try {
            LneProfile profile = lne_profile(I.generators().front(), options.lne_radii,
                                             options.lne_count, options.lne_k, seed);
            report.lne_verdict = profile.verdict;
            report.lne_radii = profile.radii;
            report.lne_ratios = profile.ratios;
        } catch (const sampling_error& e) {
            report.notes.push_back(std::string("lne profile unavailable: ") + e.what());
        } catch (const std::domain_error& e) {
            report.notes.push_back(std::string("lne profile unavailable: ") + e.what());
        }
    }
    return report;
}

} // namespace coneinf
