// End-to-end acceptance checks: one line per criterion, nonzero exit if any
// fails. Expected values are exact desk-scale oracles plus property checks;
// timing limits guard against accidental blowups in the exact kernels.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "battery.hpp"
#include "coneinf/cone.hpp"
#include "coneinf/errors.hpp"
#include "coneinf/fiber.hpp"
#include "coneinf/groebner.hpp"
#include "coneinf/hilbert.hpp"
#include "coneinf/parser.hpp"
#include "coneinf/probe.hpp"
#include "coneinf/report.hpp"
#include "coneinf/rng.hpp"
#include "coneinf/sampler.hpp"

using namespace coneinf;

namespace {

int g_failures = 0;

struct Criterion {
    std::vector<std::string> problems;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

void run_criterion(int number, const std::string& label, double time_limit_s,
                   const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.problems.push_back(std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && elapsed > time_limit_s) {
        std::ostringstream os;
        os << "took " << elapsed << "s, limit " << time_limit_s << "s";
        c.problems.push_back(os.str());
    }

    std::ostringstream line;
    line << (c.problems.empty() ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << elapsed << "s)";
    for (const auto& p : c.problems) line << "\n       - " << p;
    std::cout << line.str() << "\n";
    if (!c.problems.empty()) ++g_failures;
}

std::vector<std::string> formatted(const std::vector<Polynomial>& polys) {
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(format_polynomial(p));
    return out;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ", ";
        out += p;
    }
    return "{" + out + "}";
}

// The full built-in battery: named curves and surfaces plus random affine
// subspaces of C^4.
std::vector<battery::Entry> full_battery() {
    std::vector<battery::Entry> all = battery::entries();
    for (auto& e : battery::linear_battery(5, 10)) all.push_back(std::move(e));
    return all;
}

// Multiplicity count of a generic fiber of an admissible projection chosen
// from the seed; -1 when every sampled point was non-generic.
long long fiber_count(const Ideal& I, int dim, std::uint64_t seed) {
    LinearChangeResult lc = random_linear_change(I, static_cast<std::size_t>(dim), seed);
    for (int attempt = 0; attempt < 10; ++attempt) {
        Rng rng = derive_rng(seed, "consistency-point", static_cast<std::uint64_t>(attempt));
        std::vector<Rat> point;
        for (int i = 0; i < dim; ++i) point.emplace_back(rng.uniform_int(-10000, 10000));
        try {
            return quotient_dimension(generic_fiber(I, lc.split, point));
        } catch (const genericity_error&) {
        }
    }
    return -1;
}

std::vector<long long> standard_monomial_counts(const std::vector<Monomial>& gens,
                                                std::size_t nvars, std::size_t upto) {
    std::vector<long long> counts(upto + 1, 0);
    Monomial m(nvars);
    auto rec = [&](auto&& self, std::size_t var, std::size_t degree_left) -> void {
        if (var == nvars) {
            bool standard = true;
            for (const auto& g : gens) standard = standard && !mono_divides(g, m);
            if (standard) ++counts[m.degree()];
            return;
        }
        for (std::size_t e = 0; e <= degree_left; ++e) {
            m.exps[var] = static_cast<std::uint32_t>(e);
            self(self, var + 1, degree_left - e);
        }
        m.exps[var] = 0;
    };
    rec(rec, 0, upto);
    return counts;
}

void criterion_parabola(Criterion& c) {
    Ideal I = battery::make_ideal({"x", "y"}, {"y - x^2"});
    ConeResult cone = cone_at_infinity(I);
    c.expect(formatted(cone.cone_ideal.generators()) == std::vector<std::string>{"x^2"},
             "cone ideal is " + join(formatted(cone.cone_ideal.generators())) + ", want {x^2}");
    HilbertData hx = dim_degree(I);
    HilbertData hc = dim_degree(cone.cone_ideal);
    c.expect(hx.dim_projective == 1, "dim X != 1");
    c.expect(hc.dim_projective == 1, "dim cone != 1");
    c.expect(hx.degree_scheme == 2, "scheme degree of X != 2");
    long long reduced = reduced_degree(cone.cone_ideal, 1);
    c.expect(reduced == 1, "reduced cone degree != 1");
    c.expect(hx.degree_scheme > reduced, "degree inequality is not strict");
}

void criterion_hyperbola(Criterion& c) {
    Ideal I = battery::make_ideal({"x", "y"}, {"x*y - 1"});
    ConeResult cone = cone_at_infinity(I);
    c.expect(formatted(cone.cone_ideal.generators()) == std::vector<std::string>{"x*y"},
             "cone ideal is " + join(formatted(cone.cone_ideal.generators())) + ", want {x*y}");
    TheoremReport report = verify_theorem(I, 1);
    c.expect(report.dim_X == 1 && report.dim_cone == 1 && report.dims_equal,
             "dimensions are not both 1");
    c.expect(report.deg_scheme_X == 2, "scheme degree of X != 2");
    c.expect(report.deg_reduced_cone && *report.deg_reduced_cone == 2,
             "reduced cone degree != 2");
    c.expect(report.equality_holds, "degree equality does not hold");
    c.expect(report.lne_verdict && *report.lne_verdict == "bounded",
             "distance profile verdict is not bounded");
}

void criterion_twisted_cubic(Criterion& c) {
    Ideal I = battery::make_ideal({"x", "y", "z"}, {"y - x^2", "z - x^3"});
    std::vector<std::string> gb = formatted(I.groebner_basis(MonomialOrder::grevlex()));
    std::vector<std::string> expected = {"x^2 - y", "x*y - z", "y^2 - x*z"};
    c.expect(gb == expected, "groebner basis is " + join(gb) + ", want " + join(expected));

    ConeResult cone = cone_at_infinity(I);
    std::vector<std::string> cone_gens = formatted(cone.cone_ideal.generators());
    std::vector<std::string> cone_expected = {"x^2", "x*y", "y^2 - x*z"};
    c.expect(cone_gens == cone_expected,
             "cone ideal is " + join(cone_gens) + ", want " + join(cone_expected));

    HilbertData hx = dim_degree(I);
    HilbertData hc = dim_degree(cone.cone_ideal);
    c.expect(hx.dim_projective == 1 && hc.dim_projective == 1, "dimensions are not both 1");
    c.expect(hx.degree_scheme == 3, "scheme degree of X != 3");
    c.expect(hc.degree_scheme == 3, "scheme degree of cone != 3");
    c.expect(reduced_degree(cone.cone_ideal, 1) == 1, "reduced cone degree != 1");
}

void criterion_linear_battery(Criterion& c) {
    for (const auto& entry : battery::linear_battery(5, 10)) {
        HilbertData h = dim_degree(entry.ideal);
        if (h.dim_projective != entry.dim) {
            c.expect(false, entry.name + ": dim " + std::to_string(h.dim_projective) + ", want " +
                                std::to_string(entry.dim));
            continue;
        }
        c.expect(h.degree_scheme == 1, entry.name + ": scheme degree != 1");
        Ideal cone = cone_at_infinity(entry.ideal).cone_ideal;
        c.expect(reduced_degree(cone, 2) == 1, entry.name + ": reduced cone degree != 1");
    }
}

void criterion_fiber_degree(Criterion& c) {
    for (const auto& entry : full_battery()) {
        HilbertData h = dim_degree(entry.ideal);
        for (std::uint64_t seed : {3, 11, 23}) {
            long long count = entry.dim == 0 ? quotient_dimension(entry.ideal)
                                             : fiber_count(entry.ideal, entry.dim, seed);
            if (count != h.degree_scheme) {
                std::ostringstream os;
                os << entry.name << " seed " << seed << ": fiber count " << count
                   << ", scheme degree " << h.degree_scheme;
                c.expect(false, os.str());
            }
        }
    }
}

void criterion_dims_equal(Criterion& c) {
    for (const auto& entry : full_battery()) {
        HilbertData hx = dim_degree(entry.ideal);
        HilbertData hc = dim_degree(cone_at_infinity(entry.ideal).cone_ideal);
        if (hx.dim_projective != hc.dim_projective) {
            std::ostringstream os;
            os << entry.name << ": dim " << hx.dim_projective << " vs cone dim "
               << hc.dim_projective;
            c.expect(false, os.str());
        }
    }
}

void criterion_groebner(Criterion& c) {
    const MonomialOrder ord = MonomialOrder::grevlex();
    for (const auto& entry : full_battery()) {
        std::vector<Polynomial> base = buchberger(entry.ideal.generators(), ord);
        c.expect(buchberger(base, ord) == base, entry.name + ": basis is not idempotent");
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i + 1; j < base.size(); ++j)
                c.expect(reduce(s_polynomial(base[i], base[j], ord), base, ord).is_zero(),
                         entry.name + ": an s-polynomial does not reduce to zero");
        Rng rng = derive_rng(17, "shuffle", Rng::hash_tag(entry.name));
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Polynomial> gens = entry.ideal.generators();
            for (std::size_t i = gens.size(); i > 1; --i)
                std::swap(gens[i - 1], gens[rng.uniform_int(0, static_cast<std::int64_t>(i) - 1)]);
            for (auto& g : gens) {
                Rat scale = Rat(rng.uniform_int(1, 7)) / Rat(rng.uniform_int(1, 7));
                if (rng.uniform_int(0, 1)) scale = -scale;
                g = g.scaled(scale);
            }
            if (buchberger(gens, ord) != base) {
                c.expect(false, entry.name + ": shuffled generators gave a different basis");
                break;
            }
        }
    }
}

void criterion_hilbert_counts(Criterion& c) {
    Rng rng(808, 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t nvars = static_cast<std::size_t>(rng.uniform_int(1, 4));
        std::size_t ngens = static_cast<std::size_t>(rng.uniform_int(1, 5));
        std::vector<Monomial> gens;
        for (std::size_t g = 0; g < ngens; ++g) {
            Monomial m(nvars);
            for (auto& e : m.exps) e = static_cast<std::uint32_t>(rng.uniform_int(0, 4));
            if (m.degree() == 0) m.exps[0] = 1;
            gens.push_back(std::move(m));
        }
        UniPoly num = hilbert_numerator(gens, nvars);
        if (hilbert_series_prefix(num, nvars, 8) != standard_monomial_counts(gens, nvars, 8))
            c.expect(false, "series prefix mismatch on trial " + std::to_string(trial));
    }
}

void criterion_profiles(Criterion& c) {
    auto ctx = make_context({"x", "y"});
    const std::vector<double> radii = {10, 20, 40, 80};

    for (std::uint64_t seed : {1, 2}) {
        LneProfile p = lne_profile(parse_polynomial("y - x^2", ctx), radii, 400, 8, seed);
        c.expect(p.verdict == "growing",
                 "parabola verdict '" + p.verdict + "' at seed " + std::to_string(seed));
        c.expect(p.ratios.back() >= 1.5 * p.ratios.front(),
                 "parabola ratio growth below 1.5x at seed " + std::to_string(seed));
    }

    LneProfile h = lne_profile(parse_polynomial("x*y - 1", ctx), radii, 400, 8, 1);
    c.expect(h.verdict == "bounded", "hyperbola verdict '" + h.verdict + "'");
    for (double r : h.ratios)
        c.expect(r <= 2.0 * h.ratios.front(), "a hyperbola ratio exceeds twice the first band");

    LneProfile l = lne_profile(parse_polynomial("y", ctx), radii, 400, 8, 1);
    c.expect(l.verdict == "bounded", "line verdict '" + l.verdict + "'");
    for (double r : l.ratios)
        c.expect(r <= 2.0 * l.ratios.front(), "a line ratio exceeds twice the first band");
}

void criterion_regions(Criterion& c) {
    auto ctx = make_context({"x", "y"});

    PointCloud cubic = sample_hypersurface(parse_polynomial("y - x^3", ctx), 3000, 3000000, 400, 5);
    AlgebraicRegion region = region_fit(cubic, CoordinateSplit::identity(2, 1));
    c.expect(region.B >= 2.8 && region.B <= 3.2,
             "cubic growth exponent " + std::to_string(region.B) + " outside [2.8, 3.2]");
    std::size_t inside = 0;
    for (std::size_t i = 0; i < cubic.size(); ++i)
        if (region_contains(region, cubic.point(i))) ++inside;
    c.expect(inside == cubic.size(), "fitted region misses sampled cubic points");

    // Samples of the parabola and exact points of its cone at infinity (the
    // y-axis) must fit in one region over the projection onto that axis.
    CoordinateSplit onto_y = CoordinateSplit::from_matrix(1, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    PointCloud combined = sample_hypersurface(parse_polynomial("y - x^2", ctx), 10, 500, 300, 2);
    for (double scale : {15.0, 40.0, 90.0, 200.0, 450.0})
        for (double t : {0.0, 1.0, 2.5, 4.0, 5.5})
            combined.push({{0, 0}, {scale * std::cos(t), scale * std::sin(t)}});
    AlgebraicRegion shared = region_fit(combined, onto_y);
    std::size_t both = 0;
    for (std::size_t i = 0; i < combined.size(); ++i)
        if (region_contains(shared, combined.point(i))) ++both;
    c.expect(both == combined.size(), "curve and cone points do not share one region");
}

void criterion_tangents(Criterion& c) {
    auto ctx = make_context({"x", "y"});
    Polynomial f = parse_polynomial("x*y - 1", ctx);
    ConeResult cone = cone_at_infinity(Ideal(ctx, {f}));

    std::vector<double> residuals;
    for (double scale : {10.0, 30.0, 100.0, 300.0}) {
        auto dirs = tangent_directions(f, {scale}, 50, 4, cone);
        double worst = 0;
        for (const auto& d : dirs) worst = std::max(worst, d.residual);
        residuals.push_back(worst);
    }
    for (std::size_t i = 0; i + 1 < residuals.size(); ++i)
        c.expect(residuals[i + 1] <= residuals[i], "residuals increase between scales");
    c.expect(residuals.back() <= 1e-4,
             "residual at the largest scale is " + std::to_string(residuals.back()));
}

} // namespace

int main() {
    run_criterion(1, "parabola pipeline", 1.0, criterion_parabola);
    run_criterion(2, "hyperbola degrees, equality and bounded profile", 0, criterion_hyperbola);
    run_criterion(3, "twisted cubic exact bases and degrees", 5.0, criterion_twisted_cubic);
    run_criterion(4, "random affine subspaces have degree one", 0, criterion_linear_battery);
    run_criterion(5, "scheme degree equals generic fiber count", 0, criterion_fiber_degree);
    run_criterion(6, "dimension matches the cone at infinity", 0, criterion_dims_equal);
    run_criterion(7, "reduced groebner bases are canonical", 0, criterion_groebner);
    run_criterion(8, "hilbert series match monomial counting", 0, criterion_hilbert_counts);
    run_criterion(9, "distance profiles classify the model curves", 60.0, criterion_profiles);
    run_criterion(10, "growth regions fit sampled clouds", 10.0, criterion_regions);
    run_criterion(11, "tangent directions satisfy the cone equations", 0, criterion_tangents);

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
