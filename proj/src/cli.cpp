#include "coneinf/cli.hpp"

#include <algorithm>
#include <complex>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coneinf/cone.hpp"
#include "coneinf/errors.hpp"
#include "coneinf/fiber.hpp"
#include "coneinf/hilbert.hpp"
#include "coneinf/idealfile.hpp"
#include "coneinf/parser.hpp"
#include "coneinf/probe.hpp"
#include "coneinf/report.hpp"
#include "coneinf/sampler.hpp"

namespace coneinf {

namespace {

using ordered_json = nlohmann::ordered_json;

MonomialOrder order_from_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "grlex") return MonomialOrder::grlex();
    if (name == "lex") return MonomialOrder::lex();
    throw std::domain_error("unknown monomial order: " + name);
}

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            double v = std::stod(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::domain_error("bad value for " + flag + ": '" + item + "'");
        }
    }
    if (out.empty()) throw std::domain_error("empty list for " + flag);
    return out;
}

ordered_json generators_json(const Ideal& I) {
    ordered_json arr = ordered_json::array();
    for (const auto& g : I.generators()) arr.push_back(format_polynomial(g));
    return arr;
}

ordered_json point_json(const CPoint& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p) arr.push_back(ordered_json::array({c.real(), c.imag()}));
    return arr;
}

std::string format_point(const CPoint& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ", ";
        os << p[i].real();
        if (p[i].imag() >= 0)
            os << "+" << p[i].imag() << "i";
        else
            os << "-" << -p[i].imag() << "i";
    }
    os << ")";
    return os.str();
}

// The single generator of a hypersurface input, which the samplers require
// to depend on the last variable.
const Polynomial& hypersurface_generator(const IdealFile& file, const std::string& command) {
    const auto& gens = file.ideal.generators();
    if (gens.size() != 1)
        throw std::domain_error(command + " needs a single-generator (hypersurface) input, got " +
                                std::to_string(gens.size()) + " generators");
    return gens.front();
}

void write_json(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write to " + path);
    out << j.dump(2) << "\n";
}

struct CommonArgs {
    std::string input;
    std::uint64_t seed = 0;
    std::string order = "grevlex";
    std::string json_path;
    std::size_t budget = kDefaultBudget;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--input", args.input, "ideal description file")->required();
    cmd->add_option("--seed", args.seed, "random seed shared by all sampling stages");
    cmd->add_option("--order", args.order, "monomial order")
        ->check(CLI::IsMember({"grevlex", "grlex", "lex"}));
    cmd->add_option("--json", args.json_path, "write the report as JSON to this path");
    cmd->add_option("--budget", args.budget, "Groebner pair budget");
}

ordered_json report_skeleton(const CommonArgs& args) {
    ordered_json j;
    j["tool_version"] = kToolVersion;
    j["input"] = args.input;
    j["seed"] = args.seed;
    j["stages"] = ordered_json::object();
    return j;
}

int cmd_cone(const CommonArgs& args, std::ostream& out) {
    IdealFile file = load_ideal_file(args.input);
    ConeResult cone = cone_at_infinity(file.ideal, order_from_name(args.order), args.budget);
    ordered_json j = report_skeleton(args);
    j["stages"]["cone"] = {{"generators", generators_json(cone.cone_ideal)}};
    if (!args.json_path.empty()) {
        write_json(args.json_path, j);
        return 0;
    }
    out << "cone at infinity of " << file.name << ":\n";
    if (cone.cone_ideal.is_zero())
        out << "  0 (the whole space)\n";
    else
        for (const auto& g : cone.cone_ideal.generators()) out << "  " << format_polynomial(g) << "\n";
    return 0;
}

int cmd_closure(const CommonArgs& args, std::ostream& out) {
    IdealFile file = load_ideal_file(args.input);
    MonomialOrder ord = order_from_name(args.order);
    if (!ord.is_graded())
        throw std::domain_error("projective closure needs a graded order, got " + ord.name());
    ProjectiveClosure pc = projective_closure(file.ideal, args.budget);
    ordered_json j = report_skeleton(args);
    j["stages"]["closure"] = {{"generators", generators_json(pc.ideal)},
                              {"homogenizing_variable", pc.homogenizing_variable}};
    if (!args.json_path.empty()) {
        write_json(args.json_path, j);
        return 0;
    }
    out << "projective closure of " << file.name << " (homogenizing variable "
        << pc.homogenizing_variable << "):\n";
    if (pc.ideal.is_zero())
        out << "  0 (the whole space)\n";
    else
        for (const auto& g : pc.ideal.generators()) out << "  " << format_polynomial(g) << "\n";
    return 0;
}

int cmd_invariants(const CommonArgs& args, std::ostream& out) {
    IdealFile file = load_ideal_file(args.input);
    HilbertData data = dim_degree(file.ideal, order_from_name(args.order), args.budget);
    ordered_json j = report_skeleton(args);
    j["stages"]["invariants"] = {{"dim", data.dim_projective},
                                 {"degree_scheme", data.degree_scheme}};
    if (!args.json_path.empty()) {
        write_json(args.json_path, j);
        return 0;
    }
    out << file.name << ": dim " << data.dim_projective << ", scheme degree "
        << data.degree_scheme << "\n";
    return 0;
}

int cmd_verify(const CommonArgs& args, bool no_lne, const std::vector<double>& radii,
               std::size_t count, std::size_t knn, std::ostream& out) {
    IdealFile file = load_ideal_file(args.input);
    VerifyOptions options;
    options.with_lne = !no_lne;
    options.lne_radii = radii;
    options.lne_count = count;
    options.lne_k = knn;
    TheoremReport report = verify_theorem(file.ideal, args.seed, options, args.budget);
    ConeResult cone = cone_at_infinity(file.ideal, MonomialOrder::grevlex(), args.budget);

    ordered_json j = report_skeleton(args);
    auto& stages = j["stages"];
    stages["cone"] = {{"generators", generators_json(cone.cone_ideal)}};
    stages["invariants"] = {{"dim", report.dim_X}, {"degree_scheme", report.deg_scheme_X}};
    stages["cone_invariants"] = {{"dim", report.dim_cone},
                                 {"degree_scheme", report.deg_scheme_cone}};
    if (report.deg_reduced_cone)
        stages["reduced_cone_degree"] = *report.deg_reduced_cone;
    else
        stages["reduced_cone_degree"] = nullptr;
    stages["checks"] = {{"dims_equal", report.dims_equal},
                        {"inequality_holds", report.inequality_holds},
                        {"equality_holds", report.equality_holds}};
    if (report.lne_verdict)
        stages["lne"] = {{"radii", report.lne_radii},
                         {"ratios", report.lne_ratios},
                         {"verdict", *report.lne_verdict}};
    else
        stages["lne"] = nullptr;
    if (!args.json_path.empty()) {
        write_json(args.json_path, j);
        return 0;
    }

    out << "verify " << file.name << ":\n";
    out << "  dim X = " << report.dim_X << ", dim cone = " << report.dim_cone << " ("
        << (report.dims_equal ? "equal" : "NOT EQUAL") << ")\n";
    out << "  scheme degree: X = " << report.deg_scheme_X << ", cone = " << report.deg_scheme_cone
        << "\n";
    if (report.deg_reduced_cone) {
        out << "  reduced cone degree = " << *report.deg_reduced_cone << "\n";
        out << "  deg X >= reduced cone degree: " << (report.inequality_holds ? "holds" : "FAILS")
            << (report.equality_holds ? " with equality" : "") << "\n";
    } else {
        out << "  deg X >= cone scheme degree: " << (report.inequality_holds ? "holds" : "FAILS")
            << "\n";
    }
    out << "  equality: " << (report.equality_holds ? "yes" : "no") << "\n";
    if (report.lne_verdict) {
        out << "  lne profile: " << *report.lne_verdict << " (ratios";
        for (double r : report.lne_ratios) out << " " << r;
        out << ")\n";
    }
    for (const auto& note : report.notes) out << "  note: " << note << "\n";
    return 0;
}

int cmd_lne_probe(const CommonArgs& args, const std::vector<double>& radii, std::size_t count,
                  std::size_t knn, std::ostream& out) {
    IdealFile file = load_ideal_file(args.input);
    const Polynomial& f = hypersurface_generator(file, "lne-probe");
    LneProfile profile = lne_profile(f, radii, count, knn, args.seed);
    ordered_json j = report_skeleton(args);
    j["stages"]["lne"] = {{"radii", profile.radii},
                          {"ratios", profile.ratios},
                          {"verdict", profile.verdict}};
    if (!args.json_path.empty()) {
        write_json(args.json_path, j);
        return 0;
    }
    out << "lne probe of " << file.name << ":\n";
    for (std::size_t i = 0; i < profile.radii.size(); ++i) {
        const auto& band = profile.bands[i];
        out << "  radius " << profile.radii[i] << ": max inner/chord ratio " << profile.ratios[i]
            << " (" << band.samples << " points, k = " << band.k_used << ", "
            << band.components << (band.components == 1 ? " component" : " components") << ")\n";
    }
    out << "  verdict: " << profile.verdict << ", C estimate " << profile.c_estimate << "\n";
    return 0;
}

int cmd_region_fit(const CommonArgs& args, const std::vector<double>& band, std::size_t count,
                   std::size_t split_k, std::ostream& out) {
    IdealFile file = load_ideal_file(args.input);
    const Polynomial& f = hypersurface_generator(file, "region-fit");
    if (band.size() != 2 || !(band[0] < band[1]) || band[0] < 0)
        throw std::domain_error("--band needs two increasing nonnegative values lo,hi");
    std::size_t n = file.ideal.nvars();
    if (split_k == 0 || split_k >= n)
        throw std::domain_error("--split-k must lie strictly between 0 and the variable count");
    PointCloud cloud = sample_hypersurface(f, band[0], band[1], count, args.seed);
    AlgebraicRegion region = region_fit(cloud, CoordinateSplit::identity(n, split_k));
    std::size_t inside = 0;
    for (std::size_t i = 0; i < cloud.size(); ++i)
        if (region_contains(region, cloud.point(i))) ++inside;
    ordered_json j = report_skeleton(args);
    j["stages"]["region"] = {{"split_k", split_k},
                             {"A", region.A},
                             {"B", region.B},
                             {"points", cloud.size()},
                             {"contained", inside}};
    if (!args.json_path.empty()) {
        write_json(args.json_path, j);
        return 0;
    }
    out << "region fit for " << file.name << " (first " << split_k << " of " << n
        << " coordinates):\n";
    out << "  ||z''|| <= " << region.A << " * (1 + ||z'||)^" << region.B << "\n";
    out << "  contains " << inside << " of " << cloud.size() << " sampled points\n";
    return 0;
}

int cmd_tangent_dirs(const CommonArgs& args, const std::vector<double>& scales,
                     std::size_t count, std::ostream& out) {
    IdealFile file = load_ideal_file(args.input);
    const Polynomial& f = hypersurface_generator(file, "tangent-dirs");
    ConeResult cone = cone_at_infinity(file.ideal, MonomialOrder::grevlex(), args.budget);
    std::vector<TangentDirection> dirs = tangent_directions(f, scales, count, args.seed, cone);
    ordered_json j = report_skeleton(args);
    ordered_json arr = ordered_json::array();
    for (const auto& d : dirs)
        arr.push_back({{"direction", point_json(d.direction)},
                       {"residual", d.residual},
                       {"support", d.support}});
    j["stages"]["tangent_directions"] = arr;
    if (!args.json_path.empty()) {
        write_json(args.json_path, j);
        return 0;
    }
    out << "tangent directions at infinity of " << file.name << " (" << dirs.size()
        << (dirs.size() == 1 ? " cluster" : " clusters") << "):\n";
    for (const auto& d : dirs)
        out << "  " << format_point(d.direction) << "  residual " << d.residual << "  ("
            << d.support << " samples)\n";
    return 0;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of affine complex algebraic sets and their cones at infinity"};
    app.name("coneinf");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    CommonArgs cone_args;
    CLI::App* cone_cmd = app.add_subcommand("cone", "cone at infinity of an affine set");
    add_common(cone_cmd, cone_args);

    CommonArgs closure_args;
    CLI::App* closure_cmd = app.add_subcommand("closure", "projective closure of an affine set");
    add_common(closure_cmd, closure_args);

    CommonArgs inv_args;
    CLI::App* inv_cmd = app.add_subcommand("invariants", "dimension and scheme degree");
    add_common(inv_cmd, inv_args);

    CommonArgs verify_args;
    bool verify_no_lne = false;
    std::string verify_radii = "10,20,40,80";
    std::size_t verify_count = 400;
    std::size_t verify_knn = 8;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "compare the invariants of a set and of its cone at infinity");
    add_common(verify_cmd, verify_args);
    verify_cmd->add_flag("--no-lne", verify_no_lne, "skip the sampled Lipschitz profile");
    verify_cmd->add_option("--radii", verify_radii, "comma-separated profile radii");
    verify_cmd->add_option("--count", verify_count, "points per radius band");
    verify_cmd->add_option("--knn", verify_knn, "neighbor count for the metric graph");

    CommonArgs probe_args;
    std::string probe_radii = "10,20,40,80";
    std::size_t probe_count = 400;
    std::size_t probe_knn = 8;
    CLI::App* probe_cmd =
        app.add_subcommand("lne-probe", "sampled inner-vs-Euclidean distance profile");
    add_common(probe_cmd, probe_args);
    probe_cmd->add_option("--radii", probe_radii, "comma-separated profile radii");
    probe_cmd->add_option("--count", probe_count, "points per radius band");
    probe_cmd->add_option("--knn", probe_knn, "neighbor count for the metric graph");

    CommonArgs region_args;
    std::string region_band = "10,500";
    std::size_t region_count = 400;
    std::size_t region_split_k = 1;
    CLI::App* region_cmd =
        app.add_subcommand("region-fit", "fit a polynomial growth region to a sampled cloud");
    add_common(region_cmd, region_args);
    region_cmd->add_option("--band", region_band, "sampling band lo,hi of point norms");
    region_cmd->add_option("--count", region_count, "number of points to sample");
    region_cmd->add_option("--split-k", region_split_k, "coordinates spanning the base of the region");

    CommonArgs tangent_args;
    std::string tangent_scales = "10,30,100,300";
    std::size_t tangent_count = 50;
    CLI::App* tangent_cmd =
        app.add_subcommand("tangent-dirs", "numerical tangent directions at infinity");
    add_common(tangent_cmd, tangent_args);
    tangent_cmd->add_option("--scales", tangent_scales, "comma-separated sampling scales");
    tangent_cmd->add_option("--count", tangent_count, "points per scale");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(cone_cmd)) return cmd_cone(cone_args, out);
        if (app.got_subcommand(closure_cmd)) return cmd_closure(closure_args, out);
        if (app.got_subcommand(inv_cmd)) return cmd_invariants(inv_args, out);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(verify_args, verify_no_lne,
                              parse_double_list(verify_radii, "--radii"), verify_count,
                              verify_knn, out);
        if (app.got_subcommand(probe_cmd))
            return cmd_lne_probe(probe_args, parse_double_list(probe_radii, "--radii"),
                                 probe_count, probe_knn, out);
        if (app.got_subcommand(region_cmd))
            return cmd_region_fit(region_args, parse_double_list(region_band, "--band"),
                                  region_count, region_split_k, out);
        if (app.got_subcommand(tangent_cmd))
            return cmd_tangent_dirs(tangent_args, parse_double_list(tangent_scales, "--scales"),
                                    tangent_count, out);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no command selected\n";
    return 2;
}

} // namespace coneinf
