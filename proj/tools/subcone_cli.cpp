// subcone: command-line front end for the segregation-metric trees and their
// witness constructions in the hyperbolic plane.
//
// Exit status: 0 success, 1 verification failure, 2 input error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subcone/core_tree.hpp"
#include "subcone/embedding.hpp"
#include "subcone/errors.hpp"
#include "subcone/homogeneity.hpp"
#include "subcone/hyperbolic.hpp"
#include "subcone/io.hpp"
#include "subcone/selftest.hpp"
#include "subcone/verification.hpp"

namespace {

using namespace subcone;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

// Error floor for the monotonicity check on witness errors.
constexpr Real kRoundoffFloor = 1e-12L;

std::string decimal(const Rational& r) { return io::format_real(r.to_long_double()); }

PLFunction load_pl(const std::string& path) { return io::parse_pl_function(io::read_file(path), path); }

DiscreteFunction load_discrete(const std::string& path)
{
    return io::parse_discrete_function(io::read_file(path), path);
}

// "dyadic:A:B" for 2^-A..2^-B, or a comma list of positive floats.
EpsilonSchedule parse_schedule(const std::string& spec)
{
    if (spec.rfind("dyadic:", 0) == 0) {
        int first = 0;
        int last = 0;
        char tail = 0;
        if (std::sscanf(spec.c_str() + 7, "%d:%d%c", &first, &last, &tail) != 2 || last < first) {
            throw ParseError("epsilon schedule '" + spec + "': expected dyadic:<first>:<last>");
        }
        return EpsilonSchedule::dyadic(first, last);
    }
    std::vector<Real> values;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const Real v = std::strtold(item.c_str(), &end);
        if (item.empty() || *end != '\0') {
            throw ParseError("epsilon schedule: malformed value '" + item + "'");
        }
        values.push_back(v);
    }
    try {
        return EpsilonSchedule(std::move(values));
    } catch (const InvariantError& e) {
        throw ParseError(std::string("epsilon schedule: ") + e.what());
    }
}

std::ostream& open_csv(const std::string& path, std::ofstream& file)
{
    if (path.empty() || path == "-") {
        return std::cout;
    }
    file.open(path, std::ios::binary);
    if (!file) {
        throw ParseError(path + ": cannot write");
    }
    return file;
}

int cmd_dist(const std::string& a, const std::string& b, bool discrete)
{
    SegregationResult seg;
    Rational d;
    if (discrete) {
        const auto g1 = load_discrete(a);
        const auto g2 = load_discrete(b);
        seg = segregation_moment(g1, g2);
        d = distance_discrete(g1, g2);
    } else {
        const auto f1 = load_pl(a);
        const auto f2 = load_pl(b);
        seg = segregation_moment(f1, f2);
        d = distance(f1, f2);
    }
    std::cout << "distance " << d << "\n"
              << "decimal " << decimal(d) << "\n"
              << "segregation " << seg.s << "\n"
              << "relation " << to_string(seg.relation) << "\n";
    return kOk;
}

int cmd_geodesic(const std::string& a, const std::string& b, const std::string& x)
{
    std::cout << io::serialize(geodesic_point(load_pl(a), load_pl(b), Rational::parse(x)));
    return kOk;
}

int cmd_embed(const std::string& matrix, const std::string& out_dir, const std::string& slopes_spec)
{
    const TreeMetric a = io::parse_tree_metric_csv(io::read_file(matrix), matrix);
    SlopeSchedule slopes;
    if (!slopes_spec.empty()) {
        std::vector<Rational> ks;
        std::stringstream ss(slopes_spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            ks.push_back(Rational::parse(item));
        }
        slopes = SlopeSchedule(std::move(ks));
    }
    if (auto bad = check_tree_metric(a)) {
        const auto& q = bad->indices;
        std::cerr << "error: " << matrix << ": not a tree metric, "
                  << (bad->kind == TreeMetricViolation::Kind::triangle ? "triangle inequality" : "four-point condition")
                  << " fails on vertices (" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ")\n";
        return kInputError;
    }
    const auto fs = brush(a, slopes);
    const Rational err = verify_embedding(a, fs);

    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        io::write_file(std::filesystem::path(out_dir) / ("vertex_" + std::to_string(i) + ".json"), io::serialize(fs[i]));
    }
    std::string schedule = "[";
    for (std::size_t k = 1; k < fs.size(); ++k) {
        schedule += (k > 1 ? "," : "") + std::string("\"") + slopes.slope(k).str() + "\"";
    }
    schedule += "]";
    io::write_file(std::filesystem::path(out_dir) / "report.json",
                   "{\"max_error\":\"" + err.str() + "\",\"n\":" + std::to_string(fs.size()) +
                       ",\"schedule\":" + schedule + "}\n");
    std::cout << "embedded " << fs.size() << " vertices, max_error " << err << "\n";
    return err.is_zero() ? kOk : kVerificationFailed;
}

int cmd_homogenize(const std::string& base, const std::string& f)
{
    std::cout << io::serialize(homogenize(load_pl(base), load_pl(f)));
    return kOk;
}

int cmd_hdist(const std::string& p1s, const std::string& p2s)
{
    const PolarPoint p1 = io::parse_polar_literal(p1s);
    const PolarPoint p2 = io::parse_polar_literal(p2s);
    std::cout << "distance " << io::format_real(polar_distance_logdomain(p1, p2)) << "\n";
    if (p1.rho + p2.rho <= kDirectPathLimit && !p1.log_phi && !p2.log_phi) {
        std::cout << "direct " << io::format_real(polar_distance(p1, p2)) << "\n";
        std::cout << "disk " << io::format_real(disk_distance(to_disk(p1), to_disk(p2))) << "\n";
    }
    return kOk;
}

int cmd_verify_asymptotic(const std::string& a, const std::string& b, const std::string& eps_spec,
                          const std::string& csv, std::size_t burn_in)
{
    const auto g1 = load_discrete(a);
    const auto g2 = load_discrete(b);
    const EpsilonSchedule schedule = parse_schedule(eps_spec);
    if (schedule.size() < burn_in + 2) {
        std::cerr << "error: epsilon schedule has " << schedule.size() << " entries; burn-in " << burn_in
                  << " needs at least " << burn_in + 2 << "\n";
        return kInputError;
    }
    const ConvergenceReport report = convergence_report(g1, g2, schedule);
    std::ofstream file;
    std::ostream& out = open_csv(csv, file);
    out << "eps,d_X,eps_d_X,d_D,error\n";
    for (const auto& r : report.rows) {
        out << io::format_real(r.eps) << "," << io::format_real(r.hyperbolic_distance) << ","
            << io::format_real(r.scaled_distance) << "," << io::format_real(r.target) << ","
            << io::format_real(r.error) << "\n";
    }
    const bool ok = report.nonincreasing_after(burn_in, kRoundoffFloor);
    if (!ok) {
        std::cerr << "witness errors increase after burn-in\n";
    }
    return ok ? kOk : kVerificationFailed;
}

void write_stage_rows(std::ostream& out, const StageRecord& rec)
{
    for (const auto& p : rec.pairs) {
        out << rec.stage << "," << io::format_real(rec.eps) << "," << p.first << "-" << p.second << ","
            << decimal(p.target) << "," << decimal(p.surrogate) << "," << io::format_real(p.scaled_distance) << ","
            << io::format_real(p.err_vs_surrogate) << "," << io::format_real(p.err_vs_target) << ","
            << io::format_real(rec.bound) << "\n";
    }
}

int cmd_verify_subcone(const std::vector<std::string>& files, unsigned stages, const std::string& eps_spec,
                       const std::string& csv)
{
    std::vector<PLFunction> fs;
    for (const auto& f : files) {
        fs.push_back(load_pl(f));
    }
    const EpsilonSchedule schedule = parse_schedule(eps_spec);
    const auto records = run_all_stages(fs, stages, schedule);
    std::ofstream file;
    std::ostream& out = open_csv(csv, file);
    out << "stage,eps,pair,d_S,d_D_discretized,eps_dX,err_vs_D,err_vs_S,bound\n";
    bool ok = true;
    for (const auto& rec : records) {
        write_stage_rows(out, rec);
        ok = ok && rec.within_bound();
    }
    if (!ok) {
        std::cerr << "stage envelope violated\n";
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_cauchy_demo(unsigned max_k, unsigned stages, const std::string& eps_spec, const std::string& csv)
{
    const CauchySpec zig = CauchySpec::zigzag();
    bool ok = true;
    std::cout << "k,m,distance,closed_form\n";
    for (unsigned k = 0; k <= max_k; ++k) {
        for (unsigned m = k + 1; m <= max_k; ++m) {
            const Rational d = cauchy_distances(zig, k, m);
            const Rational closed = Rational::pow2(-static_cast<int>(k)) - Rational::pow2(-static_cast<int>(m));
            ok = ok && d == closed;
            std::cout << k << "," << m << "," << d << "," << closed << "\n";
        }
    }
    const PLFunction down = PLFunction::linear(Rational(-1), Rational(1, 2));
    const std::vector<CauchySpec> chains = {zig, CauchySpec(down, Rational(1), Rational(1)),
                                            CauchySpec(down, Rational(1), Rational(2))};
    const auto records = run_completion(chains, stages, parse_schedule(eps_spec));
    std::ofstream file;
    std::ostream& out = open_csv(csv, file);
    out << "stage,eps,pair,d_limit,d_members,eps_dX,err_vs_members,err_vs_limit,bound\n";
    for (const auto& rec : records) {
        write_stage_rows(out, rec);
        ok = ok && rec.within_bound();
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_selftest(std::uint64_t seed, bool corrupt)
{
    const SelftestReport report = run_selftest({seed, corrupt});
    std::cout << report.text;
    return report.passed ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Segregation-metric real trees and their witnesses in the hyperbolic plane"};
    app.require_subcommand(1);

    std::string a;
    std::string b;
    bool discrete = false;
    auto* dist = app.add_subcommand("dist", "exact distance and segregation moment of two functions");
    dist->add_option("--a", a, "first function (JSON)")->required();
    dist->add_option("--b", b, "second function (JSON)")->required();
    dist->add_flag("--discrete", discrete, "inputs are discrete functions");

    std::string x;
    auto* geo = app.add_subcommand("geodesic", "point at arc length x on the geodesic from a to b");
    geo->add_option("--a", a, "start function (JSON)")->required();
    geo->add_option("--b", b, "end function (JSON)")->required();
    geo->add_option("--x", x, "arc length as a rational")->required();

    std::string matrix;
    std::string out_dir;
    std::string slopes;
    auto* embed = app.add_subcommand("embed", "brush a tree metric into piecewise-linear functions");
    embed->add_option("--matrix", matrix, "distance matrix CSV")->required();
    embed->add_option("--out", out_dir, "output directory")->required();
    embed->add_option("--slopes", slopes, "comma-separated strictly increasing slopes k_1,k_2,...");

    std::string base;
    std::string func;
    auto* homog = app.add_subcommand("homogenize", "image of f under the isometry sending base to zero");
    homog->add_option("--base", base, "base function (JSON)")->required();
    homog->add_option("--f", func, "function to map (JSON)")->required();

    std::string p1;
    std::string p2;
    auto* hdist = app.add_subcommand("hdist", "hyperbolic distance of two polar points");
    hdist->add_option("p1", p1, "\"rho,phi\" or \"rho,logphi:<sign>,<value>\"")->required();
    hdist->add_option("p2", p2, "second point")->required();

    std::string eps = "dyadic:4:20";
    std::string csv;
    std::size_t burn_in = 4;
    auto* vasym = app.add_subcommand("verify-asymptotic", "witness convergence for two discrete functions");
    vasym->add_option("--a", a, "first discrete function (JSON)")->required();
    vasym->add_option("--b", b, "second discrete function (JSON)")->required();
    vasym->add_option("--eps", eps, "schedule: dyadic:<first>:<last> or comma list")->capture_default_str();
    vasym->add_option("--csv", csv, "output CSV (default stdout)");
    vasym->add_option("--burn-in", burn_in, "rows ignored by the monotonicity check")->capture_default_str();

    std::vector<std::string> files;
    unsigned stages = 8;
    std::string subcone_eps = "dyadic:1:64";
    auto* vsub = app.add_subcommand("verify-subcone", "staged witness construction for a finite set of functions");
    vsub->add_option("--functions", files, "function JSON files")->required();
    vsub->add_option("--stages", stages, "number of stages")->capture_default_str();
    vsub->add_option("--eps", subcone_eps, "schedule")->capture_default_str();
    vsub->add_option("--csv", csv, "output CSV (default stdout)");

    unsigned max_k = 20;
    unsigned completion_stages = 6;
    auto* cauchy = app.add_subcommand("cauchy-demo", "Cauchy chain without limit, and witnesses for the limits");
    cauchy->add_option("--max-k", max_k, "largest chain index")->capture_default_str();
    cauchy->add_option("--stages", completion_stages, "completion stages")->capture_default_str();
    cauchy->add_option("--eps", subcone_eps, "schedule")->capture_default_str();
    cauchy->add_option("--csv", csv, "completion CSV (default stdout)");

    std::uint64_t seed = 0;
    bool corrupt = false;
    auto* self = app.add_subcommand("selftest", "run every property suite with a fixed seed");
    self->add_option("--seed", seed, "random seed")->capture_default_str();
    self->add_flag("--corrupt-slopes", corrupt)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*dist) {
            return cmd_dist(a, b, discrete);
        }
        if (*geo) {
            return cmd_geodesic(a, b, x);
        }
        if (*embed) {
            return cmd_embed(matrix, out_dir, slopes);
        }
        if (*homog) {
            return cmd_homogenize(base, func);
        }
        if (*hdist) {
            return cmd_hdist(p1, p2);
        }
        if (*vasym) {
            return cmd_verify_asymptotic(a, b, eps, csv, burn_in);
        }
        if (*vsub) {
            return cmd_verify_subcone(files, stages, subcone_eps, csv);
        }
        if (*cauchy) {
            return cmd_cauchy_demo(max_k, completion_stages, subcone_eps, csv);
        }
        if (*self) {
            return cmd_selftest(seed, corrupt);
        }
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
