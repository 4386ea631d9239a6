// Command-line front end: construct members of Co(p) and Sigma^s(p, w0),
// dump their coefficient tables, run the inequality checkers, and drive
// the sharpness probes / range sweeps. Emits CSV (default) or JSON.
//
// Exit codes: 0 success, 1 an in-range inequality margin is negative,
// 2 configuration error, 3 membership flag failed under --require-member.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mero/coefficients.hpp"
#include "mero/families.hpp"
#include "mero/inequalities.hpp"
#include "mero/io.hpp"
#include "mero/search.hpp"

namespace {

using mero::Complex;

struct CommonOpts {
    double p = 0.0;
    int order = mero::kDefaultOrder;
    std::string format = "csv";
    std::string out_path;
    std::uint64_t seed = 0;
    mero::GridSpec grid;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_p = true) {
    auto* p = cmd->add_option("--p", o.p, "pole location in (0,1)");
    if (needs_p) p->required();
    cmd->add_option("--order", o.order, "series truncation order")->default_val(mero::kDefaultOrder);
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out_path, "output path (default stdout)");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--radii", o.grid.radii, "membership grid radii count");
    cmd->add_option("--angles", o.grid.angles, "membership grid angle count");
    cmd->add_option("--puncture", o.grid.puncture_factor, "pole puncture as a fraction of 1-p");
}

std::ostream& open_output(const CommonOpts& o, std::ofstream& file) {
    if (o.out_path.empty()) return std::cout;
    file.open(o.out_path);
    if (!file) throw CLI::ValidationError("--out", "cannot open '" + o.out_path + "'");
    return file;
}

Complex parse_w0(const std::string& text, double p) {
    if (text == "auto-lower") return mero::w0_lower(p);
    if (text == "auto-upper") return mero::w0_upper(p);
    if (text == "auto-counter") return mero::w0_counter(p);
    double re = 0.0, im = 0.0;
    char comma = 0;
    std::istringstream in(text);
    if (in >> re) {
        if (in >> comma >> im && comma != ',') throw CLI::ValidationError("--w0", "expected re,im");
        return Complex(re, im);
    }
    throw CLI::ValidationError("--w0", "expected re[,im] or auto-lower/auto-upper/auto-counter");
}

struct MemberOpts {
    std::string family;  // "co" or "sigma"
    std::optional<double> theta;
    std::string w0_text;
    std::string generator_json;
    bool require_member = false;
};

void add_member(CLI::App* cmd, MemberOpts& m) {
    cmd->add_option("--family", m.family, "co or sigma")->required()->check(CLI::IsMember({"co", "sigma"}));
    cmd->add_option("--theta", m.theta, "rotation angle: concave member with constant generator e^{i theta}");
    cmd->add_option("--w0", m.w0_text, "starlike center: re[,im] or auto-lower/auto-upper/auto-counter");
    cmd->add_option("--generator", m.generator_json, "generator description as inline JSON");
    cmd->add_flag("--require-member", m.require_member, "exit 3 when the membership flag fails");
}

mero::MemberFunction build_member(const MemberOpts& m, const CommonOpts& o) {
    if (m.family == "co") {
        if (m.theta) return mero::extremal_ftheta(o.p, *m.theta, o.order, true, o.grid);
        if (m.generator_json.empty())
            throw CLI::ValidationError("--generator", "family co needs --theta or --generator");
        return mero::build_concave(o.p, mero::generator_from_json(nlohmann::json::parse(m.generator_json)),
                                   o.order, true, o.grid);
    }
    if (m.w0_text.empty()) throw CLI::ValidationError("--w0", "family sigma needs --w0");
    const Complex w0 = parse_w0(m.w0_text, o.p);
    mero::SchurGenerator inner = m.generator_json.empty()
                                     ? mero::SchurGenerator::make_constant(0.0)
                                     : mero::generator_from_json(nlohmann::json::parse(m.generator_json));
    return mero::build_starlike(o.p, w0, std::move(inner), o.order, true, o.grid);
}

mero::InequalityReport membership_row(const mero::MemberFunction& f) {
    const auto& rep = *f.membership;
    const std::string id = f.family == mero::Family::concave ? "membership_phi" : "membership_psi";
    auto row = mero::InequalityReport::lower(id, rep.min_re, 0.0, f.p);
    row.sharp = false;
    return row;
}

int run_coeffs(const MemberOpts& m, const CommonOpts& o) {
    const mero::MemberFunction f = build_member(m, o);
    if (m.require_member && !f.membership->member) {
        std::cerr << "membership flag failed: min Re field = " << f.membership->min_re << '\n';
        return 3;
    }
    const auto laurent = mero::laurent_coeffs(f, o.order);
    const auto taylor = mero::taylor_coeffs(f, o.order);
    const Complex omega0 = f.generator.eval(Complex(0.0));
    std::ofstream file;
    std::ostream& out = open_output(o, file);
    if (o.format == "json") {
        nlohmann::json j{{"family", m.family},
                         {"p", o.p},
                         {"omega0", mero::complex_to_json(omega0)},
                         {"member", f.membership->member},
                         {"laurent_a", mero::to_json(laurent)},
                         {"taylor_A", mero::to_json(taylor)}};
        if (f.family == mero::Family::starlike) j["w0"] = mero::complex_to_json(f.w0);
        out << j.dump(2) << '\n';
    } else {
        out << "# family=" << m.family << " p=" << mero::fmt17(o.p);
        if (f.family == mero::Family::starlike)
            out << " w0=" << mero::fmt17(f.w0.real()) << (f.w0.imag() < 0 ? "" : "+")
                << mero::fmt17(f.w0.imag()) << "i";
        out << " omega0=" << mero::fmt17(omega0.real()) << (omega0.imag() < 0 ? "" : "+")
            << mero::fmt17(omega0.imag()) << "i"
            << " member=" << (f.membership->member ? "true" : "false") << '\n';
        out << "kind,n,re,im,modulus\n";
        for (int n = laurent.min_index(); n <= laurent.max_index(); ++n) {
            const Complex c = laurent.at(n);
            out << "laurent_a," << n << ',' << mero::fmt17(c.real()) << ',' << mero::fmt17(c.imag())
                << ',' << mero::fmt17(std::abs(c)) << '\n';
        }
        for (int n = taylor.min_index(); n <= taylor.max_index(); ++n) {
            const Complex c = taylor.at(n);
            out << "taylor_A," << n << ',' << mero::fmt17(c.real()) << ',' << mero::fmt17(c.imag())
                << ',' << mero::fmt17(std::abs(c)) << '\n';
        }
    }
    return 0;
}

std::vector<mero::InequalityReport> applicable_reports(const mero::MemberFunction& f, int order,
                                                       bool include_deprecated) {
    std::vector<mero::InequalityReport> rows;
    if (f.family == mero::Family::concave) {
        const auto A = mero::taylor_coeffs(f, order);
        const auto a = mero::laurent_coeffs(f, order);
        for (int n = 2; n <= std::min(10, A.max_index()); ++n)
            rows.push_back(mero::check_theoremA(A, n, f.p));
        rows.push_back(mero::check_wirths_am1(a.at(-1), f.p));
        rows.push_back(mero::check_bpw_a0(a.at(0), f.p));
        rows.push_back(mero::check_thm1(a.at(-1), a.at(0), f.p));
        for (int n = 3; n <= std::min(8, a.max_index() + 1); ++n)
            rows.push_back(mero::check_thm2(a, n, f.p));
    } else {
        const auto a = mero::laurent_coeffs(f, order);
        const auto disk = mero::check_w0_disk(f.w0, f.p);
        rows.push_back(disk.disk);
        rows.push_back(disk.modulus_lower);
        rows.push_back(disk.modulus_upper);
        const auto i = mero::check_thm6_i(a.at(-1), f.w0, f.p);
        rows.push_back(i.main);
        rows.push_back(i.weakened);
        rows.push_back(i.k_bound);
        rows.push_back(mero::check_thm6_ii(a.at(0), f.w0, f.p));
        const auto derived = mero::check_derived_bounds(a.at(-1), a.at(0), f.w0, f.p);
        rows.push_back(derived.residue);
        rows.push_back(derived.a0);
        rows.push_back(mero::check_thm7_lower(a.at(-1), f.w0, f.p));
        if (include_deprecated)
            rows.push_back(mero::check_livingston_original(a.at(-1), f.w0, f.p));
    }
    rows.push_back(membership_row(f));
    return rows;
}

int run_verify(const MemberOpts& m, const CommonOpts& o, bool include_deprecated) {
    const mero::MemberFunction f = build_member(m, o);
    if (m.require_member && !f.membership->member) {
        std::cerr << "membership flag failed: min Re field = " << f.membership->min_re << '\n';
        return 3;
    }
    const auto rows = applicable_reports(f, o.order, include_deprecated);
    std::ofstream file;
    std::ostream& out = open_output(o, file);
    if (o.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back(mero::to_json(r));
        out << j.dump(2) << '\n';
    } else {
        mero::write_reports_csv(out, rows);
    }
    for (const auto& r : rows)
        if (r.in_range && r.margin < -1e-8) return 1;
    return 0;
}

std::vector<double> parse_p_grid(const std::string& text) {
    double lo = 0.0, hi = 0.0, step = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0)
        throw CLI::ValidationError("--p-grid", "expected lo:hi:step");
    std::vector<double> grid;
    for (double p = lo; p <= hi + 1e-12; p += step) grid.push_back(p);
    return grid;
}

struct ProbeOpts {
    std::string ineq;
    int n = 2;
    std::string family = "blaschke";  // or "const"
    int degree = 2;
    int starts = 16;
    long budget = 2000;
    std::string w0_text;
    std::string p_grid_text;
};

void add_probe(CLI::App* cmd, ProbeOpts& s, bool sweep) {
    cmd->add_option("--ineq", s.ineq, "inequality id")->required();
    cmd->add_option("--n", s.n, "coefficient index for theoremA/thm2");
    cmd->add_option("--family", s.family, "generator family: const or blaschke")
        ->check(CLI::IsMember({"const", "blaschke"}));
    cmd->add_option("--degree", s.degree, "Blaschke degree bound");
    cmd->add_option("--starts", s.starts, "independent simplex starts");
    cmd->add_option("--budget", s.budget, "objective evaluations per start");
    cmd->add_option("--w0", s.w0_text, "starlike center for the Sigma^s inequalities");
    if (sweep) cmd->add_option("--p-grid", s.p_grid_text, "lo:hi:step")->required();
}

mero::SearchProblem make_problem(const ProbeOpts& s, const CommonOpts& o) {
    mero::SearchProblem prob;
    prob.ineq = s.ineq;
    prob.p = o.p;
    prob.n = s.n;
    prob.degree = s.family == "const" ? 0 : s.degree;
    prob.starts = s.starts;
    prob.budget = s.budget;
    prob.seed = o.seed;
    if (!s.w0_text.empty()) {
        if (s.w0_text == "auto-lower") prob.w0_auto = "lower";
        else if (s.w0_text == "auto-upper") prob.w0_auto = "upper";
        else if (s.w0_text == "auto-counter") prob.w0_auto = "counter";
        else prob.w0 = parse_w0(s.w0_text, o.p);
    }
    return prob;
}

int run_probe(const ProbeOpts& s, const CommonOpts& o) {
    const mero::SearchProblem prob = make_problem(s, o);
    const mero::SearchResult r = mero::sharpness_probe(prob);
    std::ofstream file;
    std::ostream& out = open_output(o, file);
    if (o.format == "json") {
        nlohmann::json j{{"ineq", prob.ineq},   {"p", prob.p},
                         {"n", prob.n},         {"best_lhs", r.best_lhs},
                         {"rhs", r.rhs},        {"gap", r.gap},
                         {"evals", r.evaluations}, {"converged", r.converged},
                         {"validity", r.in_range ? "in-range" : "out-of-range"},
                         {"best_params", r.best_params}};
        out << j.dump(2) << '\n';
    } else {
        out << "ineq,p,n,best_lhs,rhs,gap,evals,converged,validity\n";
        out << prob.ineq << ',' << mero::fmt17(prob.p) << ',' << prob.n << ','
            << mero::fmt17(r.best_lhs) << ',' << mero::fmt17(r.rhs) << ',' << mero::fmt17(r.gap)
            << ',' << r.evaluations << ',' << (r.converged ? "true" : "false") << ','
            << (r.in_range ? "in-range" : "out-of-range") << '\n';
    }
    return 0;
}

int run_sweep(const ProbeOpts& s, const CommonOpts& o) {
    mero::SearchProblem proto = make_problem(s, o);
    if (mero::detail::inequality_is_starlike(proto.ineq) && !proto.w0 && proto.w0_auto.empty())
        proto.w0_auto = "lower";
    const std::vector<double> grid = parse_p_grid(s.p_grid_text);
    const auto rows = mero::range_sweep(proto, grid);
    std::ofstream file;
    std::ostream& out = open_output(o, file);
    if (o.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back(mero::to_json(r));
        out << j.dump(2) << '\n';
    } else {
        mero::write_sweep_csv(out, rows);
    }
    return 0;
}

int run_region(int n, int samples, const CommonOpts& o) {
    const mero::RegionStats stats = mero::region_sample(o.p, n, samples, o.seed);
    std::ofstream file;
    std::ostream& out = open_output(o, file);
    if (o.format == "json") {
        nlohmann::json pts = nlohmann::json::array();
        for (const Complex& z : stats.points) pts.push_back(mero::complex_to_json(z));
        nlohmann::json j{{"p", o.p},
                         {"n", n},
                         {"center", stats.center},
                         {"radius", stats.radius},
                         {"max_distance", stats.max_distance},
                         {"hull_area", stats.hull_area},
                         {"disk_area", stats.disk_area},
                         {"coverage", stats.coverage},
                         {"points", pts}};
        out << j.dump(2) << '\n';
    } else {
        out << "# p=" << mero::fmt17(o.p) << " n=" << n << " center=" << mero::fmt17(stats.center)
            << " radius=" << mero::fmt17(stats.radius)
            << " max_distance=" << mero::fmt17(stats.max_distance)
            << " coverage=" << mero::fmt17(stats.coverage) << '\n';
        out << "re,im\n";
        for (const Complex& z : stats.points)
            out << mero::fmt17(z.real()) << ',' << mero::fmt17(z.imag()) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for concave and meromorphically starlike univalent functions"};
    app.require_subcommand(1);

    CommonOpts coeffs_common, verify_common, probe_common, sweep_common, region_common;
    MemberOpts coeffs_member, verify_member;
    ProbeOpts probe_opts, sweep_opts;
    bool include_deprecated = false;
    int region_n = 2, region_samples = 2000;

    auto* coeffs = app.add_subcommand("coeffs", "dump Laurent and Taylor coefficient tables");
    add_common(coeffs, coeffs_common);
    add_member(coeffs, coeffs_member);

    auto* verify = app.add_subcommand("verify", "run every applicable inequality checker");
    add_common(verify, verify_common);
    add_member(verify, verify_member);
    verify->add_flag("--include-deprecated", include_deprecated,
                     "also run the superseded residue lower bound");

    auto* probe = app.add_subcommand("probe", "derivative-free sharpness probe of one inequality");
    add_common(probe, probe_common);
    add_probe(probe, probe_opts, false);

    auto* sweep = app.add_subcommand("sweep", "probe one inequality across a grid of p");
    add_common(sweep, sweep_common, false);
    add_probe(sweep, sweep_opts, true);

    auto* region = app.add_subcommand("region", "sample the Taylor coefficient disk");
    add_common(region, region_common);
    region->add_option("--n", region_n, "coefficient index")->required();
    region->add_option("--samples", region_samples, "number of sampled generators");

    try {
        app.parse(argc, argv);
        if (coeffs->parsed()) return run_coeffs(coeffs_member, coeffs_common);
        if (verify->parsed()) return run_verify(verify_member, verify_common, include_deprecated);
        if (probe->parsed()) return run_probe(probe_opts, probe_common);
        if (sweep->parsed()) return run_sweep(sweep_opts, sweep_common);
        if (region->parsed()) return run_region(region_n, region_samples, region_common);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
