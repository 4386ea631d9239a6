#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mero/coefficients.hpp"
#include "mero/families.hpp"
#include "mero/inequalities.hpp"
#include "mero/random.hpp"
#include "mero/schur.hpp"

namespace mero {

/// Derivative-free maximization of one inequality's left-hand side over
/// a parametrized generator family. Parameter vectors decode to a scaled
/// Blaschke product of the stated degree (degree 0 = constants); for the
/// starlike inequalities the decoded product becomes the inner map of the
/// pinned generator, so every probe point satisfies the normalization.
struct SearchProblem {
    std::string ineq;
    double p = 0.3;
    int n = 2;                     // used by theoremA / thm2
    std::optional<Complex> w0;     // required by the starlike inequalities
    std::string w0_auto;           // "lower" / "upper" / "counter": derive w0 from p
    int degree = 2;
    int starts = 16;
    long budget = 2000;            // objective evaluations per start
    std::uint64_t seed = 0;
    int order = 0;                 // expansion order; 0 = choose from n
};

/// The center a problem actually uses: the auto shorthand tracks p, so
/// sweeps keep the center admissible across the grid.
inline std::optional<Complex> problem_w0(const SearchProblem& prob) {
    if (prob.w0_auto == "lower") return w0_lower(prob.p);
    if (prob.w0_auto == "upper") return w0_upper(prob.p);
    if (prob.w0_auto == "counter") return w0_counter(prob.p);
    if (!prob.w0_auto.empty())
        throw std::invalid_argument("unknown w0 shorthand '" + prob.w0_auto + "'");
    return prob.w0;
}

struct SearchResult {
    double best_lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;  // rhs - best for upper bounds, best - rhs for lower
    std::vector<double> best_params;
    long evaluations = 0;
    bool converged = false;
    bool in_range = true;
};

namespace detail {

struct IneqSample {
    double lhs = 0.0;
    double rhs = 0.0;
    bool in_range = true;
    bool lower_bound = false;  // reversed orientation
};

inline bool inequality_is_starlike(const std::string& id) {
    return id == "thm6_i" || id == "thm6_i_weak" || id == "k_le_p" || id == "thm6_ii" ||
           id == "derived_am1" || id == "derived_a0" || id == "thm7_lower" ||
           id == "livingston_original";
}

inline IneqSample from_report(const InequalityReport& r, bool lower = false) {
    return IneqSample{r.lhs, r.rhs, r.in_range, lower};
}

inline IneqSample eval_inequality(const SearchProblem& prob, const SchurGenerator& decoded) {
    const int order = prob.order > 0 ? prob.order : std::max(prob.n + 2, 8);
    const std::string& id = prob.ineq;
    if (inequality_is_starlike(id)) {
        const std::optional<Complex> w0_opt = problem_w0(prob);
        if (!w0_opt) throw std::invalid_argument("inequality '" + id + "' needs w0");
        const Complex w0 = *w0_opt;
        const MemberFunction f = build_starlike(prob.p, w0, decoded, order, false);
        const Complex am1 = f.laurent.principal();
        const Complex a0 = f.laurent.coeff(0);
        if (id == "thm6_i") return from_report(check_thm6_i(am1, w0, prob.p).main);
        if (id == "thm6_i_weak") return from_report(check_thm6_i(am1, w0, prob.p).weakened);
        if (id == "k_le_p") return from_report(check_thm6_i(am1, w0, prob.p).k_bound);
        if (id == "thm6_ii") return from_report(check_thm6_ii(a0, w0, prob.p));
        if (id == "derived_am1") return from_report(check_derived_bounds(am1, a0, w0, prob.p).residue);
        if (id == "derived_a0") return from_report(check_derived_bounds(am1, a0, w0, prob.p).a0);
        if (id == "thm7_lower") return from_report(check_thm7_lower(am1, w0, prob.p), true);
        if (id == "livingston_original")
            return from_report(check_livingston_original(am1, w0, prob.p), true);
    } else {
        const MemberFunction f = build_concave(prob.p, decoded, order, false);
        if (id == "theoremA")
            return from_report(check_theoremA(taylor_coeffs(f, std::max(prob.n, 2)), prob.n, prob.p));
        const CoefficientVector a = laurent_coeffs(f, std::max(prob.n, 1));
        if (id == "wirths_am1") return from_report(check_wirths_am1(a.at(-1), prob.p));
        if (id == "bpw_a0") return from_report(check_bpw_a0(a.at(0), prob.p));
        if (id == "thm1") return from_report(check_thm1(a.at(-1), a.at(0), prob.p));
        if (id == "thm2") return from_report(check_thm2(a, prob.n, prob.p));
    }
    throw std::invalid_argument("unknown inequality id '" + id + "'");
}

inline SchurGenerator decode_params(std::span<const double> x, int degree) {
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) {
        Complex z(x[static_cast<std::size_t>(2 * i)], x[static_cast<std::size_t>(2 * i + 1)]);
        const double r = std::abs(z);
        if (r > 0.95) z *= 0.95 / r;
        zeros.push_back(z);
    }
    const double angle = x[static_cast<std::size_t>(2 * degree)];
    const double scale = std::clamp(x[static_cast<std::size_t>(2 * degree + 1)], 0.0, 1.0);
    return SchurGenerator::make_blaschke(std::move(zeros), angle, scale);
}

inline bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct NmOutcome {
    std::vector<double> x;
    double value = 0.0;
    long evals = 0;
};

/// Nelder-Mead ascent with coefficients 1 / 2 / 0.5 and shrink 0.5.
/// Ties in vertex ordering break lexicographically by parameter vector,
/// so the walk is deterministic.
template <typename F>
NmOutcome nelder_mead_max(F&& objective, std::vector<double> x0, double step, long budget) {
    const std::size_t dim = x0.size();
    struct Vertex {
        std::vector<double> x;
        double value;
    };
    long evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return objective(x);
    };
    std::vector<Vertex> simplex;
    simplex.push_back({x0, eval(x0)});
    for (std::size_t i = 0; i < dim && evals < budget; ++i) {
        std::vector<double> xi = x0;
        xi[i] += step;
        simplex.push_back({xi, eval(xi)});
    }
    auto better = [](const Vertex& a, const Vertex& b) {
        if (a.value != b.value) return a.value > b.value;
        return lex_less(a.x, b.x);
    };
    auto diameter = [&] {
        double d = 0.0;
        for (std::size_t i = 1; i < simplex.size(); ++i)
            for (std::size_t k = 0; k < dim; ++k)
                d = std::max(d, std::abs(simplex[i].x[k] - simplex[0].x[k]));
        return d;
    };
    while (evals < budget && simplex.size() == dim + 1) {
        std::sort(simplex.begin(), simplex.end(), better);
        if (diameter() < 1e-9) break;
        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i + 1 < simplex.size(); ++i)
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i].x[k];
        for (double& c : centroid) c /= static_cast<double>(dim);
        Vertex& worst = simplex.back();
        auto blend = [&](double coeff) {
            std::vector<double> x(dim);
            for (std::size_t k = 0; k < dim; ++k) x[k] = centroid[k] + coeff * (centroid[k] - worst.x[k]);
            return x;
        };
        Vertex reflected{blend(1.0), 0.0};
        reflected.value = eval(reflected.x);
        if (better(reflected, simplex.front())) {
            Vertex expanded{blend(2.0), 0.0};
            expanded.value = eval(expanded.x);
            worst = better(expanded, reflected) ? std::move(expanded) : std::move(reflected);
            continue;
        }
        if (better(reflected, simplex[simplex.size() - 2])) {
            worst = std::move(reflected);
            continue;
        }
        const bool outside = better(reflected, worst);
        Vertex contracted{blend(outside ? 0.5 : -0.5), 0.0};
        contracted.value = eval(contracted.x);
        if (better(contracted, outside ? reflected : worst)) {
            worst = std::move(contracted);
            continue;
        }
        // Shrink toward the best vertex.
        for (std::size_t i = 1; i < simplex.size() && evals < budget; ++i) {
            for (std::size_t k = 0; k < dim; ++k)
                simplex[i].x[k] = simplex[0].x[k] + 0.5 * (simplex[i].x[k] - simplex[0].x[k]);
            simplex[i].value = eval(simplex[i].x);
        }
    }
    std::sort(simplex.begin(), simplex.end(), better);
    return NmOutcome{simplex.front().x, simplex.front().value, evals};
}

inline std::vector<double> sample_start(Rng& rng, int degree) {
    std::vector<double> x;
    x.reserve(static_cast<std::size_t>(2 * degree + 2));
    for (int i = 0; i < degree; ++i) {
        const Complex z = rng.unit_disk(0.95);
        x.push_back(z.real());
        x.push_back(z.imag());
    }
    x.push_back(rng.uniform(0.0, 2.0 * std::numbers::pi));
    x.push_back(rng.uniform());
    return x;
}

}  // namespace detail

/// Multi-start simplex ascent on the inequality's violation
/// (lhs - rhs, or rhs - lhs for the reversed checkers). Deterministic for
/// a given (problem, seed): each start draws from its own seed stream and
/// the merge is an argmax with lexicographic tie-break, so adding starts
/// can only improve the result.
inline SearchResult sharpness_probe(const SearchProblem& prob) {
    detail::require_p(prob.p);
    auto objective = [&](const std::vector<double>& x) {
        const detail::IneqSample s = detail::eval_inequality(prob, detail::decode_params(x, prob.degree));
        return s.lower_bound ? s.rhs - s.lhs : s.lhs - s.rhs;
    };
    SearchResult result;
    bool have_best = false;
    double best_violation = 0.0;
    std::vector<double> best_x;
    for (int s = 0; s < prob.starts; ++s) {
        Rng rng(prob.seed, static_cast<std::uint64_t>(s));
        detail::NmOutcome out =
            detail::nelder_mead_max(objective, detail::sample_start(rng, prob.degree), 0.25, prob.budget);
        result.evaluations += out.evals;
        if (!have_best || out.value > best_violation ||
            (out.value == best_violation && detail::lex_less(out.x, best_x))) {
            have_best = true;
            best_violation = out.value;
            best_x = std::move(out.x);
        }
    }
    const detail::IneqSample at_best = detail::eval_inequality(prob, detail::decode_params(best_x, prob.degree));
    result.best_lhs = at_best.lhs;
    result.rhs = at_best.rhs;
    result.gap = -best_violation;
    result.best_params = std::move(best_x);
    result.in_range = at_best.in_range;
    result.converged = result.gap < 1e-3 * std::max(1.0, std::abs(result.rhs));
    return result;
}

/// Convex hull (monotone chain) of a planar point set; returns the hull
/// in counterclockwise order.
inline std::vector<Complex> convex_hull(std::vector<Complex> pts) {
    std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](Complex o, Complex a, Complex b) {
        return (a.real() - o.real()) * (b.imag() - o.imag()) -
               (a.imag() - o.imag()) * (b.real() - o.real());
    };
    std::vector<Complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Complex& pt : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
        hull[k++] = pt;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline double polygon_area(std::span<const Complex> hull) {
    if (hull.size() < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Complex a = hull[i];
        const Complex b = hull[(i + 1) % hull.size()];
        twice += a.real() * b.imag() - b.real() * a.imag();
    }
    return 0.5 * std::abs(twice);
}

struct RegionStats {
    double center = 0.0;
    double radius = 0.0;
    double max_distance = 0.0;  // farthest sample from the disk center
    double hull_area = 0.0;
    double disk_area = 0.0;
    double coverage = 0.0;  // hull area / disk area
    std::vector<Complex> points;
};

/// Sample the n-th Taylor coefficient over random generators and measure
/// how much of its disk of variability the samples fill. Containment is
/// a theorem; coverage is only a statistic.
inline RegionStats region_sample(double p, int n, int samples, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("region_sample: n must be >= 2");
    detail::require_p(p);
    Rng rng(seed);
    RegionStats stats;
    stats.center = theorem_a_center(p, n);
    stats.radius = theorem_a_radius(p, n);
    stats.disk_area = std::numbers::pi * stats.radius * stats.radius;
    stats.points.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const MemberFunction f = build_concave(p, sample_generator(rng), std::max(n + 2, 8), false);
        const Complex an = f.taylor.coeff(n);
        stats.points.push_back(an);
        stats.max_distance = std::max(stats.max_distance, std::abs(an - Complex(stats.center)));
    }
    stats.hull_area = polygon_area(convex_hull(stats.points));
    stats.coverage = stats.disk_area > 0.0 ? stats.hull_area / stats.disk_area : 0.0;
    return stats;
}

struct SweepRow {
    double p = 0.0;
    int n = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs in the bound's orientation
    bool in_range = true;
    long evals = 0;
    bool converged = false;
};

/// One probe per grid value of p. Out-of-range rows are informational:
/// they carry whatever margin the search finds, positive or negative.
inline std::vector<SweepRow> range_sweep(const SearchProblem& proto, std::span<const double> p_grid) {
    std::vector<SweepRow> rows;
    rows.reserve(p_grid.size());
    for (double p : p_grid) {
        SearchProblem prob = proto;
        prob.p = p;
        const SearchResult r = sharpness_probe(prob);
        rows.push_back(SweepRow{p, prob.n, r.best_lhs, r.rhs, r.gap, r.in_range, r.evaluations, r.converged});
    }
    return rows;
}

}  // namespace mero
