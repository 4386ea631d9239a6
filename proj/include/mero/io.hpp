#pragma once

#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mero/coefficients.hpp"
#include "mero/report.hpp"
#include "mero/schur.hpp"
#include "mero/search.hpp"

namespace mero {

/// 17 significant digits: enough to reproduce a double bit-exactly, so
/// identical runs emit identical CSV bytes.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline nlohmann::json to_json(const InequalityReport& r) {
    nlohmann::json j{
        {"id", r.id},       {"lhs", r.lhs}, {"rhs", r.rhs},
        {"margin", r.margin}, {"p", r.p},   {"validity", r.validity()},
        {"sharp", r.sharp},
    };
    if (r.n)
        j["n"] = *r.n;
    else
        j["n"] = nullptr;
    return j;
}

inline void write_reports_csv(std::ostream& out, std::span<const InequalityReport> reports) {
    out << "id,lhs,rhs,margin,p,n,validity,sharp\n";
    for (const InequalityReport& r : reports) {
        out << r.id << ',' << fmt17(r.lhs) << ',' << fmt17(r.rhs) << ',' << fmt17(r.margin) << ','
            << fmt17(r.p) << ',' << (r.n ? std::to_string(*r.n) : std::string()) << ','
            << r.validity() << ',' << (r.sharp ? "true" : "false") << '\n';
    }
}

inline void write_coeffs_csv(std::ostream& out, const CoefficientVector& v) {
    out << "kind,n,re,im,modulus\n";
    for (int n = v.min_index(); n <= v.max_index(); ++n) {
        const Complex c = v.at(n);
        out << to_string(v.kind()) << ',' << n << ',' << fmt17(c.real()) << ',' << fmt17(c.imag())
            << ',' << fmt17(std::abs(c)) << '\n';
    }
}

inline nlohmann::json to_json(const CoefficientVector& v) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = v.min_index(); n <= v.max_index(); ++n) {
        const Complex c = v.at(n);
        rows.push_back({{"kind", to_string(v.kind())},
                        {"n", n},
                        {"re", c.real()},
                        {"im", c.imag()},
                        {"modulus", std::abs(c)}});
    }
    return rows;
}

inline void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    out << "p,n,lhs,rhs,margin,validity,evals,converged\n";
    for (const SweepRow& r : rows) {
        out << fmt17(r.p) << ',' << r.n << ',' << fmt17(r.lhs) << ',' << fmt17(r.rhs) << ','
            << fmt17(r.margin) << ',' << (r.in_range ? "in-range" : "out-of-range") << ','
            << r.evals << ',' << (r.converged ? "true" : "false") << '\n';
    }
}

inline nlohmann::json to_json(const SweepRow& r) {
    return nlohmann::json{{"p", r.p},
                          {"n", r.n},
                          {"lhs", r.lhs},
                          {"rhs", r.rhs},
                          {"margin", r.margin},
                          {"validity", r.in_range ? "in-range" : "out-of-range"},
                          {"evals", r.evals},
                          {"converged", r.converged}};
}

inline nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const nlohmann::json& j) {
    return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

inline nlohmann::json generator_to_json(const SchurGenerator& g) {
    switch (g.kind()) {
        case SchurGenerator::Kind::constant:
            return {{"variant", "constant"}, {"value", complex_to_json(g.constant_value())}};
        case SchurGenerator::Kind::blaschke: {
            nlohmann::json zeros = nlohmann::json::array();
            for (const Complex& z : g.zeros()) zeros.push_back(complex_to_json(z));
            return {{"variant", "blaschke"}, {"zeros", zeros}, {"angle", g.angle()}, {"scale", g.scale()}};
        }
        case SchurGenerator::Kind::pinned:
            return {{"variant", "pinned"},
                    {"a", complex_to_json(g.pinned_value())},
                    {"inner", generator_to_json(g.inner())}};
    }
    throw std::logic_error("unreachable generator kind");
}

/// Lenient parse: out-of-range parameters are admitted so deliberately
/// corrupted generators can be run through the membership checkers.
inline SchurGenerator generator_from_json(const nlohmann::json& j) {
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "constant") return SchurGenerator::unchecked_constant(complex_from_json(j.at("value")));
    if (variant == "blaschke") {
        std::vector<Complex> zeros;
        for (const auto& z : j.at("zeros")) zeros.push_back(complex_from_json(z));
        return SchurGenerator::unchecked_blaschke(std::move(zeros), j.at("angle").get<double>(),
                                                  j.at("scale").get<double>());
    }
    if (variant == "pinned")
        return SchurGenerator::make_pinned(complex_from_json(j.at("a")),
                                           generator_from_json(j.at("inner")));
    throw std::invalid_argument("unknown generator variant '" + variant + "'");
}

}  // namespace mero
