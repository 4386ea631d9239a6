#pragma once

#include <cmath>
#include <optional>
#include <string>

namespace mero {

/// Sharpness declares equality within max(1e-9, 1e-9*rhs): relative where
/// the bound is O(1), absolute where the extremal case is 0 = 0.
inline bool sharp_margin(double margin, double rhs) {
    return std::abs(margin) <= std::max(1e-9, 1e-9 * std::abs(rhs));
}

/// One evaluated inequality. margin = rhs - lhs for upper bounds and
/// lhs - rhs for the reversed (lower-bound) checkers, so that a negative
/// margin always means violation. Out-of-range p never suppresses the
/// report; it only flags it, so range sweeps can look past the stated
/// validity interval.
struct InequalityReport {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double p = 0.0;
    std::optional<int> n;
    bool in_range = true;
    std::string range_reason;  // empty when in_range
    bool sharp = false;

    std::string validity() const {
        return in_range ? "in-range" : "out-of-range(" + range_reason + ")";
    }

    static InequalityReport upper(std::string id, double lhs, double rhs, double p) {
        InequalityReport r;
        r.id = std::move(id);
        r.lhs = lhs;
        r.rhs = rhs;
        r.margin = rhs - lhs;
        r.p = p;
        r.sharp = sharp_margin(r.margin, rhs);
        return r;
    }

    static InequalityReport lower(std::string id, double lhs, double rhs, double p) {
        InequalityReport r = upper(std::move(id), lhs, rhs, p);
        r.margin = lhs - rhs;
        r.sharp = sharp_margin(r.margin, rhs);
        return r;
    }

    InequalityReport& with_n(int value) {
        n = value;
        return *this;
    }

    InequalityReport& flag_range(bool ok, std::string reason) {
        in_range = ok;
        if (!ok) range_reason = std::move(reason);
        return *this;
    }
};

}  // namespace mero
