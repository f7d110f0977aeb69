#pragma once

#include <string>
#include <vector>

#include "kingsim/rational.hpp"

namespace kingsim {

/// One verified (in)equality of the final-theorem constant chain.
struct ConstantCheck {
    std::string name;
    std::string detail;
    bool passed = false;
};

/// Exact recomputation of the closing arithmetic: the W1/W2 coefficients,
/// the qualifying-row coefficient, and the final control margin, all as
/// rationals.
struct ConstantsReport {
    Rational delta, kappa;
    Rational w1_coeff;      // 1/2 - delta - kappa
    Rational w2_coeff;      // 1/2 + delta + kappa
    Rational dense_coeff;   // (1/2 - delta - 4k) / (1 - 4k)
    Rational row_coeff;     // w1_coeff + dense_coeff * w2_coeff
    Rational final_value;   // (1 - kappa) * row_coeff
    Rational target;        // 1/2 + delta
    Rational margin;        // final_value - target
    std::vector<ConstantCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Recomputes the constant chain for the given (delta, kappa) and checks:
/// delta + kappa <= 1/2, delta <= 1/8 - 3*kappa/2, and final margin > 0.
/// For the canonical pair (2/17, 1/4000) the known exact values of every
/// link are pinned as additional equality checks.
ConstantsReport verify_constants(const Rational& delta, const Rational& kappa);

/// First `digits` decimal digits of r in [0,1) after the point, as text.
std::string decimal_prefix(const Rational& r, int digits);

}  // namespace kingsim
