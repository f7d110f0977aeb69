#include "kingsim/constants.hpp"

namespace kingsim {

namespace {

ConstantCheck check(const std::string& name, bool passed, const std::string& detail) {
    return ConstantCheck{name, detail, passed};
}

}  // namespace

std::string decimal_prefix(const Rational& r, int digits) {
    if (r < Rational(0) || r >= Rational(1))
        throw std::invalid_argument("decimal_prefix: value must lie in [0,1)");
    std::string out = "0.";
    std::int64_t num = r.num();
    std::int64_t den = r.den();
    for (int i = 0; i < digits; ++i) {
        num *= 10;
        out.push_back(static_cast<char>('0' + num / den));
        num %= den;
    }
    return out;
}

ConstantsReport verify_constants(const Rational& delta, const Rational& kappa) {
    ConstantsReport r;
    r.delta = delta;
    r.kappa = kappa;
    const Rational half(1, 2);

    r.w1_coeff = half - delta - kappa;
    r.w2_coeff = half + delta + kappa;
    r.target = half + delta;
    const Rational one_minus_4k = Rational(1) - Rational(4) * kappa;
    const bool chain_defined = one_minus_4k > Rational(0);
    if (chain_defined) {
        r.dense_coeff = (half - delta - Rational(4) * kappa) / one_minus_4k;
        r.row_coeff = r.w1_coeff + r.dense_coeff * r.w2_coeff;
        r.final_value = (Rational(1) - kappa) * r.row_coeff;
        r.margin = r.final_value - r.target;
    }

    r.checks.push_back(check("delta-plus-kappa",
                             delta + kappa <= half,
                             "delta + kappa = " + (delta + kappa).str() + " <= 1/2"));
    const Rational claim1 = Rational(1, 8) - Rational(3, 2) * kappa;
    r.checks.push_back(check("claim1-condition",
                             delta <= claim1,
                             "delta = " + delta.str() + " <= 1/8 - 3*kappa/2 = " + claim1.str()));
    r.checks.push_back(check("positive-margin",
                             chain_defined && r.margin > Rational(0),
                             chain_defined ? "final value " + r.final_value.str() +
                                                 " vs target " + r.target.str()
                                           : "chain undefined: 1 - 4*kappa <= 0"));

    if (delta == Rational(2, 17) && kappa == Rational(1, 4000)) {
        r.checks.push_back(check("w1-coefficient",
                                 r.w1_coeff == Rational(25983, 68000),
                                 r.w1_coeff.str() + " == 25983/68000"));
        r.checks.push_back(check("w2-coefficient",
                                 r.w2_coeff == Rational(42017, 68000),
                                 r.w2_coeff.str() + " == 42017/68000"));
        r.checks.push_back(check("dense-row-coefficient",
                                 r.dense_coeff == Rational(6483, 17000) * Rational(1000, 999),
                                 r.dense_coeff.str() + " == (6483/17000)*(1000/999)"));
        r.checks.push_back(check("row-coefficient",
                                 r.row_coeff >= Rational(475777, 769896),
                                 r.row_coeff.str() + " >= 475777/769896"));
        r.checks.push_back(check("final-digits",
                                 decimal_prefix(r.final_value, 5) == "0.61782" &&
                                     decimal_prefix(r.target, 5) == "0.61764",
                                 decimal_prefix(r.final_value, 5) + " > " +
                                     decimal_prefix(r.target, 5)));
    }
    return r;
}

}  // namespace kingsim
