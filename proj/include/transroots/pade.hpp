#pragma once

#include <vector>

#include "transroots/rational.hpp"
#include "transroots/series.hpp"

namespace transroots {

// Rational function num(x)/den(x) with exact coefficients, num of degree p
// and den of degree q (inclusive of zero leading coefficients). den[0] is
// always nonzero.
struct PadeApproximant {
    std::vector<Rational> num;
    std::vector<Rational> den;
    // Order through which the fit matched the source series (p+q for
    // pade_fit output; preserved by rescaling).
    int match_order = 0;

    int p() const { return static_cast<int>(num.size()) - 1; }
    int q() const { return static_cast<int>(den.size()) - 1; }
};

// Result of rounding a Pade approximant to integer coefficients: the common
// scale D applied to numerator and denominator before rounding, and the
// largest coefficient perturbation |round(D*c) - D*c| / D that rounding
// introduced.
struct PadeRoundResult {
    PadeApproximant approximant;
    int scale;
    Rational deviation;
};

// [p/q] Pade approximant of the series f: the unique rational function with
// den[0] = 1 whose Taylor expansion matches f through order p+q. The
// denominator system is solved exactly by fraction-free (Bareiss) elimination
// with partial pivoting. Requires f.order() >= p+q; throws std::runtime_error
// if the system is singular (the Taylor data is degenerate for this [p/q]).
PadeApproximant pade_fit(const TaylorSeries& f, int p, int q);

// Evaluates num(x)/den(x) in double precision (Horner). Throws
// std::domain_error when |den(x)| < 1e-300 (evaluation at a pole).
double pade_eval(const PadeApproximant& r, double x);

// Taylor expansion of num/den through the given order, computed exactly.
TaylorSeries pade_taylor(const PadeApproximant& r, int order);

// Same rational function with numerator and denominator scaled by the LCM
// of all coefficient denominators, so every coefficient is an integer.
PadeApproximant clear_denominators(const PadeApproximant& r);

// Integer-coefficient approximation of r: scales numerator and denominator
// by the smallest D in 1..max_scale for which rounding D*c to the nearest
// integer (ties away from zero) moves no coefficient by more than D/10,
// then rounds. If no D qualifies, the D with the smallest such perturbation
// is used. D = 1 always yields a candidate.
PadeRoundResult pade_round(const PadeApproximant& r, int max_scale = 16);

}  // namespace transroots
