#pragma once

#include <string>
#include <vector>

#include "transroots/pade.hpp"
#include "transroots/series.hpp"

namespace transroots {

// Real branches of the Lambert W function: the principal branch W_0 on
// [-1/e, inf) and the secondary branch W_{-1} on [-1/e, 0).
enum class WBranch { principal, minus_one };

// Selects how W is evaluated: the truncated Taylor series at the origin
// with a given number of terms, one of four fixed rational approximants,
// or the Halley-iteration reference.
struct WVariant {
    enum class Kind { taylor, pade_i, pade_i_rounded, pade_ii, pade_ii_rounded, oracle };

    Kind kind = Kind::oracle;
    int taylor_terms = 0;

    static WVariant taylor(int terms) { return WVariant{Kind::taylor, terms}; }
    static WVariant pade_i() { return WVariant{Kind::pade_i, 0}; }
    static WVariant pade_i_rounded() { return WVariant{Kind::pade_i_rounded, 0}; }
    static WVariant pade_ii() { return WVariant{Kind::pade_ii, 0}; }
    static WVariant pade_ii_rounded() { return WVariant{Kind::pade_ii_rounded, 0}; }
    static WVariant oracle() { return WVariant{Kind::oracle, 0}; }

    // Accepts "taylor:N", "pade-i", "pade-i-rounded", "pade-ii",
    // "pade-ii-rounded", "oracle".
    static WVariant parse(const std::string& s);

    std::string str() const;
};

// Taylor series of W_0 at the origin through x^n_max: coefficients
// (-n)^{n-1}/n!, generated by Lagrange inversion of x = w*e^w.
TaylorSeries w_taylor_series(int n_max);

// [2/2] approximant of W(x)/x (type I) and of W(x)/ln(1+x) (type II),
// fitted exactly to the Taylor data, plus their integer-rounded forms.
const PadeApproximant& w_pade_i();
const PadeApproximant& w_pade_i_rounded();
const PadeApproximant& w_pade_ii();
const PadeApproximant& w_pade_ii_rounded();

// Halley iteration for W(x) on the real branches, seeded from the branch
// point or logarithmic expansions; converges to residual
// |w*e^w - x| <= 1e-15*max(1,|x|). Throws std::domain_error outside the
// branch domain and std::runtime_error if 100 iterations do not converge.
double w_oracle(double x, WBranch branch = WBranch::principal);

// Evaluates W by the chosen variant. Approximant and Taylor variants cover
// the principal branch only; type-II variants additionally require x > -1.
double w_eval(double x, const WVariant& variant, WBranch branch = WBranch::principal);

// Parameters of e^{-c x} = a (x - b).
struct ExpLinearProblem {
    double a;
    double b;
    double c;
};

// Solves e^{-c x} = a (x - b) for x as b + W((c/a) e^{-c b}) / c on the
// requested branch; c = 0 degenerates to the linear equation x = b + 1/a.
// Requires a != 0; throws std::domain_error when the W argument is below
// -1/e (no real solution on that branch).
double solve_exp_linear(const ExpLinearProblem& prob, WBranch branch = WBranch::principal);

// One point of an accuracy sweep: delta = log10 of the relative error of
// the variant against the Halley reference. Points outside the variant's
// or the reference's domain are flagged rather than evaluated, as is x = 0
// where the relative error is undefined.
struct ErrorCurvePoint {
    enum class Status { ok, skipped_domain, skipped_zero };

    double x = 0.0;
    double delta = 0.0;
    Status status = Status::ok;
};

std::vector<ErrorCurvePoint> error_curve(const std::vector<double>& xs, const WVariant& variant);

}  // namespace transroots
