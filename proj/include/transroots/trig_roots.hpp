#pragma once

#include <optional>
#include <vector>

#include "transroots/rational.hpp"
#include "transroots/series.hpp"

namespace transroots {

// Which transcendental equation a root belongs to: tan x = kappa*x or
// cot x = kappa*x.
enum class TrigKind { tan_eq, cot_eq };

struct TrigEquation {
    TrigKind kind;
    double kappa;
};

enum class RootMethod { pade, frankel, taylor, oracle };

// A positive root of the equation, indexed by branch: branch n lives near
// (n+1/2)*pi for tan and near n*pi for cot.
struct RootEstimate {
    int branch;
    double value;
    RootMethod method;
};

// One row of the error table: the bisection root, its ratio to pi (tan) or
// n*pi (cot), and the signed errors approximation - exact of each closed
// form, in natural units.
struct ErrorTableRow {
    int n;
    double exact;
    double ratio;
    double err_pade;
    std::optional<double> err_frankel;
    double err_taylor;
};

// Signed pole-free residual of the equation at x: sin x - kappa*x*cos x for
// tan, cos x - kappa*x*sin x for cot. Zero exactly at the roots, with no
// poles at odd multiples of pi/2.
double equation_residual(const TrigEquation& eq, double x);

// The asymptote the branch-n root approaches: (n+1/2)*pi for tan, n*pi for
// cot.
double branch_asymptote(TrigKind kind, int n);

// Even series phi(w) = x_n / a_n in w = 1/a_n, where a_n is the branch
// asymptote: the root of branch n is a_n * phi(1/a_n) up to the truncation
// order. Built by Lagrange inversion of the recentred equation; coefficients
// are exact rationals in kappa. Requires kappa != 0 and order >= 4.
TaylorSeries root_ratio_series(TrigKind kind, const Rational& kappa, int order);

// Branch root from the [1/1] Pade approximant (in 1/a_n^2) of the ratio
// series. Requires kappa > 0 and n >= 1, except (tan, n = 0) which returns
// the trivial root 0.
RootEstimate root_closed_form(const TrigEquation& eq, int n);

// First positive root of cot x = kappa*x from the two closed forms (an
// expansion around kappa = infinity and one around kappa = 0), picking
// whichever has the smaller pole-free residual. Requires kappa >= 0; at
// kappa = 0 the small-kappa form returns pi/2 exactly.
RootEstimate first_root_cot_closed(double kappa);

// Arccotangent-based closed forms, defined for kappa = 1 only; n >= 1.
RootEstimate root_frankel(const TrigEquation& eq, int n);

// Truncated asymptotic expansion of the root through the 1/a_n^3 term.
// Requires kappa > 0 and n >= 1 (tan also accepts n = 0, returning 0).
RootEstimate root_taylor(const TrigEquation& eq, int n);

// Reference root by bracketed bisection of the pole-free residual, run to
// adjacent doubles. Brackets: tan with kappa > 0 uses (n*pi, (n+1/2)*pi),
// tan with kappa < 0 uses ((n-1/2)*pi, n*pi); cot uses (n*pi, (n+1/2)*pi)
// and requires kappa >= 0. kappa = 0 and the trivial branches are returned
// in closed form.
RootEstimate root_oracle(const TrigEquation& eq, int n);

// Rows n = 1..n_max comparing every closed form against the bisection root.
// The frankel column is present only for kappa = 1.
std::vector<ErrorTableRow> error_table(const TrigEquation& eq, int n_max);

}  // namespace transroots
