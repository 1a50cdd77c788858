#include "transroots/trig_roots.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "transroots/pade.hpp"

namespace transroots {

namespace {

constexpr double kPi = std::numbers::pi;

double arccot(double x) {
    return std::atan(1.0 / x);
}

// Bisects the pole-free residual down to adjacent doubles and returns the
// endpoint with the smaller |residual|. Requires a sign change on [lo, hi].
double bisect_residual(const TrigEquation& eq, double lo, double hi) {
    double flo = equation_residual(eq, lo);
    double fhi = equation_residual(eq, hi);
    if (flo == 0.0) {
        return lo;
    }
    if (fhi == 0.0) {
        return hi;
    }
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::runtime_error("root_oracle: bracket does not straddle a sign change");
    }
    while (true) {
        double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) {
            break;
        }
        double fmid = equation_residual(eq, mid);
        if (fmid == 0.0) {
            return mid;
        }
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    return std::abs(flo) <= std::abs(fhi) ? lo : hi;
}

}  // namespace

double equation_residual(const TrigEquation& eq, double x) {
    if (eq.kind == TrigKind::tan_eq) {
        return std::sin(x) - eq.kappa * x * std::cos(x);
    }
    return std::cos(x) - eq.kappa * x * std::sin(x);
}

double branch_asymptote(TrigKind kind, int n) {
    if (kind == TrigKind::tan_eq) {
        return (n + 0.5) * kPi;
    }
    return n * kPi;
}

TaylorSeries root_ratio_series(TrigKind kind, const Rational& kappa, int order) {
    if (kappa == Rational(0)) {
        throw std::domain_error("root_ratio_series: kappa must be nonzero");
    }
    if (order < 4) {
        throw std::invalid_argument("root_ratio_series: order must be at least 4");
    }
    TaylorSeries cos_z = TaylorSeries::cosine(order);
    TaylorSeries sinc_z = TaylorSeries::sinc(order);
    // kappa * z * sin z = kappa * z^2 * sinc z.
    TaylorSeries kz_sin = series_scale(kappa, sinc_z).shifted(2).truncated(order);
    // Recentring x = a_n - z turns the equation into w = z / f(z) with
    // w = 1/a_n; f keeps a nonzero value at z = 0, so Lagrange inversion
    // applies.
    TaylorSeries num = kind == TrigKind::tan_eq ? series_add(cos_z, kz_sin)
                                                : series_sub(kz_sin, cos_z);
    TaylorSeries den = series_scale(kappa, sinc_z);
    TaylorSeries f = series_div(num, den);
    TaylorSeries z_of_w = lagrange_invert(f, order - 1);
    // x_n / a_n = 1 - w * z(w).
    std::vector<Rational> phi(static_cast<size_t>(order) + 1);
    phi[0] = Rational(1);
    for (int k = 1; k <= order; ++k) {
        phi[static_cast<size_t>(k)] = -z_of_w.coeff(k - 1);
    }
    return TaylorSeries(std::move(phi), order);
}

RootEstimate root_closed_form(const TrigEquation& eq, int n) {
    if (n < 0) {
        throw std::invalid_argument("root_closed_form: branch index must be nonnegative");
    }
    if (eq.kind == TrigKind::tan_eq && n == 0) {
        return RootEstimate{0, 0.0, RootMethod::pade};
    }
    if (n == 0) {
        throw std::invalid_argument(
            "root_closed_form: branch 0 of cot has a dedicated closed form "
            "(first_root_cot_closed)");
    }
    if (!(eq.kappa > 0.0)) {
        throw std::domain_error("root_closed_form: kappa must be positive");
    }
    TaylorSeries phi = root_ratio_series(eq.kind, Rational(eq.kappa), 4);
    // phi is even; fit the [1/1] approximant in y = w^2.
    TaylorSeries even({phi.coeff(0), phi.coeff(2), phi.coeff(4)}, 2);
    PadeApproximant r = pade_fit(even, 1, 1);
    double a = branch_asymptote(eq.kind, n);
    double value = a * pade_eval(r, 1.0 / (a * a));
    return RootEstimate{n, value, RootMethod::pade};
}

RootEstimate first_root_cot_closed(double kappa) {
    if (kappa < 0.0) {
        throw std::domain_error("first_root_cot_closed: kappa must be nonnegative");
    }
    const TrigEquation eq{TrigKind::cot_eq, kappa};
    // Expansion around kappa = infinity, in powers of 1/kappa.
    double inv = 1.0 / kappa;
    double big = (1.0 / std::sqrt(kappa)) *
                 (1.0 + (1291.0 / 4044.0) * inv + (103.0 / 5593.0) * inv * inv) /
                 (1.0 + (655.0 / 1348.0) * inv + (255.0 / 3704.0) * inv * inv);
    // Expansion around kappa = 0, in powers of kappa.
    const double pi2_12 = kPi * kPi / 12.0;
    double small = (kPi / 2.0) * (1.0 + 2.0 * kappa + pi2_12 * kappa * kappa) /
                   (1.0 + 3.0 * kappa + (2.0 + pi2_12) * kappa * kappa);
    auto score = [&eq](double x) {
        if (!std::isfinite(x)) {
            return std::numeric_limits<double>::infinity();
        }
        double r = equation_residual(eq, x);
        return std::isfinite(r) ? std::abs(r) : std::numeric_limits<double>::infinity();
    };
    double value = score(big) < score(small) ? big : small;
    return RootEstimate{0, value, RootMethod::pade};
}

RootEstimate root_frankel(const TrigEquation& eq, int n) {
    if (eq.kappa != 1.0) {
        throw std::domain_error("root_frankel: defined for kappa = 1 only");
    }
    if (n < 1) {
        throw std::invalid_argument("root_frankel: branch index must be at least 1");
    }
    double a = branch_asymptote(eq.kind, n);
    double value;
    if (eq.kind == TrigKind::tan_eq) {
        value = a - (1.0 + 1.0 / (a * a)) * arccot(a);
    } else {
        value = a + (1.0 + a * a) / (2.0 + a * a) * arccot(a);
    }
    return RootEstimate{n, value, RootMethod::frankel};
}

RootEstimate root_taylor(const TrigEquation& eq, int n) {
    if (n < 0) {
        throw std::invalid_argument("root_taylor: branch index must be nonnegative");
    }
    if (eq.kind == TrigKind::tan_eq && n == 0) {
        return RootEstimate{0, 0.0, RootMethod::taylor};
    }
    if (n == 0) {
        throw std::invalid_argument("root_taylor: cot requires n >= 1");
    }
    if (!(eq.kappa > 0.0)) {
        throw std::domain_error("root_taylor: kappa must be positive");
    }
    double k = eq.kappa;
    double a = branch_asymptote(eq.kind, n);
    double a2 = a * a;
    double value;
    if (eq.kind == TrigKind::tan_eq) {
        value = a * (1.0 - 1.0 / (k * a2) - (3.0 * k - 1.0) / (3.0 * k * k * k) / (a2 * a2));
    } else {
        value = a * (1.0 + 1.0 / (k * a2) - (3.0 * k + 1.0) / (3.0 * k * k * k) / (a2 * a2));
    }
    return RootEstimate{n, value, RootMethod::taylor};
}

RootEstimate root_oracle(const TrigEquation& eq, int n) {
    if (n < 0) {
        throw std::invalid_argument("root_oracle: branch index must be nonnegative");
    }
    if (eq.kind == TrigKind::cot_eq && eq.kappa < 0.0) {
        throw std::domain_error("root_oracle: cot requires kappa >= 0");
    }
    double value;
    if (eq.kind == TrigKind::tan_eq) {
        if (n == 0) {
            // x = 0 solves tan x = kappa*x on every branch-0 convention used
            // here; the nontrivial branch-0 root (kappa > 1) is out of scope.
            value = 0.0;
        } else if (eq.kappa == 0.0) {
            value = n * kPi;
        } else if (eq.kappa > 0.0) {
            value = bisect_residual(eq, n * kPi, (n + 0.5) * kPi);
        } else {
            value = bisect_residual(eq, (n - 0.5) * kPi, n * kPi);
        }
    } else {
        if (eq.kappa == 0.0) {
            value = (n + 0.5) * kPi;
        } else {
            value = bisect_residual(eq, n * kPi, (n + 0.5) * kPi);
        }
    }
    return RootEstimate{n, value, RootMethod::oracle};
}

std::vector<ErrorTableRow> error_table(const TrigEquation& eq, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("error_table: n_max must be at least 1");
    }
    if (!(eq.kappa > 0.0)) {
        throw std::domain_error("error_table: kappa must be positive");
    }
    std::vector<ErrorTableRow> rows;
    rows.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        ErrorTableRow row;
        row.n = n;
        row.exact = root_oracle(eq, n).value;
        row.ratio = eq.kind == TrigKind::tan_eq ? row.exact / kPi : row.exact / (n * kPi);
        row.err_pade = root_closed_form(eq, n).value - row.exact;
        if (eq.kappa == 1.0) {
            row.err_frankel = root_frankel(eq, n).value - row.exact;
        }
        row.err_taylor = root_taylor(eq, n).value - row.exact;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace transroots
