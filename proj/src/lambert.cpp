#include "transroots/lambert.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace transroots {

namespace {

const double kInvE = std::exp(-1.0);

}  // namespace

WVariant WVariant::parse(const std::string& s) {
    if (s.rfind("taylor:", 0) == 0) {
        int terms = 0;
        try {
            size_t pos = 0;
            terms = std::stoi(s.substr(7), &pos);
            if (pos != s.size() - 7) {
                throw std::invalid_argument(s);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("WVariant: bad Taylor term count in '" + s + "'");
        }
        if (terms < 1) {
            throw std::invalid_argument("WVariant: Taylor terms must be at least 1");
        }
        return taylor(terms);
    }
    if (s == "pade-i") {
        return pade_i();
    }
    if (s == "pade-i-rounded") {
        return pade_i_rounded();
    }
    if (s == "pade-ii") {
        return pade_ii();
    }
    if (s == "pade-ii-rounded") {
        return pade_ii_rounded();
    }
    if (s == "oracle") {
        return oracle();
    }
    throw std::invalid_argument("WVariant: unknown variant '" + s + "'");
}

std::string WVariant::str() const {
    switch (kind) {
        case Kind::taylor:
            return "taylor:" + std::to_string(taylor_terms);
        case Kind::pade_i:
            return "pade-i";
        case Kind::pade_i_rounded:
            return "pade-i-rounded";
        case Kind::pade_ii:
            return "pade-ii";
        case Kind::pade_ii_rounded:
            return "pade-ii-rounded";
        case Kind::oracle:
            return "oracle";
    }
    return "oracle";
}

TaylorSeries w_taylor_series(int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("w_taylor_series: n_max must be at least 1");
    }
    // x = w e^w is w/f(w) with f(w) = e^{-w}.
    return lagrange_invert(TaylorSeries::exp_scaled(Rational(-1), n_max - 1), n_max);
}

const PadeApproximant& w_pade_i() {
    static const PadeApproximant r = pade_fit(w_taylor_series(5).shifted(-1), 2, 2);
    return r;
}

const PadeApproximant& w_pade_i_rounded() {
    static const PadeApproximant r = pade_round(w_pade_i()).approximant;
    return r;
}

const PadeApproximant& w_pade_ii() {
    static const PadeApproximant r =
        pade_fit(series_div(w_taylor_series(5), TaylorSeries::log1p(5)), 2, 2);
    return r;
}

const PadeApproximant& w_pade_ii_rounded() {
    static const PadeApproximant r = pade_round(w_pade_ii()).approximant;
    return r;
}

double w_oracle(double x, WBranch branch) {
    if (x < -kInvE) {
        throw std::domain_error("w_oracle: x below -1/e, no real branch");
    }
    double w;
    if (branch == WBranch::principal) {
        if (x >= 0.0) {
            w = std::log1p(x);
        } else {
            double p = std::sqrt(std::max(2.0 * (std::exp(1.0) * x + 1.0), 0.0));
            w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
        }
    } else {
        if (x >= 0.0) {
            throw std::domain_error("w_oracle: branch -1 is defined on [-1/e, 0)");
        }
        if (x < -kInvE + 0.05) {
            double p = std::sqrt(std::max(2.0 * (std::exp(1.0) * x + 1.0), 0.0));
            w = -1.0 - p - p * p / 3.0 - 11.0 * p * p * p / 72.0;
        } else {
            double l1 = std::log(-x);
            w = l1 - std::log(-l1);
        }
    }
    const double tol = 1e-15 * std::max(1.0, std::abs(x));
    for (int it = 0; it < 100; ++it) {
        double ew = std::exp(w);
        double f = w * ew - x;
        if (std::abs(f) <= tol) {
            return w;
        }
        double wp1 = w + 1.0;
        double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        double next = w - f / denom;
        if (next == w) {
            return w;
        }
        w = next;
    }
    throw std::runtime_error("w_oracle: Halley iteration did not converge");
}

double w_eval(double x, const WVariant& variant, WBranch branch) {
    if (variant.kind == WVariant::Kind::oracle) {
        return w_oracle(x, branch);
    }
    if (branch != WBranch::principal) {
        throw std::domain_error("w_eval: approximants cover the principal branch only");
    }
    switch (variant.kind) {
        case WVariant::Kind::taylor: {
            if (variant.taylor_terms < 1) {
                throw std::invalid_argument("w_eval: Taylor terms must be at least 1");
            }
            return w_taylor_series(variant.taylor_terms).eval_double(x);
        }
        case WVariant::Kind::pade_i:
            return x * pade_eval(w_pade_i(), x);
        case WVariant::Kind::pade_i_rounded:
            return x * pade_eval(w_pade_i_rounded(), x);
        case WVariant::Kind::pade_ii:
        case WVariant::Kind::pade_ii_rounded: {
            if (x <= -1.0) {
                throw std::domain_error("w_eval: type-II approximant needs x > -1");
            }
            const PadeApproximant& r = variant.kind == WVariant::Kind::pade_ii
                                           ? w_pade_ii()
                                           : w_pade_ii_rounded();
            return std::log1p(x) * pade_eval(r, x);
        }
        case WVariant::Kind::oracle:
            break;
    }
    return w_oracle(x, branch);
}

double solve_exp_linear(const ExpLinearProblem& prob, WBranch branch) {
    if (prob.a == 0.0) {
        throw std::invalid_argument("solve_exp_linear: a must be nonzero");
    }
    if (prob.c == 0.0) {
        return prob.b + 1.0 / prob.a;
    }
    double arg = (prob.c / prob.a) * std::exp(-prob.c * prob.b);
    return prob.b + w_oracle(arg, branch) / prob.c;
}

std::vector<ErrorCurvePoint> error_curve(const std::vector<double>& xs,
                                         const WVariant& variant) {
    std::vector<ErrorCurvePoint> out;
    out.reserve(xs.size());
    for (double x : xs) {
        ErrorCurvePoint pt;
        pt.x = x;
        if (x < -kInvE) {
            pt.status = ErrorCurvePoint::Status::skipped_domain;
            out.push_back(pt);
            continue;
        }
        double wo = w_oracle(x, WBranch::principal);
        if (wo == 0.0) {
            pt.status = ErrorCurvePoint::Status::skipped_zero;
            out.push_back(pt);
            continue;
        }
        double wa;
        try {
            wa = w_eval(x, variant, WBranch::principal);
        } catch (const std::domain_error&) {
            pt.status = ErrorCurvePoint::Status::skipped_domain;
            out.push_back(pt);
            continue;
        }
        double diff = std::abs((wa - wo) / wo);
        pt.delta = diff == 0.0 ? -std::numeric_limits<double>::infinity() : std::log10(diff);
        pt.status = ErrorCurvePoint::Status::ok;
        out.push_back(pt);
    }
    return out;
}

}  // namespace transroots
