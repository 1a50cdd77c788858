#include "transroots/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace transroots {

TaylorSeries::TaylorSeries(std::vector<Rational> coeffs, int order) {
    if (order < 0) {
        throw std::invalid_argument("TaylorSeries: negative order");
    }
    coeffs.resize(static_cast<size_t>(order) + 1);
    coeffs_ = std::move(coeffs);
}

const Rational& TaylorSeries::coeff(int i) const {
    if (i < 0 || i > order()) {
        throw std::out_of_range("TaylorSeries: coefficient index out of range");
    }
    return coeffs_[static_cast<size_t>(i)];
}

int TaylorSeries::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != Rational(0)) {
            return static_cast<int>(i);
        }
    }
    return order() + 1;
}

TaylorSeries TaylorSeries::truncated(int order) const {
    return TaylorSeries(coeffs_, order);
}

TaylorSeries TaylorSeries::shifted(int k) const {
    if (k >= 0) {
        std::vector<Rational> out(static_cast<size_t>(order() + k) + 1);
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            out[i + static_cast<size_t>(k)] = coeffs_[i];
        }
        return TaylorSeries(std::move(out), order() + k);
    }
    int drop = -k;
    if (drop > order()) {
        throw std::invalid_argument("TaylorSeries: shift drops the whole series");
    }
    for (int i = 0; i < drop; ++i) {
        if (coeffs_[static_cast<size_t>(i)] != Rational(0)) {
            throw std::domain_error("TaylorSeries: shifting down a nonzero low coefficient");
        }
    }
    std::vector<Rational> out(coeffs_.begin() + drop, coeffs_.end());
    return TaylorSeries(std::move(out), order() - drop);
}

double TaylorSeries::eval_double(double x) const {
    double acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i].to_double();
    }
    return acc;
}

TaylorSeries TaylorSeries::one(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    c[0] = Rational(1);
    return TaylorSeries(std::move(c), order);
}

TaylorSeries TaylorSeries::monomial(int degree, int order) {
    if (degree < 0 || degree > order) {
        throw std::invalid_argument("TaylorSeries: monomial degree out of range");
    }
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    c[static_cast<size_t>(degree)] = Rational(1);
    return TaylorSeries(std::move(c), order);
}

TaylorSeries TaylorSeries::cosine(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    Rational fact(1);
    int sign = 1;
    for (int k = 0; 2 * k <= order; ++k) {
        if (k > 0) {
            fact *= Rational(2 * k - 1) * Rational(2 * k);
            sign = -sign;
        }
        c[static_cast<size_t>(2 * k)] = Rational(sign) / fact;
    }
    return TaylorSeries(std::move(c), order);
}

TaylorSeries TaylorSeries::sinc(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    Rational fact(1);
    int sign = 1;
    for (int k = 0; 2 * k <= order; ++k) {
        if (k > 0) {
            fact *= Rational(2 * k) * Rational(2 * k + 1);
            sign = -sign;
        }
        c[static_cast<size_t>(2 * k)] = Rational(sign) / fact;
    }
    return TaylorSeries(std::move(c), order);
}

TaylorSeries TaylorSeries::exp_scaled(const Rational& a, int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    c[0] = Rational(1);
    for (int n = 1; n <= order; ++n) {
        c[static_cast<size_t>(n)] = c[static_cast<size_t>(n - 1)] * a / Rational(n);
    }
    return TaylorSeries(std::move(c), order);
}

TaylorSeries TaylorSeries::log1p(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) {
        c[static_cast<size_t>(n)] = Rational(n % 2 == 1 ? 1 : -1, n);
    }
    return TaylorSeries(std::move(c), order);
}

TaylorSeries series_add(const TaylorSeries& a, const TaylorSeries& b) {
    int order = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        c[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
    }
    return TaylorSeries(std::move(c), order);
}

TaylorSeries series_sub(const TaylorSeries& a, const TaylorSeries& b) {
    int order = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        c[static_cast<size_t>(i)] = a.coeff(i) - b.coeff(i);
    }
    return TaylorSeries(std::move(c), order);
}

TaylorSeries series_scale(const Rational& s, const TaylorSeries& a) {
    std::vector<Rational> c(static_cast<size_t>(a.order()) + 1);
    for (int i = 0; i <= a.order(); ++i) {
        c[static_cast<size_t>(i)] = s * a.coeff(i);
    }
    return TaylorSeries(std::move(c), a.order());
}

TaylorSeries series_mul(const TaylorSeries& a, const TaylorSeries& b) {
    int order = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        for (int j = 0; i + j <= order; ++j) {
            if (j > b.order()) {
                break;
            }
            if (i <= a.order()) {
                c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
            }
        }
    }
    return TaylorSeries(std::move(c), order);
}

TaylorSeries series_pow(const TaylorSeries& a, int k) {
    if (k < 0) {
        throw std::invalid_argument("series_pow: negative exponent");
    }
    TaylorSeries acc = TaylorSeries::one(a.order());
    TaylorSeries base = a;
    while (k > 0) {
        if (k & 1) {
            acc = series_mul(acc, base);
        }
        k >>= 1;
        if (k > 0) {
            base = series_mul(base, base);
        }
    }
    return acc;
}

TaylorSeries series_div(const TaylorSeries& a, const TaylorSeries& b) {
    int vb = b.valuation();
    if (vb > b.order()) {
        throw std::domain_error("series_div: division by the zero series");
    }
    TaylorSeries num = a;
    TaylorSeries den = b;
    if (vb > 0) {
        if (a.valuation() < vb) {
            throw std::domain_error(
                "series_div: quotient has a pole (numerator valuation below denominator's)");
        }
        num = a.shifted(-vb);
        den = b.shifted(-vb);
    }
    int order = std::min(num.order(), den.order());
    std::vector<Rational> q(static_cast<size_t>(order) + 1);
    const Rational& d0 = den.coeff(0);
    for (int n = 0; n <= order; ++n) {
        Rational acc = num.coeff(n);
        for (int k = 0; k < n; ++k) {
            acc -= q[static_cast<size_t>(k)] * den.coeff(n - k);
        }
        q[static_cast<size_t>(n)] = acc / d0;
    }
    return TaylorSeries(std::move(q), order);
}

TaylorSeries series_compose(const TaylorSeries& f, const TaylorSeries& g) {
    if (g.coeff(0) != Rational(0)) {
        throw std::domain_error("series_compose: inner series must have no constant term");
    }
    int order = std::min(f.order(), g.order());
    TaylorSeries gt = g.truncated(order);
    // Horner over the outer coefficients keeps every product at the result order.
    std::vector<Rational> acc_c(static_cast<size_t>(order) + 1);
    acc_c[0] = f.coeff(std::min(f.order(), order));
    TaylorSeries acc(std::move(acc_c), order);
    for (int i = std::min(f.order(), order) - 1; i >= 0; --i) {
        acc = series_mul(acc, gt);
        std::vector<Rational> c = acc.coeffs();
        c[0] += f.coeff(i);
        acc = TaylorSeries(std::move(c), order);
    }
    return acc;
}

TaylorSeries lagrange_invert(const TaylorSeries& f, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("lagrange_invert: n_max must be at least 1");
    }
    if (f.coeff(0) == Rational(0)) {
        throw std::domain_error("lagrange_invert: f(0) must be nonzero");
    }
    TaylorSeries fk = f.truncated(n_max - 1);
    std::vector<Rational> a(static_cast<size_t>(n_max) + 1);
    TaylorSeries power = TaylorSeries::one(n_max - 1);
    for (int n = 1; n <= n_max; ++n) {
        power = series_mul(power, fk);
        a[static_cast<size_t>(n)] = power.coeff(n - 1) / Rational(n);
    }
    return TaylorSeries(std::move(a), n_max);
}

}  // namespace transroots
