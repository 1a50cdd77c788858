#pragma once

#include <vector>

#include "transroots/rational.hpp"

namespace transroots {

// Truncated Taylor series with exact rational coefficients. A series of
// order N stores coefficients c0..cN of c0 + c1*x + ... + cN*x^N; terms
// beyond the order are unknown, so arithmetic truncates results to the
// order through which they are determined by the operands.
class TaylorSeries {
public:
    TaylorSeries() : coeffs_(1) {}

    // Pads with zeros or truncates so that exactly order+1 coefficients
    // are stored.
    TaylorSeries(std::vector<Rational> coeffs, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(int i) const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Index of the lowest nonzero coefficient; order()+1 if all are zero.
    int valuation() const;

    TaylorSeries truncated(int order) const;

    // Series scaled by x^k (k >= 0 shifts up, k < 0 requires the low
    // coefficients to vanish). The order shifts along with the terms.
    TaylorSeries shifted(int k) const;

    bool operator==(const TaylorSeries& o) const { return coeffs_ == o.coeffs_; }

    double eval_double(double x) const;

    static TaylorSeries one(int order);
    static TaylorSeries monomial(int degree, int order);

    // cos x = sum (-1)^k x^{2k} / (2k)!
    static TaylorSeries cosine(int order);
    // sin(x)/x = sum (-1)^k x^{2k} / (2k+1)!
    static TaylorSeries sinc(int order);
    // e^{a x} = sum a^n x^n / n!
    static TaylorSeries exp_scaled(const Rational& a, int order);
    // ln(1+x) = sum_{n>=1} (-1)^{n+1} x^n / n
    static TaylorSeries log1p(int order);

private:
    std::vector<Rational> coeffs_;
};

// Sum and difference, truncated to the smaller operand order.
TaylorSeries series_add(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries series_sub(const TaylorSeries& a, const TaylorSeries& b);

TaylorSeries series_scale(const Rational& s, const TaylorSeries& a);

// Cauchy product, truncated to the smaller operand order.
TaylorSeries series_mul(const TaylorSeries& a, const TaylorSeries& b);

// Integer power by repeated multiplication at the operand's order.
// Requires k >= 0.
TaylorSeries series_pow(const TaylorSeries& a, int k);

// Long division a/b. When b has valuation v > 0, a must vanish through
// x^{v-1} (otherwise the quotient is not a Taylor series) and both are
// shifted down by v first; the result carries order min(a,b) - v.
TaylorSeries series_div(const TaylorSeries& a, const TaylorSeries& b);

// f(g(x)) for an inner series with no constant term, truncated to the
// smaller operand order.
TaylorSeries series_compose(const TaylorSeries& f, const TaylorSeries& g);

// Coefficients a_1..a_{n_max} of the inverse z(w) = sum a_n w^n of
// w = z / f(z), via a_n = [z^{n-1}] f(z)^n / n. Requires f(0) != 0.
// The result has a_0 = 0 and order n_max.
TaylorSeries lagrange_invert(const TaylorSeries& f, int n_max);

}  // namespace transroots
