#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace transroots {

// Arbitrary-precision rational number, always stored in lowest terms with a
// positive denominator. Thin wrapper over GMP's mpq_class that canonicalizes
// on every construction path, so invariants hold no matter how a value was
// produced.
class Rational {
public:
    Rational() : v_(0) {}

    Rational(int n) : v_(static_cast<long>(n)) {}

    Rational(long n) : v_(n) {}

    Rational(long n, long d) {
        if (d == 0) {
            throw std::invalid_argument("Rational: zero denominator");
        }
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    // Exact conversion: every finite double is a dyadic rational.
    explicit Rational(double x) {
        v_ = mpq_class(x);
        v_.canonicalize();
    }

    // Parses "n", "-n", or "n/d" with arbitrary-precision parts.
    static Rational from_string(const std::string& s) {
        Rational r;
        if (r.v_.set_str(s, 10) != 0) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
        if (r.v_.get_den() == 0) {
            throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        }
        r.v_.canonicalize();
        return r;
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) {
            throw std::domain_error("Rational: division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    int sign() const { return sgn(v_); }

    bool is_integer() const { return v_.get_den() == 1; }

    // Nearest integer, ties rounded away from zero.
    Rational round_half_away() const {
        mpz_class n = v_.get_num();
        mpz_class d = v_.get_den();
        mpz_class q;
        if (n >= 0) {
            q = (2 * n + d) / (2 * d);
        } else {
            q = -((2 * (-n) + d) / (2 * d));
        }
        return Rational(mpq_class(q));
    }

    double to_double() const { return v_.get_d(); }

    Rational numerator() const { return Rational(mpq_class(v_.get_num())); }
    Rational denominator() const { return Rational(mpq_class(v_.get_den())); }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    // "n/d" in lowest terms, or just "n" for integers.
    std::string str() const {
        if (is_integer()) {
            return v_.get_num().get_str();
        }
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

}  // namespace transroots
