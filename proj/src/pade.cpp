#include "transroots/pade.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace transroots {

namespace {

// Solves the square system A x = b exactly. Rows are first scaled to integer
// entries, then reduced by Bareiss (fraction-free) elimination with partial
// pivoting, which keeps intermediate values integral and of modest size.
// Returns false if the matrix is singular.
bool solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational>& x) {
    const int n = static_cast<int>(m.size());
    for (auto& row : m) {
        Rational mult(1);
        for (const Rational& e : row) {
            mult *= e.denominator();
        }
        for (Rational& e : row) {
            e *= mult;
        }
    }
    Rational prev(1);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        Rational best(0);
        for (int r = k; r < n; ++r) {
            Rational mag = m[r][static_cast<size_t>(k)].abs();
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (pivot < 0) {
            return false;
        }
        std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(pivot)]);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j <= n; ++j) {
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (m[static_cast<size_t>(k)][static_cast<size_t>(k)] *
                         m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                     m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                         m[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
                    prev;
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(k)] = Rational(0);
        }
        prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    x.assign(static_cast<size_t>(n), Rational(0));
    for (int k = n - 1; k >= 0; --k) {
        Rational acc = m[static_cast<size_t>(k)][static_cast<size_t>(n)];
        for (int j = k + 1; j < n; ++j) {
            acc -= m[static_cast<size_t>(k)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
        }
        x[static_cast<size_t>(k)] = acc / m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    return true;
}

}  // namespace

PadeApproximant pade_fit(const TaylorSeries& f, int p, int q) {
    if (p < 0 || q < 0) {
        throw std::invalid_argument("pade_fit: negative degree");
    }
    if (f.order() < p + q) {
        throw std::invalid_argument("pade_fit: series order " + std::to_string(f.order()) +
                                    " is below p+q = " + std::to_string(p + q));
    }
    auto c = [&](int k) { return k < 0 ? Rational(0) : f.coeff(k); };

    std::vector<Rational> qc(static_cast<size_t>(q) + 1);
    qc[0] = Rational(1);
    if (q > 0) {
        // For n = p+1..p+q: sum_{j=1..q} c_{n-j} q_j = -c_n.
        std::vector<std::vector<Rational>> m(
            static_cast<size_t>(q), std::vector<Rational>(static_cast<size_t>(q) + 1));
        for (int r = 0; r < q; ++r) {
            int n = p + 1 + r;
            for (int j = 1; j <= q; ++j) {
                m[static_cast<size_t>(r)][static_cast<size_t>(j - 1)] = c(n - j);
            }
            m[static_cast<size_t>(r)][static_cast<size_t>(q)] = -c(n);
        }
        std::vector<Rational> sol;
        if (!solve_exact(std::move(m), sol)) {
            throw std::runtime_error(
                "pade_fit: degenerate Pade approximant at [" + std::to_string(p) + "/" +
                std::to_string(q) + "] (denominator system singular: Taylor data has deficient order)");
        }
        for (int j = 1; j <= q; ++j) {
            qc[static_cast<size_t>(j)] = sol[static_cast<size_t>(j - 1)];
        }
    }

    std::vector<Rational> pc(static_cast<size_t>(p) + 1);
    for (int i = 0; i <= p; ++i) {
        Rational acc(0);
        for (int j = 0; j <= std::min(i, q); ++j) {
            acc += c(i - j) * qc[static_cast<size_t>(j)];
        }
        pc[static_cast<size_t>(i)] = acc;
    }
    return PadeApproximant{std::move(pc), std::move(qc), p + q};
}

double pade_eval(const PadeApproximant& r, double x) {
    double num = 0.0;
    for (size_t i = r.num.size(); i-- > 0;) {
        num = num * x + r.num[i].to_double();
    }
    double den = 0.0;
    for (size_t i = r.den.size(); i-- > 0;) {
        den = den * x + r.den[i].to_double();
    }
    if (std::abs(den) < 1e-300) {
        throw std::domain_error("pade_eval: evaluation at a pole of the approximant");
    }
    return num / den;
}

TaylorSeries pade_taylor(const PadeApproximant& r, int order) {
    TaylorSeries num(r.num, order);
    TaylorSeries den(r.den, order);
    return series_div(num, den);
}

PadeApproximant clear_denominators(const PadeApproximant& r) {
    Rational mult(1);
    auto fold_in = [&mult](const Rational& e) {
        Rational d = e.denominator();
        // mult <- lcm(mult, d); both are positive integers here.
        Rational g = d;
        Rational a = mult;
        while (g != Rational(0)) {
            Rational t = a - (a / g).round_half_away() * g;
            if (t < Rational(0)) {
                t += g;
            }
            a = g;
            g = t;
        }
        mult = mult * d / a;
    };
    for (const Rational& e : r.num) {
        fold_in(e);
    }
    for (const Rational& e : r.den) {
        fold_in(e);
    }
    PadeApproximant out = r;
    for (Rational& e : out.num) {
        e *= mult;
    }
    for (Rational& e : out.den) {
        e *= mult;
    }
    return out;
}

PadeRoundResult pade_round(const PadeApproximant& r, int max_scale) {
    if (max_scale < 1) {
        throw std::invalid_argument("pade_round: max_scale must be at least 1");
    }
    const Rational tau(1, 10);
    auto rounded_at = [&r](int d) {
        PadeApproximant out;
        out.match_order = r.match_order;
        out.num.reserve(r.num.size());
        out.den.reserve(r.den.size());
        for (const Rational& e : r.num) {
            out.num.push_back((Rational(d) * e).round_half_away());
        }
        for (const Rational& e : r.den) {
            out.den.push_back((Rational(d) * e).round_half_away());
        }
        return out;
    };
    auto deviation_of = [&r](const PadeApproximant& rounded, int d) {
        Rational worst(0);
        for (size_t i = 0; i < r.num.size(); ++i) {
            Rational dev = (rounded.num[i] - Rational(d) * r.num[i]).abs();
            if (dev > worst) {
                worst = dev;
            }
        }
        for (size_t i = 0; i < r.den.size(); ++i) {
            Rational dev = (rounded.den[i] - Rational(d) * r.den[i]).abs();
            if (dev > worst) {
                worst = dev;
            }
        }
        return worst / Rational(d);
    };

    bool have_best = false;
    PadeRoundResult best;
    for (int d = 1; d <= max_scale; ++d) {
        PadeApproximant cand = rounded_at(d);
        if (cand.den[0] == Rational(0)) {
            continue;
        }
        Rational dev = deviation_of(cand, d);
        if (dev <= tau) {
            return PadeRoundResult{std::move(cand), d, dev};
        }
        if (!have_best || dev < best.deviation) {
            best = PadeRoundResult{std::move(cand), d, dev};
            have_best = true;
        }
    }
    if (!have_best) {
        throw std::runtime_error("pade_round: no usable scale (rounded denominator vanished)");
    }
    return best;
}

}  // namespace transroots
