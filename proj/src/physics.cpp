#include "transroots/physics.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "transroots/trig_roots.hpp"

namespace transroots {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

SpringSystem SpringSystem::from_ratio(double r) {
    if (r < 0.0) {
        throw std::invalid_argument("SpringSystem: mass ratio must be nonnegative");
    }
    SpringSystem s;
    s.r = r;
    return s;
}

SpringSystem SpringSystem::from_dimensional(double m, double m0, double k) {
    if (m < 0.0 || m0 < 0.0) {
        throw std::invalid_argument("SpringSystem: masses must be nonnegative");
    }
    if (!(k > 0.0)) {
        throw std::invalid_argument("SpringSystem: stiffness must be positive");
    }
    SpringSystem s;
    s.m = m;
    s.m0 = m0;
    s.k = k;
    s.r = m0 > 0.0 ? m / m0 : std::numeric_limits<double>::infinity();
    return s;
}

double spring_xi(double r) {
    if (r < 0.0) {
        throw std::invalid_argument("spring_xi: mass ratio must be nonnegative");
    }
    double eta = first_root_cot_closed(r).value;
    return 1.0 / (eta * eta) - r;
}

double spring_frequency(const SpringSystem& s) {
    if (!s.m || !s.m0 || !s.k) {
        throw std::invalid_argument("spring_frequency: dimensional fields required");
    }
    double m = *s.m;
    double m0 = *s.m0;
    double k = *s.k;
    if (m < 0.0 || m0 < 0.0) {
        throw std::invalid_argument("spring_frequency: masses must be nonnegative");
    }
    if (!(k > 0.0)) {
        throw std::invalid_argument("spring_frequency: stiffness must be positive");
    }
    if (m0 == 0.0) {
        if (m == 0.0) {
            throw std::invalid_argument("spring_frequency: total effective mass is zero");
        }
        return std::sqrt(k / m);
    }
    double effective = m + spring_xi(m / m0) * m0;
    return std::sqrt(k / effective);
}

std::pair<double, double> diffraction_maxima(int n) {
    if (n < 0) {
        throw std::invalid_argument("diffraction_maxima: n must be nonnegative");
    }
    if (n == 0) {
        return {0.0, 1.0};
    }
    double u = root_closed_form(TrigEquation{TrigKind::tan_eq, 1.0}, n).value;
    double a = (n + 0.5) * kPi;
    double a2 = a * a;
    double ratio = 0.5 * (9.0 / (3.0 * a2 - 2.0) - 1.0 / a2);
    return {u, ratio};
}

std::vector<std::pair<double, double>> diffraction_profile(const std::vector<double>& u_grid) {
    std::vector<std::pair<double, double>> out;
    out.reserve(u_grid.size());
    for (double u : u_grid) {
        double intensity;
        if (u == 0.0) {
            intensity = 1.0;
        } else {
            double s = std::sin(u) / u;
            intensity = s * s;
        }
        out.emplace_back(u, intensity);
    }
    return out;
}

double angle_to_u(const DiffractionGeometry& g, double theta) {
    if (!(g.slit_width > 0.0) || !(g.wavelength > 0.0)) {
        throw std::invalid_argument("angle_to_u: slit width and wavelength must be positive");
    }
    return kPi * g.slit_width * std::sin(theta) / g.wavelength;
}

double single_delta_even_energy(int n, bool use_approximation) {
    if (n < 1 || n % 2 == 0) {
        throw std::domain_error(
            "single_delta_even_energy: only odd n >= 1 label the even-parity levels");
    }
    if (use_approximation) {
        const double gamma0 = -2.0;
        double e0 = n * n * kPi * kPi / 2.0;
        if (n == 1) {
            return e0 + (kPi * kPi / 4.0) * gamma0;
        }
        double npi = n * kPi;
        return e0 + 2.0 * (1.0 + 2.0 / (3.0 * npi * npi)) * gamma0;
    }
    // tan(k/2) = k/2 with x = k/2 on branch (n-1)/2; E = k^2/2 = 2 x^2.
    double x = root_oracle(TrigEquation{TrigKind::tan_eq, 1.0}, (n - 1) / 2).value;
    return 2.0 * x * x;
}

std::pair<double, std::optional<double>> double_delta_energies(double a_over_b,
                                                               const WVariant& variant) {
    if (!(a_over_b > 0.0)) {
        throw std::invalid_argument("double_delta_energies: a/b must be positive");
    }
    double s = a_over_b;
    auto energy = [&](double sign) {
        double w = w_eval(sign * s * std::exp(-s), variant);
        double sum = s + w;
        return -sum * sum / 8.0;
    };
    double e_even = energy(1.0);
    std::optional<double> e_odd;
    if (s > 1.0) {
        e_odd = energy(-1.0);
    }
    return {e_even, e_odd};
}

double wien_x0(WienMethod method, int nodes) {
    switch (method) {
        case WienMethod::lambert_oracle:
            return 5.0 + w_oracle(-5.0 * std::exp(-5.0));
        case WienMethod::pade_ii:
            return 5.0 + w_eval(-5.0 * std::exp(-5.0), WVariant::pade_ii());
        case WienMethod::pade_ii_rounded:
            return 5.0 + w_eval(-5.0 * std::exp(-5.0), WVariant::pade_ii_rounded());
        case WienMethod::contour:
            break;
    }
    if (nodes < 16) {
        throw std::invalid_argument("wien_x0: contour method needs at least 16 nodes");
    }
    // x0 = 5 * I3/I2 where Ik integrates w(theta) e^{i k theta} over a period
    // and w(theta) = (1/5) / ((1 - e^{i theta}) e^{5 e^{i theta}} - 1). The
    // integrand is smooth and periodic, so the uniform trapezoid sum
    // converges geometrically in the node count.
    std::complex<double> s_num(0.0, 0.0);
    std::complex<double> s_den(0.0, 0.0);
    for (int j = 0; j < nodes; ++j) {
        double theta = 2.0 * kPi * j / nodes;
        std::complex<double> e(std::cos(theta), std::sin(theta));
        std::complex<double> w = 0.2 / ((1.0 - e) * std::exp(5.0 * e) - 1.0);
        s_num += w * e * e * e;
        s_den += w * e * e;
    }
    std::complex<double> x0 = 5.0 * s_num / s_den;
    if (std::abs(x0.imag()) >= 1e-10) {
        throw std::runtime_error(
            "wien_x0: contour ratio has a residual imaginary part; increase the node count");
    }
    return x0.real();
}

double wien_constant(const PhysicalConstants& consts) {
    return consts.h * consts.c / (consts.k_B * wien_x0(WienMethod::lambert_oracle));
}

std::vector<std::pair<double, double>> planck_profile(const std::vector<double>& lambda_grid,
                                                      double temperature,
                                                      const PhysicalConstants& consts) {
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("planck_profile: temperature must be positive");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(lambda_grid.size());
    for (double lambda : lambda_grid) {
        if (!(lambda > 0.0)) {
            throw std::invalid_argument("planck_profile: wavelengths must be positive");
        }
        double hc = consts.h * consts.c;
        double x = hc / (lambda * consts.k_B * temperature);
        double density = 8.0 * kPi * hc / std::pow(lambda, 5) / std::expm1(x);
        out.emplace_back(lambda, density);
    }
    return out;
}

}  // namespace transroots
