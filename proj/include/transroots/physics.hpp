#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "transroots/lambert.hpp"

namespace transroots {

// Hanging mass on a heavy spring. Either just the mass ratio r = m/m0 or
// the full dimensional triple (m, m0, k) in consistent units.
struct SpringSystem {
    double r = 0.0;
    std::optional<double> m;
    std::optional<double> m0;
    std::optional<double> k;

    static SpringSystem from_ratio(double r);
    static SpringSystem from_dimensional(double m, double m0, double k);
};

struct DiffractionGeometry {
    double slit_width;
    double wavelength;
};

// CODATA-2018 exact SI defining constants.
struct PhysicalConstants {
    double h = 6.62607015e-34;
    double c = 299792458.0;
    double k_B = 1.380649e-23;
};

inline constexpr PhysicalConstants codata2018{};

// Fraction of the spring mass that adds to the hung mass: solves
// cot(eta) = r*eta for the first root via first_root_cot_closed and returns
// xi = 1/eta^2 - r, which decreases from 4/pi^2 (r -> 0) to 1/3 (r -> inf).
// Requires r >= 0.
double spring_xi(double r);

// omega = sqrt(k / (m + xi(m/m0)*m0)). Requires the dimensional fields;
// masses must be nonnegative (not both zero) and k positive.
double spring_frequency(const SpringSystem& s);

// Position u_n and relative intensity I_n/I_0 of the n-th secondary maximum
// of the single-slit pattern sin^2(u)/u^2; n = 0 is the primary maximum
// (0, 1). Positions use the tan x = x closed form.
std::pair<double, double> diffraction_maxima(int n);

// sin^2(u)/u^2 over the grid, with the removable singularity at u = 0
// evaluated as 1.
std::vector<std::pair<double, double>> diffraction_profile(const std::vector<double>& u_grid);

// u = pi * b * sin(theta) / lambda.
double angle_to_u(const DiffractionGeometry& g, double theta);

// Even-parity level n of a particle in a unit-width box with a delta spike
// of critical strength at the centre (units hbar = m = a = 1). With
// use_approximation the asymptotic formula is evaluated literally; without
// it the quantization condition tan(k/2) = k/2 is solved by bisection and
// E = k^2/2 returned. n must be odd and >= 1.
double single_delta_even_energy(int n, bool use_approximation);

// Bound-state energies of twin attractive delta wells separated by 2a, in
// units hbar^2/(m a^2), parameterized by s = a/b with b = hbar^2/(2 m gamma):
// E = -(1/8)*(s + W0(+-s e^{-s}))^2. The odd-parity level exists only for
// s > 1. W is evaluated by the given variant (the Halley reference by
// default). Requires s > 0.
std::pair<double, std::optional<double>> double_delta_energies(
    double a_over_b, const WVariant& variant = WVariant::oracle());

enum class WienMethod { lambert_oracle, pade_ii, pade_ii_rounded, contour };

// The Wien peak abscissa x0 solving (5 - x) e^x = 5, i.e. 5 + W0(-5 e^{-5}).
// The contour method instead evaluates the residue ratio of two theta
// integrals by an M-node uniform trapezoid rule over [0, 2*pi] in complex
// arithmetic; it requires nodes >= 16 and throws std::runtime_error with a
// suggestion to raise M when the imaginary part exceeds 1e-10.
double wien_x0(WienMethod method, int nodes = 64);

// Displacement constant b = h c / (k_B x0) in m*K, with the reference x0.
double wien_constant(const PhysicalConstants& consts = codata2018);

// Spectral energy density 8 pi h c / lambda^5 / (e^{hc/(lambda k_B T)} - 1)
// over the wavelength grid. Requires lambda > 0 and T > 0.
std::vector<std::pair<double, double>> planck_profile(
    const std::vector<double>& lambda_grid, double temperature,
    const PhysicalConstants& consts = codata2018);

}  // namespace transroots
