#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "transroots/physics.hpp"
#include "transroots/trig_roots.hpp"

using namespace transroots;

namespace {

const double kPi = std::acos(-1.0);

}  // namespace

TEST_CASE("spring mass fraction limits and midpoint") {
    CHECK(spring_xi(1e-6) == doctest::Approx(0.40528454513922546).epsilon(1e-12));
    CHECK(std::abs(spring_xi(1e-6) - 4.0 / (kPi * kPi)) < 1e-5);
    // xi = 1/eta^2 - r cancels heavily at large r: the 2/eta^3 sensitivity
    // turns one ulp of eta into ~4e-10 of xi, so the pin is conditioned to
    // ~1e-9 relative even though eta itself is reproduced to the last digit.
    CHECK(spring_xi(1e6) == doctest::Approx(0.33333335537463427).epsilon(1e-8));
    CHECK(std::abs(spring_xi(1e6) - 1.0 / 3.0) < 1e-5);
    CHECK(spring_xi(1.0) == doctest::Approx(0.3509308571303773).epsilon(1e-12));
    CHECK_THROWS_AS(spring_xi(-0.5), std::invalid_argument);
}

TEST_CASE("spring mass fraction is monotone and bounded") {
    double prev = spring_xi(1e-6);
    for (int i = 1; i < 25; ++i) {
        const double r = std::pow(10.0, -6.0 + 12.0 * i / 24.0);
        const double cur = spring_xi(r);
        CHECK(cur < prev);
        CHECK(cur > 1.0 / 3.0 - 1e-5);
        CHECK(cur < 4.0 / (kPi * kPi) + 1e-5);
        prev = cur;
    }
}

TEST_CASE("spring mass fraction tracks the bisection solution") {
    for (double r : {1e-4, 1e-2, 0.3, 1.0, 3.0, 1e2, 1e4}) {
        const double eta = root_oracle(TrigEquation{TrigKind::cot_eq, r}, 0).value;
        const double xi_exact = 1.0 / (eta * eta) - r;
        CHECK(std::abs(spring_xi(r) - xi_exact) < 2e-3);
    }
}

TEST_CASE("spring frequency") {
    SpringSystem s = SpringSystem::from_dimensional(1.0, 1.0, 1.0);
    CHECK(spring_frequency(s) == doctest::Approx(0.8603663953848656).epsilon(1e-12));
    // A massless spring reduces to the bare oscillator.
    CHECK(spring_frequency(SpringSystem::from_dimensional(4.0, 0.0, 1.0)) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(spring_frequency(SpringSystem::from_dimensional(0.0, 0.0, 1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpringSystem::from_dimensional(-1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(SpringSystem::from_dimensional(1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(spring_frequency(SpringSystem::from_ratio(1.0)), std::invalid_argument);
}

TEST_CASE("diffraction maxima positions and strengths") {
    auto [u0, r0] = diffraction_maxima(0);
    CHECK(u0 == 0.0);
    CHECK(r0 == 1.0);

    auto [u1, r1] = diffraction_maxima(1);
    CHECK(u1 == doctest::Approx(4.493614542179301).epsilon(1e-15));
    CHECK(r1 == doctest::Approx(0.047122247937893824).epsilon(1e-12));
    CHECK(diffraction_maxima(2).second ==
          doctest::Approx(0.016477069895320835).epsilon(1e-12));
    CHECK(diffraction_maxima(3).second ==
          doctest::Approx(0.008339907726240102).epsilon(1e-12));
    CHECK_THROWS_AS(diffraction_maxima(-1), std::invalid_argument);
}

TEST_CASE("diffraction maxima interlace the pattern zeros") {
    for (int n = 1; n <= 10; ++n) {
        const double u = diffraction_maxima(n).first;
        CHECK(u > n * kPi);
        CHECK(u < (n + 0.5) * kPi);
    }
}

TEST_CASE("maxima strengths agree with direct evaluation") {
    // The closed form carries a relative error up to ~1.5e-3 at n = 1 and
    // stays within 1e-4 absolute everywhere.
    for (int n = 1; n <= 10; ++n) {
        const double closed = diffraction_maxima(n).second;
        const double u = root_oracle(TrigEquation{TrigKind::tan_eq, 1.0}, n).value;
        const double direct = std::sin(u) * std::sin(u) / (u * u);
        CHECK(std::abs(closed - direct) <= 1e-4);
        CHECK(std::abs(closed - direct) / direct <= 1.5e-3);
    }
    const double u1 = root_oracle(TrigEquation{TrigKind::tan_eq, 1.0}, 1).value;
    CHECK(std::sin(u1) * std::sin(u1) / (u1 * u1) ==
          doctest::Approx(0.04719044922581128).epsilon(1e-12));
}

TEST_CASE("diffraction profile and angle mapping") {
    auto profile = diffraction_profile({0.0, kPi / 2, kPi});
    REQUIRE(profile.size() == 3);
    CHECK(profile[0].second == 1.0);
    CHECK(profile[1].second == doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-14));
    CHECK(profile[2].second == doctest::Approx(0.0).epsilon(1e-30));

    DiffractionGeometry g{2e-6, 5e-7};
    CHECK(angle_to_u(g, 0.5) == doctest::Approx(kPi * 2e-6 * std::sin(0.5) / 5e-7));
    CHECK_THROWS_AS(angle_to_u(DiffractionGeometry{0.0, 5e-7}, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(angle_to_u(DiffractionGeometry{2e-6, -1.0}, 0.1), std::invalid_argument);
}

TEST_CASE("single delta spike levels") {
    CHECK(single_delta_even_energy(1, true) == doctest::Approx(0.0).epsilon(1e-30));
    CHECK(single_delta_even_energy(1, false) == doctest::Approx(0.0).epsilon(1e-30));
    CHECK(single_delta_even_energy(3, false) ==
          doctest::Approx(40.38145711285326).epsilon(1e-12));
    CHECK(single_delta_even_energy(3, true) ==
          doctest::Approx(40.38319871345253).epsilon(1e-12));
    CHECK(single_delta_even_energy(5, false) ==
          doctest::Approx(119.35903188821882).epsilon(1e-12));
    CHECK(single_delta_even_energy(5, true) ==
          doctest::Approx(119.35924742069513).epsilon(1e-12));
    // The asymptotic form closes in on the solver as n grows.
    CHECK(std::abs(single_delta_even_energy(3, true) - single_delta_even_energy(3, false)) <
          2e-3);
    CHECK(std::abs(single_delta_even_energy(5, true) - single_delta_even_energy(5, false)) <
          3e-4);
    CHECK_THROWS_AS(single_delta_even_energy(2, false), std::domain_error);
    CHECK_THROWS_AS(single_delta_even_energy(0, true), std::domain_error);
}

TEST_CASE("single delta solver levels satisfy the quantization condition") {
    for (int n : {3, 5, 7, 9}) {
        const double e = single_delta_even_energy(n, false);
        const double k = std::sqrt(2.0 * e);
        // tan(k/2) = k/2, checked pole-free.
        CHECK(std::abs(std::sin(k / 2) - (k / 2) * std::cos(k / 2)) <= 1e-10);
    }
}

TEST_CASE("double well bound states") {
    auto [ee, eo] = double_delta_energies(2.0);
    CHECK(ee == doctest::Approx(-0.61478253628789767).epsilon(1e-13));
    REQUIRE(eo.has_value());
    CHECK(*eo == doctest::Approx(-0.31745478527352067).epsilon(1e-13));

    auto [pe, po] = double_delta_energies(2.0, WVariant::pade_ii());
    CHECK(pe == doctest::Approx(-0.6147832027030443).epsilon(1e-12));
    REQUIRE(po.has_value());
    CHECK(*po == doctest::Approx(-0.31762690428361406).epsilon(1e-12));

    // The odd level only exists for separations beyond the strength length.
    CHECK_FALSE(double_delta_energies(0.5).second.has_value());
    CHECK_FALSE(double_delta_energies(1.0).second.has_value());
    CHECK(double_delta_energies(1.0 + 1e-9).second.has_value());

    // Far-separated wells approach twin isolated levels -s^2/8.
    auto [fe, fo] = double_delta_energies(50.0);
    CHECK(fe == doctest::Approx(-312.5).epsilon(1e-10));
    CHECK(*fo == doctest::Approx(-312.5).epsilon(1e-10));

    CHECK_THROWS_AS(double_delta_energies(0.0), std::invalid_argument);
    CHECK_THROWS_AS(double_delta_energies(-2.0), std::invalid_argument);
}

TEST_CASE("double well energies satisfy the matching condition") {
    // E = -k^2/2 with k = (1/2)(s + W(+-s e^{-s})) in units where a = 1 and
    // 1/(2b) = s/2; the defining relation is k = (s/2)(1 +- e^{-2k}).
    for (double s : {1.5, 2.0, 4.0, 8.0}) {
        auto [ee, eo] = double_delta_energies(s);
        const double k_even = std::sqrt(-2.0 * ee);
        CHECK(std::abs(k_even - (s / 2.0) * (1.0 + std::exp(-2.0 * k_even))) <= 1e-10);
        const double k_odd = std::sqrt(-2.0 * *eo);
        CHECK(std::abs(k_odd - (s / 2.0) * (1.0 - std::exp(-2.0 * k_odd))) <= 1e-10);
    }
}

TEST_CASE("blackbody peak abscissa by every method") {
    const double xo = wien_x0(WienMethod::lambert_oracle);
    CHECK(xo == doctest::Approx(4.965114231744276).epsilon(1e-14));
    CHECK((5.0 - xo) * std::exp(xo) == doctest::Approx(5.0).epsilon(1e-12));

    CHECK(wien_x0(WienMethod::pade_ii) ==
          doctest::Approx(4.965114231796921).epsilon(1e-14));
    CHECK(wien_x0(WienMethod::pade_ii_rounded) ==
          doctest::Approx(4.9651216848727096).epsilon(1e-14));

    CHECK(std::abs(wien_x0(WienMethod::contour, 64) - xo) < 5e-9);
    CHECK(std::abs(wien_x0(WienMethod::contour, 128) - xo) < 1e-12);
    CHECK_THROWS_AS(wien_x0(WienMethod::contour, 8), std::invalid_argument);
}

TEST_CASE("x0 methods cross-agree at 128 contour nodes") {
    const std::vector<double> values = {
        wien_x0(WienMethod::lambert_oracle),
        wien_x0(WienMethod::pade_ii),
        wien_x0(WienMethod::contour, 128),
    };
    for (double a : values) {
        for (double b : values) {
            CHECK(std::abs(a - b) < 1e-9);
        }
    }
    CHECK(std::abs(wien_x0(WienMethod::pade_ii_rounded) - values[0]) < 1e-4);
}

TEST_CASE("displacement constant") {
    CHECK(wien_constant() == doctest::Approx(2.897771955e-3).epsilon(1e-9));
    // Linear in h.
    PhysicalConstants doubled = codata2018;
    doubled.h *= 2.0;
    CHECK(wien_constant(doubled) == doctest::Approx(2.0 * wien_constant()).epsilon(1e-14));
}

TEST_CASE("planck profile shape and peak position") {
    const double t = 5000.0;
    const double lambda_star = wien_constant() / t;
    CHECK(lambda_star == doctest::Approx(5.795543910370346e-7).epsilon(1e-12));

    // Density at the predicted peak dominates both tails.
    auto profile = planck_profile({lambda_star / 4, lambda_star, lambda_star * 4}, t);
    REQUIRE(profile.size() == 3);
    CHECK(profile[1].second > profile[0].second);
    CHECK(profile[1].second > profile[2].second);
    CHECK(profile[0].first == lambda_star / 4);

    // A fine grid around the peak localizes the argmax at the Wien value.
    std::vector<double> grid;
    for (int i = 0; i <= 200; ++i) {
        grid.push_back(lambda_star * (0.9 + 0.2 * i / 200.0));
    }
    auto fine = planck_profile(grid, t);
    size_t best = 0;
    for (size_t i = 1; i < fine.size(); ++i) {
        if (fine[i].second > fine[best].second) {
            best = i;
        }
    }
    CHECK(std::abs(fine[best].first - lambda_star) <= lambda_star * 0.2 / 200.0);

    CHECK_THROWS_AS(planck_profile({5e-7}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(planck_profile({0.0}, 5000.0), std::invalid_argument);
}
