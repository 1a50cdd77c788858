#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "transroots/trig_roots.hpp"

using namespace transroots;

namespace {

const double kPi = std::acos(-1.0);

std::vector<Rational> q_list(std::vector<const char*> strs) {
    std::vector<Rational> out;
    out.reserve(strs.size());
    for (const char* s : strs) {
        out.push_back(Rational::from_string(s));
    }
    return out;
}

}  // namespace

TEST_CASE("pole-free residual vanishes exactly at roots and nowhere nearby") {
    TrigEquation tan1{TrigKind::tan_eq, 1.0};
    // tan x = x has the trivial root at zero.
    CHECK(equation_residual(tan1, 0.0) == 0.0);
    CHECK(equation_residual(tan1, 1.0) != 0.0);
    // The residual stays finite at the tangent poles.
    CHECK(std::isfinite(equation_residual(tan1, kPi / 2)));
    TrigEquation cot1{TrigKind::cot_eq, 1.0};
    CHECK(equation_residual(cot1, 0.0) == 1.0);
}

TEST_CASE("branch asymptotes") {
    CHECK(branch_asymptote(TrigKind::tan_eq, 0) == doctest::Approx(kPi / 2));
    CHECK(branch_asymptote(TrigKind::tan_eq, 3) == doctest::Approx(3.5 * kPi));
    CHECK(branch_asymptote(TrigKind::cot_eq, 2) == doctest::Approx(2 * kPi));
}

TEST_CASE("ratio series coefficients for small integer slopes") {
    struct Row {
        TrigKind kind;
        long kappa;
        std::vector<const char*> coeffs;
    };
    const std::vector<Row> rows = {
        {TrigKind::tan_eq, 1, {"1", "0", "-1", "0", "-2/3", "0", "-13/15", "0", "-146/105"}},
        {TrigKind::cot_eq, 1, {"1", "0", "1", "0", "-4/3", "0", "53/15", "0", "-1226/105"}},
        {TrigKind::tan_eq, 2, {"1", "0", "-1/2", "0", "-5/24", "0", "-83/480", "0", "-2407/13440"}},
        {TrigKind::cot_eq, 2, {"1", "0", "1/2", "0", "-7/24", "0", "163/480", "0", "-6637/13440"}},
        {TrigKind::tan_eq, 3, {"1", "0", "-1/3", "0", "-8/81", "0", "-71/1215", "0", "-1102/25515"}},
        {TrigKind::cot_eq, 3, {"1", "0", "1/3", "0", "-10/81", "0", "37/405", "0", "-6466/76545"}},
    };
    for (const Row& row : rows) {
        TaylorSeries phi = root_ratio_series(row.kind, Rational(row.kappa), 8);
        CHECK(phi.coeffs() == q_list(row.coeffs));
    }
}

TEST_CASE("ratio series input validation") {
    CHECK_THROWS_AS(root_ratio_series(TrigKind::tan_eq, Rational(0), 8), std::domain_error);
    CHECK_THROWS_AS(root_ratio_series(TrigKind::tan_eq, Rational(1), 3), std::invalid_argument);
}

TEST_CASE("closed-form roots agree with the published kappa=1 expressions") {
    for (int n = 1; n <= 6; ++n) {
        const double a = (n + 0.5) * kPi;
        const double tan_expected = a * (3 * a * a - 5) / (3 * a * a - 2);
        const double got_tan = root_closed_form(TrigEquation{TrigKind::tan_eq, 1.0}, n).value;
        CHECK(got_tan == doctest::Approx(tan_expected).epsilon(1e-14));

        const double b = n * kPi;
        const double cot_expected = b * (3 * b * b + 7) / (3 * b * b + 4);
        const double got_cot = root_closed_form(TrigEquation{TrigKind::cot_eq, 1.0}, n).value;
        CHECK(got_cot == doctest::Approx(cot_expected).epsilon(1e-14));
    }
}

TEST_CASE("closed-form root reference values") {
    CHECK(root_closed_form(TrigEquation{TrigKind::tan_eq, 1.0}, 1).value ==
          doctest::Approx(4.493614542179301).epsilon(1e-15));
    CHECK(root_closed_form(TrigEquation{TrigKind::cot_eq, 1.0}, 1).value ==
          doctest::Approx(3.422018442616254).epsilon(1e-15));
    CHECK(root_closed_form(TrigEquation{TrigKind::tan_eq, 1.0}, 0).value == 0.0);
}

TEST_CASE("closed-form root input validation") {
    CHECK_THROWS_AS(root_closed_form(TrigEquation{TrigKind::tan_eq, 1.0}, -1),
                    std::invalid_argument);
    CHECK_THROWS_AS(root_closed_form(TrigEquation{TrigKind::cot_eq, 1.0}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(root_closed_form(TrigEquation{TrigKind::tan_eq, -1.0}, 1),
                    std::domain_error);
    CHECK_THROWS_AS(root_closed_form(TrigEquation{TrigKind::tan_eq, 0.0}, 1),
                    std::domain_error);
}

TEST_CASE("first cot root closed form across the slope range") {
    // kappa = 0 degenerates to cos x = 0.
    CHECK(first_root_cot_closed(0.0).value == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(first_root_cot_closed(1.0).value ==
          doctest::Approx(0.8603663953848656).epsilon(1e-15));
    CHECK(first_root_cot_closed(1e6).value ==
          doctest::Approx(0.000999999833333364).epsilon(1e-12));
    CHECK_THROWS_AS(first_root_cot_closed(-1.0), std::domain_error);

    // Whatever form is selected, it must track the bisection root closely
    // over ten decades.
    for (double kappa = 1e-5; kappa <= 1e5; kappa *= 10) {
        const double exact = root_oracle(TrigEquation{TrigKind::cot_eq, kappa}, 0).value;
        const double closed = first_root_cot_closed(kappa).value;
        CHECK(std::abs(closed - exact) / exact < 2e-3);
    }
}

TEST_CASE("arccotangent closed forms at unit slope") {
    TrigEquation tan1{TrigKind::tan_eq, 1.0};
    TrigEquation cot1{TrigKind::cot_eq, 1.0};
    for (int n = 1; n <= 4; ++n) {
        const double a = (n + 0.5) * kPi;
        const double tan_expected = a - (1 + 1 / (a * a)) * std::atan(1 / a);
        CHECK(root_frankel(tan1, n).value == doctest::Approx(tan_expected).epsilon(1e-15));
        const double b = n * kPi;
        const double cot_expected = b + (1 + b * b) / (2 + b * b) * std::atan(1 / b);
        CHECK(root_frankel(cot1, n).value == doctest::Approx(cot_expected).epsilon(1e-15));
    }
    CHECK_THROWS_AS(root_frankel(TrigEquation{TrigKind::tan_eq, 2.0}, 1), std::domain_error);
    CHECK_THROWS_AS(root_frankel(tan1, 0), std::invalid_argument);
}

TEST_CASE("truncated asymptotic roots") {
    TrigEquation tan2{TrigKind::tan_eq, 2.0};
    const double a = 1.5 * kPi;
    const double expected = a * (1 - 1 / (2 * a * a) - 5.0 / 24.0 / (a * a * a * a));
    CHECK(root_taylor(tan2, 1).value == doctest::Approx(expected).epsilon(1e-14));
    CHECK(root_taylor(TrigEquation{TrigKind::tan_eq, 1.0}, 0).value == 0.0);
    CHECK_THROWS_AS(root_taylor(TrigEquation{TrigKind::cot_eq, 1.0}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(root_taylor(TrigEquation{TrigKind::tan_eq, -1.0}, 1), std::domain_error);
}

TEST_CASE("bisection oracle reference roots") {
    TrigEquation tan1{TrigKind::tan_eq, 1.0};
    CHECK(root_oracle(tan1, 1).value == doctest::Approx(4.493409457909064).epsilon(1e-15));
    CHECK(root_oracle(tan1, 2).value == doctest::Approx(7.725251836937707).epsilon(1e-15));
    CHECK(root_oracle(tan1, 3).value == doctest::Approx(10.904121659428899).epsilon(1e-15));
    CHECK(root_oracle(tan1, 10).value == doctest::Approx(32.956389039822476).epsilon(1e-15));

    TrigEquation cot1{TrigKind::cot_eq, 1.0};
    CHECK(root_oracle(cot1, 0).value == doctest::Approx(0.8603335890193797).epsilon(1e-15));
    CHECK(root_oracle(cot1, 1).value == doctest::Approx(3.4256184594817283).epsilon(1e-15));
    CHECK(root_oracle(cot1, 2).value == doctest::Approx(6.437298179171947).epsilon(1e-15));
    CHECK(root_oracle(cot1, 10).value == doctest::Approx(31.447714637546234).epsilon(1e-15));
}

TEST_CASE("bisection oracle covers zero and negative slopes") {
    CHECK(root_oracle(TrigEquation{TrigKind::tan_eq, 1.0}, 0).value == 0.0);
    CHECK(root_oracle(TrigEquation{TrigKind::tan_eq, 0.0}, 2).value ==
          doctest::Approx(2 * kPi).epsilon(1e-15));
    CHECK(root_oracle(TrigEquation{TrigKind::cot_eq, 0.0}, 1).value ==
          doctest::Approx(1.5 * kPi).epsilon(1e-15));
    CHECK(root_oracle(TrigEquation{TrigKind::tan_eq, -0.5}, 1).value ==
          doctest::Approx(2.2889297281034042).epsilon(1e-15));
    CHECK(root_oracle(TrigEquation{TrigKind::tan_eq, -1.0}, 1).value ==
          doctest::Approx(2.028757838110434).epsilon(1e-15));
    CHECK(root_oracle(TrigEquation{TrigKind::tan_eq, -2.0}, 1).value ==
          doctest::Approx(1.8365972031521256).epsilon(1e-15));
    CHECK_THROWS_AS(root_oracle(TrigEquation{TrigKind::cot_eq, -1.0}, 1), std::domain_error);
    CHECK_THROWS_AS(root_oracle(TrigEquation{TrigKind::tan_eq, 1.0}, -1),
                    std::invalid_argument);
}

TEST_CASE("oracle roots satisfy brackets and residuals across slopes") {
    for (double kappa : {0.5, 1.0, 2.0}) {
        for (TrigKind kind : {TrigKind::tan_eq, TrigKind::cot_eq}) {
            TrigEquation eq{kind, kappa};
            for (int n = 1; n <= 10; ++n) {
                const double x = root_oracle(eq, n).value;
                CHECK(x > n * kPi);
                CHECK(x < (n + 0.5) * kPi);
                CHECK(std::abs(equation_residual(eq, x)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("error table rows and asymptotics") {
    TrigEquation tan1{TrigKind::tan_eq, 1.0};
    std::vector<ErrorTableRow> rows = error_table(tan1, 10);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].n == 1);
    CHECK(rows[0].exact == doctest::Approx(4.493409457909064).epsilon(1e-15));
    CHECK(rows[0].ratio == doctest::Approx(4.493409457909064 / kPi).epsilon(1e-15));
    CHECK(rows[0].err_frankel.has_value());
    for (size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::abs(rows[i].err_pade) < std::abs(rows[i - 1].err_pade));
        CHECK(std::abs(rows[i].err_taylor) < std::abs(rows[i - 1].err_taylor));
    }

    // Away from kappa = 1 the arccot column has no defined counterpart.
    std::vector<ErrorTableRow> rows2 = error_table(TrigEquation{TrigKind::tan_eq, 2.0}, 3);
    CHECK_FALSE(rows2[0].err_frankel.has_value());

    TrigEquation cot1{TrigKind::cot_eq, 1.0};
    std::vector<ErrorTableRow> cot_rows = error_table(cot1, 10);
    CHECK(cot_rows[0].ratio == doctest::Approx(3.4256184594817283 / kPi).epsilon(1e-15));

    CHECK_THROWS_AS(error_table(tan1, 0), std::invalid_argument);
    CHECK_THROWS_AS(error_table(TrigEquation{TrigKind::tan_eq, -1.0}, 3), std::domain_error);
}

TEST_CASE("root ratios approach the asymptote index") {
    TrigEquation tan1{TrigKind::tan_eq, 1.0};
    TrigEquation cot1{TrigKind::cot_eq, 1.0};
    const double tan_ratio = root_oracle(tan1, 100).value / (100.5 * kPi);
    const double cot_ratio = root_oracle(cot1, 100).value / (100 * kPi);
    CHECK(tan_ratio == doctest::Approx(0.9999899683808563).epsilon(1e-12));
    CHECK(cot_ratio == doctest::Approx(1.0000101319814882).epsilon(1e-12));
    CHECK(tan_ratio < 1.0);
    CHECK(cot_ratio > 1.0);
    CHECK(std::abs(tan_ratio - 1.0) < 1e-4);
    CHECK(std::abs(cot_ratio - 1.0) < 1e-4);
}

TEST_CASE("closed forms sit on the correct side of the oracle") {
    // Unit-slope approximants overshoot tan roots and undershoot cot roots.
    TrigEquation tan1{TrigKind::tan_eq, 1.0};
    TrigEquation cot1{TrigKind::cot_eq, 1.0};
    for (int n = 1; n <= 10; ++n) {
        CHECK(root_closed_form(tan1, n).value > root_oracle(tan1, n).value);
        CHECK(root_closed_form(cot1, n).value < root_oracle(cot1, n).value);
    }
}
