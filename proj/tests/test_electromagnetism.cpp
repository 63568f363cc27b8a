#include <doctest.h>

#include "extalg/electromagnetism.hpp"
#include "extalg/printer.hpp"
#include "extalg/random.hpp"

using namespace extalg;

namespace {

Polynomial x(int i) { return Polynomial::variable(i); }

MaxwellConfig config(int k, int n, int r, long mass = 0, std::optional<Rational> xi = std::nullopt) {
    return MaxwellConfig{Metric(k, n), r, Rational(mass), std::move(xi), "A", "J"};
}

}  // namespace

TEST_CASE("field from potential") {
    const Metric e3(0, 3), st(1, 3);
    const MvField phi = MvField::scalar(e3, x(0) * x(1));
    CHECK(field_from_potential(phi, 1) ==
          MvField::blade(e3, IndexList{0}, x(1)) + MvField::blade(e3, IndexList{1}, x(0)));
    CHECK(field_from_potential(MvField::blade(st, IndexList{2}, 5), 2).is_zero());
    CHECK(field_from_potential(MvField::blade(st, IndexList{1}, x(0)), 2) == MvField::blade(st, IndexList{0, 1}, -1));
    CHECK_THROWS_AS(field_from_potential(phi, 2), std::domain_error);
}

TEST_CASE("Lagrangian construction") {
    CHECK(build_lagrangian(config(1, 3, 2)).to_string() == "-1/2*(d^A . d^A) + (J . A)");
    MaxwellConfig es = config(0, 3, 1);
    es.potential = "phi";
    es.source = "rho";
    CHECK(build_lagrangian(es).to_string() == "1/2*(d^phi . d^phi) + (rho . phi)");
    CHECK(build_lagrangian(config(1, 3, 2, 1, Rational(1))).to_string() ==
          "-1/2*(d^A . d^A) + (J . A) - 1/2*(A . A) - 1/2*(d_|A . d_|A)");
    CHECK_THROWS_AS(build_lagrangian(config(1, 3, 0)), std::domain_error);
    CHECK_THROWS_AS(build_lagrangian(config(1, 3, 5)), std::domain_error);
    CHECK_THROWS_AS(build_lagrangian(config(1, 3, 2, -1)), std::domain_error);
    CHECK_THROWS_AS(build_lagrangian(config(1, 3, 2, 0, Rational(0))), std::domain_error);
}

TEST_CASE("Maxwell equations for every grade, k+n <= 4") {
    for (int dim = 1; dim <= 4; ++dim)
        for (int k = 0; k <= dim; ++k)
            for (int r = 1; r <= dim; ++r)
                REQUIRE(format_equation(derive_equations(config(k, dim - k, r))) == "d_| ( d^ A ) = J");
}

TEST_CASE("Proca and R_xi equations") {
    MaxwellConfig cfg = config(1, 3, 2);
    cfg.mass = make_rational(3, 2);
    CHECK(format_equation(derive_equations(cfg)) == "d_| ( d^ A ) + 9/4 * A = J");
    cfg.xi = Rational(2);
    CHECK(format_equation(derive_equations(cfg)) == "d_| ( d^ A ) + 9/4 * A = J + 1/2 * d^ ( d_| A )");
    CHECK(format_equation(wave_form(cfg)) == "-lap A + 9/4 * A = J - 1/2 * d^ ( d_| A )");
    CHECK(format_equation(wave_form(config(1, 3, 2, 0, Rational(1)))) == "-lap A = J");
    CHECK(format_equation(wave_form(config(1, 3, 1, 0, Rational(1)))) == "lap A = J");
    CHECK_THROWS_AS(wave_form(config(1, 3, 2)), std::domain_error);
}

TEST_CASE("wave form and derived equation agree on random potentials") {
    for (int r = 1; r <= 4; ++r) {
        MaxwellConfig cfg = config(1, 3, r, 2, make_rational(3, 7));
        const FieldEquation a = derive_equations(cfg), b = wave_form(cfg);
        for (std::uint64_t t = 0; t < 10; ++t) {
            TrialRng rng = TrialRng::for_trial(53, "wave", t);
            const Bindings fields{{"A", trial_field(rng, cfg.metric, r - 1, t)},
                                  {"J", random_field(rng, cfg.metric, r - 1)}};
            REQUIRE(residual(a, fields) == residual(b, fields));
        }
    }
}

TEST_CASE("gauge transformations") {
    const Metric m(1, 3);
    for (int r = 1; r <= 4; ++r)
        for (std::uint64_t t = 0; t < 20; ++t) {
            TrialRng rng = TrialRng::for_trial(59, "gauge", t);
            const MvField A = trial_field(rng, m, r - 1, t);
            const MvField Abar = to_field(random_multivector(rng, m, r - 1));
            std::optional<MvField> G;
            if (r >= 2) G = random_field(rng, m, r - 2);
            REQUIRE(field_from_potential(gauge_transform(A, Abar, G), r) == field_from_potential(A, r));
        }
    const MvField A = MvField::blade(m, IndexList{1}, x(0));
    CHECK(gauge_transform(A, MvField(m, 1), MvField(m, 0)) == A);
    const MvField phi = MvField::scalar(m, x(2));
    CHECK(gauge_transform(phi, MvField::scalar(m, 4), std::nullopt) == phi + MvField::scalar(m, 4));
    CHECK_THROWS_AS(gauge_transform(A, MvField::blade(m, IndexList{1}, x(1)), std::nullopt), std::domain_error);
    CHECK_THROWS_AS(gauge_transform(A, MvField(m, 2), std::nullopt), std::domain_error);
    CHECK_THROWS_AS(gauge_transform(A, MvField(m, 1), MvField(m, 1)), std::domain_error);
}

TEST_CASE("homogeneous equation") {
    const Metric e3(0, 3);
    CHECK_FALSE(homogeneous_check(MvField::blade(e3, IndexList{2}, x(1))));
    CHECK(ext_deriv(MvField::blade(e3, IndexList{2}, x(1))) == MvField::blade(e3, IndexList{1, 2}, 1));
    CHECK(homogeneous_check(MvField::blade(e3, IndexList{0, 1}, 7)));
    for (std::uint64_t t = 0; t < 20; ++t) {
        TrialRng rng = TrialRng::for_trial(61, "homog", t);
        REQUIRE(homogeneous_check(field_from_potential(random_field(rng, Metric(1, 3), 1), 2)));
    }
}

TEST_CASE("dual theory") {
    const Metric m(1, 3);
    const DualEquations d = dual_theory(m, 2);
    CHECK(format_equation(d.nonhomogeneous) == "d^ ( d_| Abar ) = Jbar");
    CHECK(format_equation(d.homogeneous) == "d_| ( d_| Abar ) = 0");
    CHECK(d.homogeneous.grade == 0);
    CHECK(dual_lagrangian(m, 2).to_string() == "-1/2*(d_|Abar . d_|Abar) + (Jbar . Abar)");
    CHECK_THROWS_AS(dual_lagrangian(m, 0), std::domain_error);
    for (int s = 1; s <= 4; ++s)
        for (std::uint64_t t = 0; t < 20; ++t) {
            TrialRng rng = TrialRng::for_trial(67, "dual", t);
            const MvField Abar = trial_field(rng, m, s, t);
            REQUIRE(interior_sides_relation_holds(Abar));
            REQUIRE(int_deriv(int_deriv(Abar)).is_zero());
            REQUIRE(format_equation(dual_theory(m, s).nonhomogeneous) == "d^ ( d_| Abar ) = Jbar");
        }
    CHECK(lorenz_gauge_holds(ext_deriv(MvField::blade(m, IndexList{1}, x(2)))));
    CHECK_FALSE(lorenz_gauge_holds(MvField::blade(m, IndexList{1}, x(2))));
}

TEST_CASE("polarization counts") {
    CHECK(polarization_count(1, 3, 2) == 2);
    CHECK(polarization_count(1, 3, 1) == 1);
    CHECK(polarization_count(2, 2, 2) == 2);
    CHECK(polarization_count(1, 9, 3) == 28);
    CHECK_THROWS_AS(polarization_count(0, 3, 1), std::domain_error);
    CHECK_THROWS_AS(polarization_count(1, 0, 1), std::domain_error);
    CHECK_THROWS_AS(polarization_count(1, 3, 0), std::domain_error);
    CHECK_THROWS_AS(polarization_count(1, 3, 5), std::domain_error);
}
