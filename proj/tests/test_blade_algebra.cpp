#include <doctest.h>

#include "extalg/multivector.hpp"
#include "extalg/printer.hpp"
#include "extalg/random.hpp"
#include "oracles.hpp"

using namespace extalg;

namespace {

RationalMultivector e(const Metric& m, std::initializer_list<int> I, long c = 1) {
    return RationalMultivector::blade(m, IndexList(I), Rational(c));
}

std::vector<Metric> metrics_up_to(int max_dim) {
    std::vector<Metric> out;
    for (int dim = 1; dim <= max_dim; ++dim)
        for (int k = 0; k <= dim; ++k) out.emplace_back(k, dim - k);
    return out;
}

}  // namespace

TEST_CASE("metric construction") {
    CHECK(Metric(1, 3).dim() == 4);
    CHECK(Metric(1, 3).delta(0) == Sign::minus());
    CHECK(Metric(1, 3).delta(1) == Sign::plus());
    CHECK(Metric(2, 2).delta(IndexList{0, 1, 2}) == Sign::plus());
    CHECK_THROWS_AS(Metric(0, 0), std::domain_error);
    CHECK_THROWS_AS(Metric(-1, 3), std::domain_error);
    CHECK_THROWS_AS(Metric(10, 7), std::domain_error);
}

TEST_CASE("dot product examples") {
    const Metric m(1, 3);
    CHECK(dot(e(m, {0}), e(m, {0})) == -1);
    CHECK(dot(e(m, {0, 1}), e(m, {0, 1})) == -1);
    CHECK(dot(e(m, {}), e(m, {})) == 1);
    CHECK(dot(e(m, {1}), e(m, {2})) == 0);
    CHECK_THROWS_AS(dot(e(m, {1}), e(m, {1, 2})), std::domain_error);
    CHECK_THROWS_AS(dot(e(m, {1}), e(Metric(0, 4), {1})), std::domain_error);
}

TEST_CASE("wedge examples") {
    const Metric m(0, 3);
    CHECK(wedge(e(m, {1}), e(m, {2})) == e(m, {1, 2}));
    CHECK(wedge(e(m, {2}), e(m, {1})) == e(m, {1, 2}, -1));
    CHECK(wedge(e(m, {1}), e(m, {1})).is_zero());
    CHECK(wedge(e(m, {1}), e(m, {1})).grade() == 2);
    CHECK(wedge(e(m, {}), e(m, {0, 2})) == e(m, {0, 2}));
    CHECK(wedge(e(m, {0, 1}), e(m, {1, 2})).grade() == 4);  // beyond k+n, zero
}

TEST_CASE("contraction examples") {
    const Metric m(1, 3);
    CHECK(left_contract(e(m, {1}), e(m, {1, 2})) == e(m, {2}, -1));
    CHECK(left_contract(e(m, {3}), e(m, {1, 2})).is_zero());
    CHECK(left_contract(e(m, {}), e(m, {0, 3})) == e(m, {0, 3}));
    CHECK(right_contract(e(m, {1, 2}), e(m, {1})) == e(m, {2}));
    CHECK(right_contract(e(m, {0, 3}), e(m, {})) == e(m, {0, 3}));
    CHECK(right_contract(e(m, {1, 2}), e(m, {1, 2})) == RationalMultivector::scalar(m, dot(e(m, {1, 2}), e(m, {1, 2}))));
    CHECK(left_contract(e(m, {0}), e(m, {0, 1})) == e(m, {1}));  // Delta_00 sigma((1),(0)) = (-1)(-1)
    CHECK(left_contract(e(m, {1, 2}), e(m, {1})).is_zero());
}

TEST_CASE("hodge examples") {
    const Metric m(1, 3);
    CHECK(hodge(e(m, {0})) == e(m, {1, 2, 3}, -1));
    CHECK(hodge(e(m, {})) == e(m, {0, 1, 2, 3}));
    CHECK(grade(e(m, {1, 2})) == 2);
    CHECK(grade(e(m, {})) == 0);
    CHECK(grade(e(m, {0, 1, 2})) == 3);
    for (int dim = 1; dim <= 6; ++dim)
        for (int k = 0; k <= dim; ++k) {
            const Metric mk(k, dim - k);
            for (const auto& I : all_index_lists(dim)) {
                const auto blade = RationalMultivector::blade(mk, I);
                REQUIRE(inv_hodge(hodge(blade)) == blade);
            }
        }
}

TEST_CASE("blade products match their definitions, k+n <= 5") {
    for (const auto& m : metrics_up_to(5)) {
        const auto blades = all_index_lists(m.dim());
        for (const auto& I : blades) {
            const auto a = RationalMultivector::blade(m, I);
            REQUIRE(hodge(a) == oracle::hodge_blade(m, I));
            REQUIRE(inv_hodge(a) == oracle::inv_hodge_blade(m, I));
            for (const auto& J : blades) {
                const auto b = RationalMultivector::blade(m, J);
                REQUIRE(wedge(a, b) == oracle::wedge_blades(m, I, J));
                REQUIRE(left_contract(a, b) == oracle::left_blades(m, I, J));
                REQUIRE(right_contract(b, a) == oracle::right_blades(m, J, I));
                if (I.size() == J.size()) REQUIRE(dot(a, b) == (I == J ? m.delta(I).value() : 0));
            }
        }
    }
}

TEST_CASE("duality identities over all blade pairs, k+n <= 5") {
    long pairs = 0;
    for (const auto& m : metrics_up_to(5)) {
        const auto blades = all_index_lists(m.dim());
        for (const auto& I : blades)
            for (const auto& J : blades) {
                const auto a = RationalMultivector::blade(m, I), b = RationalMultivector::blade(m, J);
                if (I.size() > J.size()) continue;
                REQUIRE(left_contract(a, b) == inv_hodge(wedge(a, hodge(b))));
                REQUIRE(right_contract(b, a) == hodge(wedge(inv_hodge(b), a)));
                ++pairs;
            }
    }
    CHECK(pairs > 0);
}

TEST_CASE("equal-grade contractions collapse to the dot product, k+n <= 5") {
    for (const auto& m : metrics_up_to(5)) {
        const auto blades = all_index_lists(m.dim());
        for (const auto& I : blades)
            for (const auto& J : blades) {
                if (I.size() != J.size()) continue;
                const auto a = RationalMultivector::blade(m, I), b = RationalMultivector::blade(m, J);
                const auto d = RationalMultivector::scalar(m, dot(a, b));
                REQUIRE(left_contract(a, b) == d);
                REQUIRE(right_contract(b, a) == d);
            }
    }
}

TEST_CASE("wedge is graded commutative (k+n <= 5) and associative (k+n <= 4)") {
    for (const auto& m : metrics_up_to(5)) {
        const auto blades = all_index_lists(m.dim());
        for (const auto& I : blades)
            for (const auto& J : blades) {
                const auto a = RationalMultivector::blade(m, I), b = RationalMultivector::blade(m, J);
                const bool odd = (I.size() * J.size()) % 2 == 1;
                REQUIRE(wedge(a, b) == (odd ? -wedge(b, a) : wedge(b, a)));
            }
    }
    for (const auto& m : metrics_up_to(4)) {
        const auto blades = all_index_lists(m.dim());
        for (const auto& I : blades)
            for (const auto& J : blades)
                for (const auto& K : blades) {
                    const auto a = RationalMultivector::blade(m, I), b = RationalMultivector::blade(m, J),
                               c = RationalMultivector::blade(m, K);
                    REQUIRE(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
                }
    }
}

TEST_CASE("products are bilinear on random multivectors") {
    for (std::uint64_t t = 0; t < 200; ++t) {
        TrialRng rng = TrialRng::for_trial(7, "bilinear", t);
        const Metric m(static_cast<int>(rng.uniform(0, 2)), static_cast<int>(rng.uniform(1, 3)));
        const int g = static_cast<int>(rng.uniform(0, m.dim())), h = static_cast<int>(rng.uniform(0, m.dim()));
        const Rational c = make_rational(rng.uniform(-7, 7), rng.uniform(1, 4));
        const auto a1 = random_multivector(rng, m, g), a2 = random_multivector(rng, m, g);
        const auto b = random_multivector(rng, m, h);
        const auto a = a1.scaled(c) + a2;
        REQUIRE(wedge(a, b) == wedge(a1, b).scaled(c) + wedge(a2, b));
        REQUIRE(wedge(b, a) == wedge(b, a1).scaled(c) + wedge(b, a2));
        REQUIRE(left_contract(a, b) == left_contract(a1, b).scaled(c) + left_contract(a2, b));
        REQUIRE(left_contract(b, a) == left_contract(b, a1).scaled(c) + left_contract(b, a2));
        REQUIRE(right_contract(b, a) == right_contract(b, a1).scaled(c) + right_contract(b, a2));
        REQUIRE(dot(a, a2) == c * dot(a1, a2) + dot(a2, a2));
        REQUIRE(hodge(a) == hodge(a1).scaled(c) + hodge(a2));
    }
}

TEST_CASE("multivector invariants") {
    const Metric m(0, 3);
    RationalMultivector v(m, 1);
    CHECK_THROWS_AS(v.add_term(IndexList{0, 1}, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(v.add_term(IndexList{3}, Rational(1)), std::domain_error);
    v.add_term(IndexList{1}, Rational(2));
    v.add_term(IndexList{1}, Rational(-2));
    CHECK(v.is_zero());
    CHECK(v.terms().empty());
    CHECK_THROWS_AS(e(m, {1}) + e(m, {1, 2}), std::domain_error);
    CHECK(format_multivector(e(m, {0}, 2) - e(m, {2})) == "2*e[0] - e[2]");
}
