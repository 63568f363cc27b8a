#include <doctest.h>

#include "extalg/matrix.hpp"
#include "extalg/random.hpp"

using namespace extalg;

namespace {

RationalMatrix w(const Metric& m, std::initializer_list<int> I, std::initializer_list<int> J, long c = 1) {
    return RationalMatrix::basis(m, IndexList(I), IndexList(J), Rational(c));
}

}  // namespace

TEST_CASE("matrix dot examples") {
    const Metric m(1, 3);
    CHECK(mat_dot(w(m, {0}, {1}), w(m, {0}, {1})) == -1);
    CHECK(mat_dot(w(m, {1}, {2}), w(m, {2}, {1})) == 0);
    CHECK(mat_dot(identity_matrix(Metric(0, 3), 1), identity_matrix(Metric(0, 3), 1)) == 3);
    CHECK_THROWS_AS(mat_dot(w(m, {0}, {1}), w(m, {0}, {1, 2})), std::domain_error);
}

TEST_CASE("matrix product examples") {
    const Metric m(1, 3);
    CHECK(mat_mul(w(m, {0}, {1}), w(m, {1}, {2})) == w(m, {0}, {2}));  // Delta_11 = 1
    CHECK(mat_mul(w(m, {1}, {0}), w(m, {0}, {2})) == w(m, {1}, {2}, -1));
    CHECK(mat_mul(w(m, {0}, {1}), w(m, {2}, {0})).is_zero());
    CHECK_THROWS_AS(mat_mul(w(m, {0}, {1}), w(m, {1, 2}, {0})), std::domain_error);
    for (std::uint64_t t = 0; t < 50; ++t) {
        TrialRng rng = TrialRng::for_trial(3, "identity", t);
        const Metric mk(static_cast<int>(rng.uniform(0, 2)), static_cast<int>(rng.uniform(1, 4 - 0)));
        if (mk.dim() > 4) continue;
        const int l = static_cast<int>(rng.uniform(0, std::min(2, mk.dim())));
        const int h = static_cast<int>(rng.uniform(0, mk.dim()));
        const auto A = random_matrix(rng, mk, l, h);
        REQUIRE(mat_mul(identity_matrix(mk, l), A) == A);
        REQUIRE(mat_mul(A, identity_matrix(mk, h)) == A);
    }
}

TEST_CASE("matrix-vector products") {
    const Metric m(1, 3);
    const auto e1 = RationalMultivector::blade(m, IndexList{1});
    const auto e2 = RationalMultivector::blade(m, IndexList{2});
    CHECK(mat_vec(w(m, {0}, {1}), e1) == RationalMultivector::blade(m, IndexList{0}));
    CHECK(mat_vec(identity_matrix(m, 1), e2) == e2);
    CHECK(mat_vec(w(m, {0}, {1}), e2).is_zero());
    CHECK(mat_vec(w(m, {1}, {0}), RationalMultivector::blade(m, IndexList{0})) == -e1);
    CHECK(vec_mat(e1, w(m, {1}, {0})) == RationalMultivector::blade(m, IndexList{0}));
    CHECK_THROWS_AS(mat_vec(w(m, {0}, {1}), RationalMultivector::blade(m, IndexList{1, 2})), std::domain_error);
    for (std::uint64_t t = 0; t < 50; ++t) {
        TrialRng rng = TrialRng::for_trial(5, "transpose", t);
        const auto A = random_matrix(rng, m, 2, 1);
        const auto v = random_multivector(rng, m, 1);
        REQUIRE(mat_vec(A, v) == vec_mat(v, transpose(A)));
    }
}

TEST_CASE("transpose") {
    const Metric m(1, 3);
    CHECK(transpose(w(m, {0}, {1})) == w(m, {1}, {0}));
    CHECK(transpose(transpose(w(m, {0}, {1, 2}, 3))) == w(m, {0}, {1, 2}, 3));
    CHECK(transpose(identity_matrix(m, 2)) == identity_matrix(m, 2));
    CHECK(identity_matrix(m, 1).coefficient(IndexList{0}, IndexList{0}) == -1);
}
