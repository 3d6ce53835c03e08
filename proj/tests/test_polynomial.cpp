#include <doctest.h>

#include "pcalg/lie_algebra.hpp"
#include "pcalg/polynomial.hpp"

#include <random>

using namespace pcalg;

namespace {

Polynomial random_poly(std::mt19937_64& rng, size_t dim, int maxdeg, int nterms) {
    std::uniform_int_distribution<int> exp(0, maxdeg);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> var(0, static_cast<int>(dim) - 1);
    Polynomial p(dim);
    for (int t = 0; t < nterms; ++t) {
        Monomial m(dim);
        int d = exp(rng);
        for (int k = 0; k < d; ++k) m.exps[var(rng)] += 1;
        p.add_term(m, Scalar(coeff(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("product and zero behavior") {
    Polynomial x1 = Polynomial::coordinate(3, 0);
    Polynomial x2 = Polynomial::coordinate(3, 1);
    Polynomial x1x2 = Polynomial::monomial(3, {0, 1});
    CHECK(x1 * x2 == x1x2);
    CHECK((x1 * Polynomial(3)).is_zero());
    CHECK((x1 - x2) * (x1 + x2) == x1 * x1 - x2 * x2);
    CHECK_THROWS_AS(x1 * Polynomial::coordinate(4, 0), poly_error);
}

TEST_CASE("partial derivative examples") {
    // d(x1^2 x2)/dx1 = 2 x1 x2
    Polynomial p = Polynomial::monomial(3, {0, 0, 1});
    CHECK(p.partial(0) == Polynomial::monomial(3, {0, 1}, Scalar(2)));
    CHECK(Polynomial::coordinate(3, 1).partial(0).is_zero());
    CHECK_THROWS_AS(p.partial(7), poly_error);

    // d(h1^2 + h2^2 + h1 h2)/dh1 = 2 h1 + h2, hand-derived from the
    // quadratic sl(3) invariant
    Polynomial q = Polynomial::monomial(2, {0, 0}) + Polynomial::monomial(2, {1, 1}) +
                   Polynomial::monomial(2, {0, 1});
    Polynomial expected = Polynomial::coordinate(2, 0, Scalar(2)) + Polynomial::coordinate(2, 1);
    CHECK(q.partial(0) == expected);
}

TEST_CASE("homogeneous components") {
    Polynomial p = Polynomial::coordinate(2, 0) + Polynomial::monomial(2, {0, 1});
    CHECK(p.homogeneous_component(2) == Polynomial::monomial(2, {0, 1}));
    CHECK(p.homogeneous_component(5).is_zero());
    CHECK(Polynomial(2).homogeneous_component(3).is_zero());

    // re-summing the split reproduces p
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        Polynomial q = random_poly(rng, 4, 5, 8);
        Polynomial sum(4);
        for (int k = 0; k <= q.degree(); ++k) sum += q.homogeneous_component(k);
        CHECK(sum == q);
    }
}

TEST_CASE("ring axioms and Leibniz on random polynomials") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 120; ++i) {
        Polynomial p = random_poly(rng, 4, 3, 5);
        Polynomial q = random_poly(rng, 4, 3, 5);
        Polynomial r = random_poly(rng, 4, 3, 5);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        for (size_t v = 0; v < 4; ++v)
            CHECK((p * q).partial(v) == p.partial(v) * q + p * q.partial(v));
        if (!p.is_zero() && !q.is_zero())
            CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("graded-lex term order is total and leading-first") {
    Polynomial p = Polynomial::coordinate(2, 1) + Polynomial::monomial(2, {0, 0}) +
                   Polynomial::coordinate(2, 0);
    // leading term is x1^2, then x1, then x2
    auto it = p.terms().begin();
    CHECK(it->first.exps == std::vector<uint16_t>{2, 0});
    ++it;
    CHECK(it->first.exps == std::vector<uint16_t>{1, 0});
    ++it;
    CHECK(it->first.exps == std::vector<uint16_t>{0, 1});
}

TEST_CASE("polynomial json round trip") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        Polynomial p = random_poly(rng, 5, 4, 6);
        Polynomial back = polynomial_from_json_text(polynomial_to_json_text(p), 5);
        CHECK(back == p);
    }
}

TEST_CASE("polynomial printing") {
    Polynomial p = Polynomial::monomial(2, {0, 0}) - Polynomial::coordinate(2, 1, Scalar::sqrt2());
    CHECK(p.str({"u", "v"}) == "u^2 - 1*r2*v");
    CHECK(Polynomial(2).str({"u", "v"}) == "0");
}
