#include <doctest.h>

#include "pcalg/scalar.hpp"

#include <random>
#include <vector>

using namespace pcalg;

namespace {

Scalar random_scalar(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 5);
    for (;;) {
        Scalar s(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                 Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        if (!nonzero || !s.is_zero()) return s;
    }
}

// independent 4x4 rational solve of the multiplication-by-x matrix, used as
// the oracle for inverse(): x * v = 1 with v = (a,b,c,d) unknowns
Scalar oracle_inverse(const Scalar& x) {
    // columns of the matrix: x * basis element
    Scalar cols[4] = {x * Scalar(1), x * Scalar::sqrt2(), x * Scalar::sqrt3(), x * Scalar::sqrt6()};
    Rational m[4][5];
    for (int j = 0; j < 4; ++j) {
        m[0][j] = cols[j].ra();
        m[1][j] = cols[j].rb();
        m[2][j] = cols[j].rc();
        m[3][j] = cols[j].rd();
    }
    for (int i = 0; i < 4; ++i) m[i][4] = (i == 0) ? 1 : 0;
    // plain Gaussian elimination with partial pivot-by-first-nonzero
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        REQUIRE(pivot >= 0);
        for (int c = 0; c < 5; ++c) std::swap(m[col][c], m[pivot][c]);
        Rational inv = 1 / m[col][col];
        for (int c = 0; c < 5; ++c) m[col][c] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = 0; c < 5; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return Scalar(m[0][4], m[1][4], m[2][4], m[3][4]);
}

} // namespace

TEST_CASE("scalar addition examples") {
    Scalar one_plus = Scalar(1) + Scalar::sqrt2();
    Scalar one_minus = Scalar(1) - Scalar::sqrt2();
    CHECK(one_plus + one_minus == Scalar(2));

    Scalar x = Scalar::parse("5/7+2*r3");
    CHECK(Scalar(0) + x == x);

    // 3*sqrt3/4 doubled, oracle is componentwise fraction addition
    Rational expected = Rational(3, 4) + Rational(3, 4);
    Scalar doubled = Scalar::parse("3/4*r3") + Scalar::parse("3/4*r3");
    CHECK(doubled == Scalar(Rational(0), Rational(0), expected, Rational(0)));
    CHECK(doubled.str() == "3/2*r3");
}

TEST_CASE("scalar multiplication examples") {
    CHECK(Scalar::sqrt2() * Scalar::sqrt3() == Scalar::sqrt6());
    CHECK((Scalar(1) + Scalar::sqrt2()) * (Scalar(1) - Scalar::sqrt2()) == Scalar(-1));
    // sqrt(3/2) is represented as sqrt6/2
    Scalar sqrt32 = Scalar::parse("1/2*r6");
    CHECK(sqrt32 * sqrt32 == Scalar::parse("3/2"));
}

TEST_CASE("scalar inverse examples") {
    CHECK(Scalar(2).inverse() == Scalar::parse("1/2"));
    CHECK(Scalar::sqrt2().inverse() == Scalar::parse("1/2*r2"));
    CHECK_THROWS_AS(Scalar(0).inverse(), scalar_error);

    Scalar x = Scalar(1) + Scalar::sqrt2() + Scalar::sqrt3();
    Scalar v = oracle_inverse(x);
    CHECK(x.inverse() == v);
    CHECK(x * v == Scalar(1));
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 1000; ++i) {
        Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
    }
    for (int i = 0; i < 200; ++i) {
        Scalar x = random_scalar(rng, true), y = random_scalar(rng, true);
        CHECK(x * x.inverse() == Scalar(1));
        CHECK((x * y).inverse() == x.inverse() * y.inverse());
    }
}

TEST_CASE("scalar string round trip") {
    std::vector<const char*> canonical = {"0",       "1",          "-3/4*r3",       "1+1*r2",
                                          "-36*r2",  "2-1/2*r6",   "1/2+3*r2-5/7*r3+2*r6",
                                          "-1/32*r6"};
    for (const char* s : canonical) {
        Scalar v = Scalar::parse(s);
        CHECK(v.str() == s);
        CHECK(Scalar::parse(v.str()) == v);
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Scalar x = random_scalar(rng);
        CHECK(Scalar::parse(x.str()) == x);
        CHECK(Scalar::parse(x.str()).str() == x.str());
    }
    CHECK_THROWS_AS(Scalar::parse(""), scalar_error);
    CHECK_THROWS_AS(Scalar::parse("1/0"), scalar_error);
    CHECK_THROWS_AS(Scalar::parse("2*r5"), scalar_error);
}
