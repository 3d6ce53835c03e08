#ifndef PCALG_SCALAR_HPP
#define PCALG_SCALAR_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace pcalg {

using Rational = mpq_class;

struct scalar_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of Q(sqrt2, sqrt3): a + b*sqrt2 + c*sqrt3 + d*sqrt6.
// Every structure constant and polynomial coefficient in the engine lives here.
// Components are canonical GMP rationals, so equality is plain componentwise
// equality and zero has the unique representation (0,0,0,0).
class Scalar {
  public:
    Scalar() : a_(0), b_(0), c_(0), d_(0) {}
    Scalar(long v) : a_(v), b_(0), c_(0), d_(0) {}       // NOLINT(google-explicit-constructor)
    Scalar(Rational v) : a_(std::move(v)), b_(0), c_(0), d_(0) { canon(); }  // NOLINT
    Scalar(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        canon();
    }

    static Scalar rational(long num, long den);
    static Scalar sqrt2() { return Scalar(Rational(0), Rational(1), Rational(0), Rational(0)); }
    static Scalar sqrt3() { return Scalar(Rational(0), Rational(0), Rational(1), Rational(0)); }
    static Scalar sqrt6() { return Scalar(Rational(0), Rational(0), Rational(0), Rational(1)); }

    const Rational& ra() const { return a_; }
    const Rational& rb() const { return b_; }
    const Rational& rc() const { return c_; }
    const Rational& rd() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_one() const { return a_ == 1 && is_rational(); }

    Scalar operator-() const { return Scalar(-a_, -b_, -c_, -d_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // Exact multiplicative inverse via the conjugate tower
    // x * s2(x) in Q(sqrt3), times its sqrt3-conjugate in Q.
    // Throws scalar_error on zero.
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    // Canonical form per the scalar grammar: terms in the order
    // 1, r2, r3, r6; zero terms omitted; "0" for zero; no spaces.
    std::string str() const;

    // Parses the grammar  rat := ['-'] digits ['/' digits];
    // term := rat ['*' ('r2'|'r3'|'r6')]; scalar := term (('+'|'-') term)*.
    // Whitespace between tokens is tolerated; the canonical printer emits none.
    static Scalar parse(const std::string& s);

  private:
    void canon() {
        a_.canonicalize();
        b_.canonicalize();
        c_.canonicalize();
        d_.canonicalize();
    }
    Rational a_, b_, c_, d_;
};

} // namespace pcalg

#endif
