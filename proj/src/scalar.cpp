#include "pcalg/scalar.hpp"

#include <cctype>

namespace pcalg {

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw scalar_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return Scalar(r);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
        a_ *= o.a_;
        return *this;
    }
    // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2, sqrt6^2 = 6
    Rational na = a_ * o.a_ + 2 * b_ * o.b_ + 3 * c_ * o.c_ + 6 * d_ * o.d_;
    Rational nb = a_ * o.b_ + b_ * o.a_ + 3 * (c_ * o.d_ + d_ * o.c_);
    Rational nc = a_ * o.c_ + c_ * o.a_ + 2 * (b_ * o.d_ + d_ * o.b_);
    Rational nd = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
    a_ = std::move(na);
    b_ = std::move(nb);
    c_ = std::move(nc);
    d_ = std::move(nd);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw scalar_error("division by zero");
    if (is_rational()) return Scalar(Rational(1) / a_);
    // s2 negates the sqrt2-odd part; y = x*s2(x) lies in Q(sqrt3).
    Scalar s2(a_, -b_, c_, -d_);
    Scalar y = *this * s2;
    // norm = y * conj3(y) is a nonzero rational since we are in a field
    Scalar y3(y.a_, y.b_, -y.c_, -y.d_);
    Scalar norm = y * y3;
    Rational inv_norm = Rational(1) / norm.a_;
    return s2 * y3 * Scalar(inv_norm);
}

namespace {

void append_rat(std::string& out, const Rational& r) {
    out += r.get_num().get_str();
    if (r.get_den() != 1) {
        out += '/';
        out += r.get_den().get_str();
    }
}

void append_term(std::string& out, const Rational& r, const char* radical) {
    if (r == 0) return;
    Rational v = r;
    if (out.empty()) {
        if (v < 0) {
            out += '-';
            v = -v;
        }
    } else {
        out += (v < 0) ? '-' : '+';
        if (v < 0) v = -v;
    }
    append_rat(out, v);
    if (radical) {
        out += '*';
        out += radical;
    }
}

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

mpz_class parse_digits(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw scalar_error("expected digits in scalar at offset " + std::to_string(start));
    return mpz_class(c.s.substr(start, c.i - start));
}

} // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    append_term(out, a_, nullptr);
    append_term(out, b_, "r2");
    append_term(out, c_, "r3");
    append_term(out, d_, "r6");
    return out;
}

Scalar Scalar::parse(const std::string& s) {
    Cursor c{s};
    if (c.done()) throw scalar_error("empty scalar string");
    Scalar result;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = (ch == '-') ? -1 : 1;
            ++c.i;
        } else if (!first) {
            throw scalar_error("expected '+' or '-' between scalar terms");
        }
        mpz_class num = parse_digits(c);
        mpz_class den = 1;
        if (!c.done() && c.peek() == '/') {
            ++c.i;
            den = parse_digits(c);
            if (den == 0) throw scalar_error("zero denominator in scalar");
        }
        Rational r(num, den);
        r.canonicalize();
        if (sign < 0) r = -r;
        int radical = 0;
        if (!c.done() && c.peek() == '*') {
            ++c.i;
            c.skip_ws();
            if (c.i + 1 >= c.s.size() || c.s[c.i] != 'r')
                throw scalar_error("expected radical r2|r3|r6 after '*'");
            char which = c.s[c.i + 1];
            if (which == '2') radical = 2;
            else if (which == '3') radical = 3;
            else if (which == '6') radical = 6;
            else throw scalar_error("unknown radical in scalar");
            c.i += 2;
        }
        switch (radical) {
        case 0: result += Scalar(r); break;
        case 2: result += Scalar(Rational(0), r, Rational(0), Rational(0)); break;
        case 3: result += Scalar(Rational(0), Rational(0), r, Rational(0)); break;
        case 6: result += Scalar(Rational(0), Rational(0), Rational(0), r); break;
        }
        first = false;
    }
    return result;
}

} // namespace pcalg
