#ifndef PCALG_POLYNOMIAL_HPP
#define PCALG_POLYNOMIAL_HPP

#include "pcalg/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pcalg {

// Exponent tuple aligned to an algebra's ordered basis. Total order is
// graded lexicographic: first by total degree, ties by exponents with
// earlier coordinates weighing more (x1 > x2 > ...).
struct Monomial {
    std::vector<uint16_t> exps;

    Monomial() = default;
    explicit Monomial(size_t dim) : exps(dim, 0) {}

    size_t dim() const { return exps.size(); }
    int degree() const {
        int d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    bool is_constant() const { return degree() == 0; }

    friend bool operator==(const Monomial& x, const Monomial& y) { return x.exps == y.exps; }
    friend bool operator!=(const Monomial& x, const Monomial& y) { return !(x == y); }
};

// "greater" so that map iteration runs from the leading monomial down
struct GrlexGreater {
    bool operator()(const Monomial& x, const Monomial& y) const {
        int dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx > dy;
        return x.exps > y.exps;
    }
};

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Scalar, GrlexGreater>;

    Polynomial() : dim_(0) {}
    explicit Polynomial(size_t dim) : dim_(dim) {}

    static Polynomial zero(size_t dim) { return Polynomial(dim); }
    static Polynomial coordinate(size_t dim, size_t i, const Scalar& c = Scalar(1));
    static Polynomial constant(size_t dim, const Scalar& c);
    // product x_{i1} x_{i2} ... of the listed coordinates
    static Polynomial monomial(size_t dim, const std::vector<int>& vars, const Scalar& c = Scalar(1));

    size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // -1 for the zero polynomial
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const Scalar& c);
    Scalar coeff(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
    friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
    Polynomial operator*(const Scalar& c) const;
    friend bool operator==(const Polynomial& x, const Polynomial& y) {
        return x.dim_ == y.dim_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const Polynomial& x, const Polynomial& y) { return !(x == y); }

    // formal partial derivative d/dx_i
    Polynomial partial(size_t i) const;
    // sum of the degree-k terms
    Polynomial homogeneous_component(int k) const;

    Scalar evaluate(const std::vector<Scalar>& point) const;

    std::string str(const std::vector<std::string>& names) const;

  private:
    size_t dim_;
    TermMap terms_;
};

struct poly_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pcalg

#endif
