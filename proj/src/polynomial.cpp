#include "pcalg/polynomial.hpp"

namespace pcalg {

Polynomial Polynomial::coordinate(size_t dim, size_t i, const Scalar& c) {
    if (i >= dim) throw poly_error("coordinate index out of range");
    Polynomial p(dim);
    Monomial m(dim);
    m.exps[i] = 1;
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::constant(size_t dim, const Scalar& c) {
    Polynomial p(dim);
    p.add_term(Monomial(dim), c);
    return p;
}

Polynomial Polynomial::monomial(size_t dim, const std::vector<int>& vars, const Scalar& c) {
    Polynomial p(dim);
    Monomial m(dim);
    for (int v : vars) {
        if (v < 0 || static_cast<size_t>(v) >= dim) throw poly_error("variable index out of range");
        m.exps[v] += 1;
    }
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (m.dim() != dim_) throw poly_error("monomial dimension mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (dim_ != o.dim_) throw poly_error("polynomial dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (dim_ != o.dim_) throw poly_error("polynomial dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    if (x.dim_ != y.dim_) throw poly_error("polynomial dimension mismatch");
    Polynomial r(x.dim_);
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            Monomial m(x.dim_);
            for (size_t i = 0; i < x.dim_; ++i) m.exps[i] = mx.exps[i] + my.exps[i];
            r.add_term(m, cx * cy);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    Polynomial r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Polynomial Polynomial::partial(size_t i) const {
    if (i >= dim_) throw poly_error("partial: index out of range");
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[i] == 0) continue;
        Monomial dm = m;
        dm.exps[i] -= 1;
        r.add_term(dm, c * Scalar(static_cast<long>(m.exps[i])));
    }
    return r;
}

Polynomial Polynomial::homogeneous_component(int k) const {
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == k) r.terms_.emplace(m, c);
    return r;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != dim_) throw poly_error("evaluate: point dimension mismatch");
    Scalar total(0);
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (size_t i = 0; i < dim_; ++i)
            for (uint16_t e = 0; e < m.exps[i]; ++e) v *= point[i];
        total += v;
    }
    return total;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool multi_term = cs.find_first_of("+-", 1) != std::string::npos;
        bool lead_minus = !multi_term && !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
            if (lead_minus) {
                out += "-";
                cs = cs.substr(1);
            }
        } else if (lead_minus) {
            out += " - ";
            cs = cs.substr(1);
        } else {
            out += " + ";
        }
        std::vector<std::string> factors;
        bool has_vars = !m.is_constant();
        if (!has_vars) {
            factors.push_back(multi_term ? cs : cs);
        } else if (cs != "1") {
            factors.push_back(multi_term ? "(" + cs + ")" : cs);
        }
        for (size_t i = 0; i < dim_; ++i) {
            if (m.exps[i] == 0) continue;
            std::string v = (i < names.size()) ? names[i] : ("x" + std::to_string(i + 1));
            if (m.exps[i] > 1) v += "^" + std::to_string(m.exps[i]);
            factors.push_back(v);
        }
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k > 0) out += "*";
            out += factors[k];
        }
    }
    return out;
}

} // namespace pcalg
