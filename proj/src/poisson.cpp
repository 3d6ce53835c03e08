#include "pcalg/poisson.hpp"

namespace pcalg {

Polynomial poisson_bracket(const LieAlgebraSpec& spec, const Polynomial& p, const Polynomial& q) {
    const size_t n = spec.dim();
    if (p.dim() != n || q.dim() != n) throw poly_error("poisson_bracket: dimension mismatch");
    Polynomial out(n);
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mq, cq] : q.terms()) {
            Scalar cc = cp * cq;
            for (size_t i = 0; i < n; ++i) {
                if (mp.exps[i] == 0) continue;
                for (size_t j = 0; j < n; ++j) {
                    if (mq.exps[j] == 0 || i == j) continue;
                    auto coords = spec.bracket_coords(static_cast<int>(i), static_cast<int>(j));
                    if (coords.empty()) continue;
                    Scalar mult = cc * Scalar(static_cast<long>(mp.exps[i]) *
                                              static_cast<long>(mq.exps[j]));
                    Monomial base(n);
                    for (size_t t = 0; t < n; ++t) base.exps[t] = mp.exps[t] + mq.exps[t];
                    base.exps[i] -= 1;
                    base.exps[j] -= 1;
                    for (const auto& [k, c] : coords) {
                        Monomial m = base;
                        m.exps[k] += 1;
                        out.add_term(m, mult * c);
                    }
                }
            }
        }
    }
    return out;
}

Polynomial coadjoint_action(const LieAlgebraSpec& spec, int m, const Polynomial& p) {
    const size_t n = spec.dim();
    if (p.dim() != n) throw poly_error("coadjoint_action: dimension mismatch");
    if (m < 0 || static_cast<size_t>(m) >= n) throw poly_error("coadjoint_action: index out of range");
    Polynomial out(n);
    for (const auto& [mono, c] : p.terms()) {
        for (size_t i = 0; i < n; ++i) {
            if (mono.exps[i] == 0 || static_cast<int>(i) == m) continue;
            auto coords = spec.bracket_coords(m, static_cast<int>(i));
            if (coords.empty()) continue;
            Scalar mult = c * Scalar(static_cast<long>(mono.exps[i]));
            Monomial base = mono;
            base.exps[i] -= 1;
            for (const auto& [k, ck] : coords) {
                Monomial mm = base;
                mm.exps[k] += 1;
                out.add_term(mm, mult * ck);
            }
        }
    }
    return out;
}

} // namespace pcalg
