#include "pcalg/grading.hpp"

#include <algorithm>
#include <functional>

namespace pcalg {

bool GradingSet::subset_of(const GradingSet& other) const {
    for (const auto& t : tuples)
        if (!other.tuples.count(t)) return false;
    return true;
}

GradingSet GradingSet::minkowski_sum(const GradingSet& other) const {
    GradingSet out;
    for (const auto& u : tuples) {
        for (const auto& v : other.tuples) {
            std::vector<int> w(u.size());
            for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
            out.tuples.insert(std::move(w));
        }
    }
    return out;
}

std::string GradingSet::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& t : tuples) {
        if (!first) out += ", ";
        first = false;
        out += "(";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(t[i]);
        }
        out += ")";
    }
    return out + "}";
}

GradingSet grade(const LieAlgebraSpec& spec, const Polynomial& p) {
    if (spec.block_count() == 0) throw lie_error("grade: no blocks declared");
    if (p.is_zero()) throw lie_error("grade: undefined for the zero polynomial");
    GradingSet out;
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        std::vector<int> tuple(spec.block_count(), 0);
        for (size_t i = 0; i < m.dim(); ++i)
            if (m.exps[i] > 0) tuple[spec.block_of(static_cast<int>(i))] += m.exps[i];
        out.tuples.insert(std::move(tuple));
    }
    return out;
}

GradingSet predict_bracket_grading(const BlockTable& table, const GradingSet& gp,
                                   const GradingSet& gq, std::optional<int> invariant_block) {
    const int m = static_cast<int>(table.block_count());
    GradingSet out;
    for (const auto& u : gp.tuples) {
        for (const auto& v : gq.tuples) {
            for (int r = 0; r < m; ++r) {
                if (u[r] <= 0) continue;
                for (int s = 0; s < m; ++s) {
                    if (v[s] <= 0) continue;
                    if (invariant_block && r == *invariant_block && s == *invariant_block) continue;
                    for (int t : table.targets(r, s)) {
                        std::vector<int> w(u.size());
                        bool ok = true;
                        for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
                        w[r] -= 1;
                        w[s] -= 1;
                        w[t] += 1;
                        for (int x : w)
                            if (x < 0) ok = false;
                        if (ok) out.tuples.insert(std::move(w));
                    }
                }
            }
        }
    }
    return out;
}

GradingSet predict_bracket_grading(const LieAlgebraSpec& spec, const GradingSet& gp,
                                   const GradingSet& gq) {
    return predict_bracket_grading(BlockTable(spec), gp, gq);
}

namespace {

// per-monomial block tuple
std::vector<int> monomial_tuple(const LieAlgebraSpec& spec, const Monomial& m) {
    std::vector<int> tuple(spec.block_count(), 0);
    for (size_t i = 0; i < m.dim(); ++i)
        if (m.exps[i] > 0) tuple[spec.block_of(static_cast<int>(i))] += m.exps[i];
    return tuple;
}

bool pure_block(const std::vector<int>& tuple, int b) {
    for (size_t i = 0; i < tuple.size(); ++i)
        if (static_cast<int>(i) != b && tuple[i] != 0) return false;
    return true;
}

// block of the subalgebra when its index set coincides with one block
int subalgebra_block(const LieAlgebraSpec& spec, const std::string& sub) {
    const auto& members = spec.subalgebra(sub);
    for (size_t b = 0; b < spec.block_count(); ++b) {
        auto blk = spec.blocks()[b];
        std::sort(blk.begin(), blk.end());
        if (blk == members) return static_cast<int>(b);
    }
    return -1;
}

GradingSet one_sided_bound(const LieAlgebraSpec& spec, int b, const Polynomial& p,
                           const Polynomial& q) {
    // drop p-monomials supported inside the subalgebra block; they bracket
    // to zero against the invariant q
    GradingSet out;
    for (const auto& [mp, cp] : p.terms()) {
        (void)cp;
        auto u = monomial_tuple(spec, mp);
        if (b >= 0 && pure_block(u, b)) continue;
        for (const auto& [mq, cq] : q.terms()) {
            (void)cq;
            auto v = monomial_tuple(spec, mq);
            for (size_t i = 0; i < mp.dim(); ++i) {
                if (mp.exps[i] == 0) continue;
                for (size_t j = 0; j < mq.dim(); ++j) {
                    if (mq.exps[j] == 0 || i == j) continue;
                    auto coords = spec.bracket_coords(static_cast<int>(i), static_cast<int>(j));
                    if (coords.empty()) continue;
                    int r = spec.block_of(static_cast<int>(i));
                    int s = spec.block_of(static_cast<int>(j));
                    std::set<int> ts;
                    for (const auto& [k, c] : coords) {
                        (void)c;
                        ts.insert(spec.block_of(k));
                    }
                    for (int t : ts) {
                        std::vector<int> w(u.size());
                        for (size_t x = 0; x < u.size(); ++x) w[x] = u[x] + v[x];
                        w[r] -= 1;
                        w[s] -= 1;
                        w[t] += 1;
                        bool ok = true;
                        for (int x : w)
                            if (x < 0) ok = false;
                        if (ok) out.tuples.insert(std::move(w));
                    }
                }
            }
        }
    }
    return out;
}

} // namespace

GradingSet bracket_grading_bound(const LieAlgebraSpec& spec, const std::string& sub,
                                 const Polynomial& p, const Polynomial& q) {
    if (spec.block_count() == 0) throw lie_error("bracket_grading_bound: no blocks declared");
    int b = subalgebra_block(spec, sub);
    GradingSet left = one_sided_bound(spec, b, p, q);
    GradingSet right = one_sided_bound(spec, b, q, p);
    GradingSet out;
    for (const auto& t : left.tuples)
        if (right.tuples.count(t)) out.tuples.insert(t);
    return out;
}

std::vector<std::vector<int>> all_products(const GeneratorSet& gens, int d) {
    std::vector<std::vector<int>> out;
    if (d <= 0) return out;
    std::vector<int> current;
    std::function<void(size_t, int)> rec = [&](size_t start, int remaining) {
        if (remaining == 0) {
            if (!current.empty()) out.push_back(current);
            return;
        }
        for (size_t i = start; i < gens.generators.size(); ++i) {
            if (gens.generators[i].degree > remaining) continue;
            current.push_back(static_cast<int>(i));
            rec(i, remaining - gens.generators[i].degree);
            current.pop_back();
        }
    };
    rec(0, d);
    return out;
}

std::vector<std::vector<int>> admissible_products(const LieAlgebraSpec& spec,
                                                  const GeneratorSet& gens, int d,
                                                  const GradingSet& target) {
    std::vector<std::vector<int>> out;
    if (d <= 0) return out;
    std::vector<GradingSet> gen_grading;
    gen_grading.reserve(gens.generators.size());
    for (const auto& g : gens.generators) gen_grading.push_back(grade(spec, g.poly));
    for (auto& multiset : all_products(gens, d)) {
        GradingSet total;
        total.tuples.insert(std::vector<int>(spec.block_count(), 0));
        for (int gi : multiset) total = total.minkowski_sum(gen_grading[gi]);
        if (total.subset_of(target)) out.push_back(std::move(multiset));
    }
    return out;
}

long count_unpruned(const GeneratorSet& gens, int k, int l) {
    return static_cast<long>(all_products(gens, k + l - 1).size());
}

long count_pruned(const LieAlgebraSpec& spec, const std::string& sub, const GeneratorSet& gens,
                  int k, int l) {
    auto qk = gens.of_degree(k);
    auto ql = gens.of_degree(l);
    if (qk.empty() || ql.empty()) throw lie_error("count_pruned: empty degree class");
    long best = 0;
    for (const auto* p : qk) {
        for (const auto* q : ql) {
            if (p == q) continue;  // {p,p} = 0
            GradingSet bound = bracket_grading_bound(spec, sub, p->poly, q->poly);
            long count = static_cast<long>(
                admissible_products(spec, gens, k + l - 1, bound).size());
            best = std::max(best, count);
        }
    }
    return best;
}

} // namespace pcalg
