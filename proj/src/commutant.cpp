#include "pcalg/commutant.hpp"

#include "pcalg/poisson.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <random>

namespace pcalg {

using nlohmann::json;

std::vector<int> GeneratorSet::per_degree_counts() const {
    std::vector<int> counts(static_cast<size_t>(std::max(max_degree, 0)), 0);
    for (const auto& g : generators) {
        if (g.degree >= 1 && g.degree <= max_degree) counts[g.degree - 1] += 1;
    }
    return counts;
}

std::vector<const Generator*> GeneratorSet::of_degree(int k) const {
    std::vector<const Generator*> out;
    for (const auto& g : generators)
        if (g.degree == k) out.push_back(&g);
    return out;
}

const Generator* GeneratorSet::find(const std::string& label) const {
    for (const auto& g : generators)
        if (g.label == label) return &g;
    return nullptr;
}

std::vector<Monomial> monomials_of_degree(size_t dim, int k) {
    std::vector<Monomial> out;
    Monomial current(dim);
    // descending grlex = lexicographically largest exponent vectors first
    std::function<void(size_t, int)> rec = [&](size_t pos, int remaining) {
        if (pos + 1 == dim) {
            current.exps[pos] = static_cast<uint16_t>(remaining);
            out.push_back(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current.exps[pos] = static_cast<uint16_t>(e);
            rec(pos + 1, remaining - e);
        }
    };
    if (dim == 0) return out;
    rec(0, k);
    return out;
}

SparseRow poly_to_row(const Polynomial& p,
                      const std::map<Monomial, int, GrlexGreater>& index_of) {
    SparseRow row;
    row.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        auto it = index_of.find(m);
        if (it == index_of.end()) throw poly_error("monomial outside the indexed space");
        row.emplace_back(it->second, c);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

namespace {

Polynomial row_to_poly(const SparseRow& row, const std::vector<Monomial>& monos, size_t dim) {
    Polynomial p(dim);
    for (const auto& [col, c] : row) p.add_term(monos[col], c);
    return p;
}

} // namespace

std::vector<Polynomial> invariant_space(const LieAlgebraSpec& spec, const std::string& sub, int k) {
    if (k < 1) throw lie_error("invariant_space: degree must be >= 1");
    const auto& members = spec.subalgebra(sub);
    const size_t dim = spec.dim();

    std::vector<int> diagonal, general;
    for (int m : members)
        (spec.acts_diagonally(m) ? diagonal : general).push_back(m);

    // candidate monomials: weight zero under every diagonal action
    std::vector<Monomial> candidates;
    for (auto& m : monomials_of_degree(dim, k)) {
        bool keep = true;
        for (int d : diagonal) {
            Scalar w(0);
            for (size_t i = 0; i < dim; ++i)
                if (m.exps[i] > 0)
                    w += spec.weight(d, static_cast<int>(i)) * Scalar(static_cast<long>(m.exps[i]));
            if (!w.is_zero()) {
                keep = false;
                break;
            }
        }
        if (keep) candidates.push_back(std::move(m));
    }

    std::map<Monomial, int, GrlexGreater> col_of;
    for (size_t i = 0; i < candidates.size(); ++i) col_of[candidates[i]] = static_cast<int>(i);

    // equations: coefficients of {x_m, mono} stacked over the non-diagonal m
    std::vector<SparseRow> equations;
    std::map<std::pair<int, Monomial>, int,
             std::function<bool(const std::pair<int, Monomial>&, const std::pair<int, Monomial>&)>>
        eq_index([](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return GrlexGreater{}(a.second, b.second);
        });
    // assemble column-wise, then transpose into rows
    std::vector<std::vector<std::pair<int, Scalar>>> col_entries(candidates.size());
    int next_eq = 0;
    for (size_t cidx = 0; cidx < candidates.size(); ++cidx) {
        Polynomial mono(dim);
        mono.add_term(candidates[cidx], Scalar(1));
        for (int m : general) {
            Polynomial image = coadjoint_action(spec, m, mono);
            for (const auto& [im, c] : image.terms()) {
                auto key = std::make_pair(m, im);
                auto it = eq_index.find(key);
                int row;
                if (it == eq_index.end()) {
                    row = next_eq++;
                    eq_index.emplace(key, row);
                } else {
                    row = it->second;
                }
                col_entries[cidx].emplace_back(row, c);
            }
        }
    }
    std::vector<SparseRow> rows(static_cast<size_t>(next_eq));
    for (size_t cidx = 0; cidx < candidates.size(); ++cidx)
        for (auto& [row, c] : col_entries[cidx]) rows[row].emplace_back(static_cast<int>(cidx), c);
    for (auto& r : rows)
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<SparseRow> kernel = nullspace(rows, static_cast<int>(candidates.size()));

    // echelon-normalize the basis itself so leading monomials are distinct
    Rref canon;
    for (auto& v : kernel) canon.add_row(std::move(v));
    std::vector<Polynomial> out;
    out.reserve(canon.rows().size());
    for (const auto& r : canon.rows()) out.push_back(row_to_poly(r, candidates, dim));
    return out;
}

namespace {

// multisets of generator indices with total degree exactly `total`
void degree_multisets(const std::vector<int>& degrees, int total,
                      std::vector<std::vector<int>>& out) {
    std::vector<int> current;
    std::function<void(size_t, int)> rec = [&](size_t start, int remaining) {
        if (remaining == 0) {
            if (!current.empty()) out.push_back(current);
            return;
        }
        for (size_t i = start; i < degrees.size(); ++i) {
            if (degrees[i] > remaining) continue;
            current.push_back(static_cast<int>(i));
            rec(i, remaining - degrees[i]);
            current.pop_back();
        }
    };
    rec(0, total);
}

} // namespace

std::vector<Polynomial> new_generators(const LieAlgebraSpec& spec, const std::string& sub, int k,
                                       const GeneratorSet& lower) {
    std::vector<Polynomial> inv = invariant_space(spec, sub, k);
    if (inv.empty()) return {};

    std::map<Monomial, int, GrlexGreater> col_of;
    int next = 0;
    for (const auto& p : inv)
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            if (!col_of.count(m)) col_of[m] = next++;
        }
    // renumber columns in grlex-descending order so RREF pivots follow it
    {
        int i = 0;
        for (auto& [m, idx] : col_of) idx = i++;
    }

    std::vector<int> degrees;
    for (const auto& g : lower.generators) degrees.push_back(g.degree);
    std::vector<std::vector<int>> products;
    degree_multisets(degrees, k, products);

    Rref product_span;
    for (const auto& multiset : products) {
        Polynomial prod = Polynomial::constant(spec.dim(), Scalar(1));
        for (int gi : multiset) prod = prod * lower.generators[gi].poly;
        product_span.add_row(poly_to_row(prod, col_of));
    }

    Rref fresh;
    std::vector<SparseRow> residues;
    for (const auto& p : inv) {
        SparseRow residue = product_span.reduce(poly_to_row(p, col_of));
        if (!residue.empty()) fresh.add_row(std::move(residue));
    }

    std::vector<Monomial> monos(col_of.size());
    for (const auto& [m, idx] : col_of) monos[idx] = m;
    std::vector<Polynomial> out;
    for (const auto& r : fresh.rows()) out.push_back(row_to_poly(r, monos, spec.dim()));
    return out;
}

GeneratorSet build_generating_set(const LieAlgebraSpec& spec, const std::string& sub,
                                  int max_degree) {
    if (max_degree < 1) throw lie_error("build_generating_set: max degree must be >= 1");
    GeneratorSet set;
    set.max_degree = max_degree;
    for (int k = 1; k <= max_degree; ++k) {
        auto fresh = new_generators(spec, sub, k, set);
        int idx = 1;
        for (auto& p : fresh) {
            Generator g;
            g.degree = k;
            g.label = "g" + std::to_string(k) + "_" + std::to_string(idx++);
            g.poly = std::move(p);
            set.generators.push_back(std::move(g));
        }
    }
    return set;
}

int independent_solution_count(const LieAlgebraSpec& spec, uint64_t seed) {
    const int n = static_cast<int>(spec.dim());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-19, 19);
    std::uniform_int_distribution<int> den(1, 7);
    size_t best = 0;
    for (int sample = 0; sample < 5; ++sample) {
        std::vector<Scalar> point;
        point.reserve(n);
        for (int i = 0; i < n; ++i) point.push_back(Scalar(Rational(num(rng), den(rng))));
        std::vector<SparseRow> rows(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Scalar v(0);
                for (const auto& [k, c] : spec.bracket_coords(i, j)) v += c * point[k];
                if (!v.is_zero()) rows[i].emplace_back(j, v);
            }
        }
        best = std::max(best, rank_of(rows));
    }
    return n - static_cast<int>(best);
}

int expected_label_count(const LieAlgebraSpec& spec, const std::string& sub, int l0) {
    return static_cast<int>(spec.dim()) - static_cast<int>(spec.subalgebra(sub).size()) + l0;
}

bool in_span(const std::vector<Polynomial>& basis, const Polynomial& p) {
    std::map<Monomial, int, GrlexGreater> col_of;
    int next = 0;
    auto index = [&](const Polynomial& q) {
        for (const auto& [m, c] : q.terms()) {
            (void)c;
            if (!col_of.count(m)) col_of[m] = next++;
        }
    };
    for (const auto& b : basis) index(b);
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        if (!col_of.count(m)) return false;  // monomial outside the span's support
    }
    Rref rref;
    for (const auto& b : basis) rref.add_row(poly_to_row(b, col_of));
    return rref.contains(poly_to_row(p, col_of));
}

std::string generators_to_json_text(const GeneratorSet& gens) {
    json j = json::array();
    for (const auto& g : gens.generators) {
        j.push_back({{"degree", g.degree},
                     {"label", g.label},
                     {"poly", json::parse(polynomial_to_json_text(g.poly))}});
    }
    return j.dump(2);
}

GeneratorSet generators_from_json_text(const std::string& text, size_t dim) {
    json j = json::parse(text);
    GeneratorSet set;
    for (const auto& entry : j) {
        Generator g;
        g.degree = entry.at("degree").get<int>();
        g.label = entry.at("label").get<std::string>();
        g.poly = polynomial_from_json_text(entry.at("poly").dump(), dim);
        set.generators.push_back(std::move(g));
        set.max_degree = std::max(set.max_degree, set.generators.back().degree);
    }
    return set;
}

} // namespace pcalg
