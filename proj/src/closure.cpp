#include "pcalg/closure.hpp"

#include "pcalg/poisson.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace pcalg {

using nlohmann::json;

std::string BracketRelation::str() const {
    std::string out = "{" + u + "," + v + "} = ";
    if (terms.empty() && residual.is_zero()) return out + "0";
    bool first = true;
    for (const auto& t : terms) {
        std::string cs = t.coeff.str();
        bool multi = cs.find_first_of("+-", 1) != std::string::npos;
        bool neg = !multi && !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        if (multi) cs = "(" + cs + ")";
        out += cs;
        for (const auto& f : t.factors) out += "*" + f;
    }
    if (!residual.is_zero()) {
        if (!first) out += " + ";
        out += "[residual_nonzero]";
    }
    return out;
}

bool ClosureResult::all_closed() const {
    for (const auto& r : relations)
        if (!r.closed()) return false;
    return true;
}

namespace {

std::vector<std::vector<int>> ordered_candidates(const LieAlgebraSpec& spec,
                                                 const GeneratorSet& gens, int degree,
                                                 const GradingSet* bound) {
    std::vector<std::vector<int>> multisets;
    if (bound)
        multisets = admissible_products(spec, gens, degree, *bound);
    else
        multisets = all_products(gens, degree);
    // prefer lower-degree factors, then label order
    auto key = [&](const std::vector<int>& ms) {
        std::vector<int> degs;
        for (int gi : ms) degs.push_back(gens.generators[gi].degree);
        std::sort(degs.rbegin(), degs.rend());
        return std::make_pair(degs, ms);
    };
    std::stable_sort(multisets.begin(), multisets.end(),
                     [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return multisets;
}

} // namespace

BracketRelation close_pair(const LieAlgebraSpec& spec, const std::string& sub,
                           const GeneratorSet& gens, const std::string& u, const std::string& v,
                           bool use_grading) {
    const Generator* gu = gens.find(u);
    const Generator* gv = gens.find(v);
    if (!gu || !gv) throw lie_error("close_pair: unknown generator label");

    BracketRelation rel;
    rel.u = u;
    rel.v = v;
    rel.residual = Polynomial(spec.dim());

    Polynomial bracket = poisson_bracket(spec, gu->poly, gv->poly);
    if (bracket.is_zero()) return rel;

    int degree = gu->degree + gv->degree - 1;
    std::vector<std::vector<int>> multisets;
    if (use_grading) {
        GradingSet bound = bracket_grading_bound(spec, sub, gu->poly, gv->poly);
        multisets = ordered_candidates(spec, gens, degree, &bound);
    } else {
        multisets = ordered_candidates(spec, gens, degree, nullptr);
    }

    std::map<Monomial, int, GrlexGreater> col_of;
    int next = 0;
    auto index_poly = [&](const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            if (!col_of.count(m)) col_of[m] = next++;
        }
    };
    std::vector<Polynomial> products;
    products.reserve(multisets.size());
    for (const auto& ms : multisets) {
        Polynomial prod = Polynomial::constant(spec.dim(), Scalar(1));
        for (int gi : ms) prod = prod * gens.generators[gi].poly;
        index_poly(prod);
        products.push_back(std::move(prod));
    }
    index_poly(bracket);

    std::vector<SparseRow> cols;
    cols.reserve(products.size());
    for (const auto& p : products) cols.push_back(poly_to_row(p, col_of));
    SpanSolution sol = solve_in_span(cols, poly_to_row(bracket, col_of));

    std::vector<Monomial> monos(col_of.size());
    for (const auto& [m, idx] : col_of) monos[idx] = m;
    for (const auto& [col, c] : sol.residual) rel.residual.add_term(monos[col], c);

    for (size_t i = 0; i < multisets.size(); ++i) {
        if (sol.coeffs[i].is_zero()) continue;
        RelationTerm term;
        term.coeff = sol.coeffs[i];
        for (int gi : multisets[i]) term.factors.push_back(gens.generators[gi].label);
        rel.terms.push_back(std::move(term));
    }
    return rel;
}

ClosureResult close_all(const LieAlgebraSpec& spec, const std::string& sub,
                        const GeneratorSet& gens, bool use_grading, int threads) {
    ClosureResult result;
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < gens.generators.size(); ++i)
        for (size_t j = i + 1; j < gens.generators.size(); ++j) pairs.emplace_back(i, j);

    result.relations.resize(pairs.size());
    auto work = [&](size_t from, size_t to) {
        for (size_t k = from; k < to; ++k) {
            result.relations[k] =
                close_pair(spec, sub, gens, gens.generators[pairs[k].first].label,
                           gens.generators[pairs[k].second].label, use_grading);
        }
    };
    int nthreads = std::max(1, threads);
    if (nthreads == 1 || pairs.size() < 2) {
        work(0, pairs.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (pairs.size() + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            size_t from = t * chunk;
            size_t to = std::min(pairs.size(), from + chunk);
            if (from < to) pool.emplace_back(work, from, to);
        }
        for (auto& th : pool) th.join();
    }

    // center: generators whose brackets with every generator vanish
    std::set<std::string> noncentral;
    for (size_t k = 0; k < pairs.size(); ++k) {
        const auto& rel = result.relations[k];
        if (!rel.terms.empty() || !rel.residual.is_zero()) {
            noncentral.insert(rel.u);
            noncentral.insert(rel.v);
        }
    }
    for (const auto& g : gens.generators)
        if (!noncentral.count(g.label)) result.center.push_back(g.label);

    std::set<std::string> center_set(result.center.begin(), result.center.end());
    int degree = 0;
    for (const auto& rel : result.relations) {
        for (const auto& term : rel.terms) {
            int noncentral_factors = 0;
            for (const auto& f : term.factors)
                if (!center_set.count(f)) ++noncentral_factors;
            degree = std::max(degree, noncentral_factors);
        }
    }
    result.algebra_degree = degree;
    return result;
}

GeneratorSet rebase_generators(const GeneratorSet& gens, const std::string& transform) {
    auto find = [&](const std::string& label) -> const Generator& {
        const Generator* g = gens.find(label);
        if (!g) throw lie_error("rebase: generator " + label + " not present");
        return *g;
    };

    GeneratorSet out;
    out.max_degree = gens.max_degree;

    if (transform == "identity") {
        out = gens;
        return out;
    }

    if (transform == "elliott-B") {
        // relabel M1..M6 by their grading tuples
        const char* from[] = {"M1", "M2", "M3", "M4", "M5", "M6"};
        const char* to[] = {"B20", "B02", "B21", "B03", "B22", "B33"};
        for (int i = 0; i < 6; ++i) {
            Generator g = find(from[i]);
            g.label = to[i];
            out.generators.push_back(std::move(g));
        }
        return out;
    }

    if (transform == "racah-cfg") {
        const Generator& h1 = find("h1");
        const Generator& h2 = find("h2");
        auto third = Scalar::rational(1, 3);
        auto half = Scalar::rational(1, 2);
        Generator c1{1, "c1", h1.poly * (third * Scalar(2)) + h2.poly * third};
        Generator c2{1, "c2", h2.poly * third - h1.poly * third};
        Generator c12{2, "c12", find("p(1,2)").poly};
        Generator c13{2, "c13", find("p(1,3)").poly};
        Generator c23{2, "c23", find("p(2,3)").poly};
        const Generator& p123 = find("p(1,2,3)");
        const Generator& p132 = find("p(1,3,2)");
        Generator f123{3, "f123", p132.poly * half - p123.poly * half};
        Generator g123{3, "g123", p132.poly * half + p123.poly * half};
        out.generators = {c1, c2, c12, c13, c23, f123, g123};
    } else {
        throw lie_error("unknown generator transform: " + transform);
    }

    // invertibility: same span degree by degree
    for (int d = 1; d <= out.max_degree; ++d) {
        std::vector<Polynomial> olddeg, newdeg;
        for (const auto& g : gens.generators)
            if (g.degree == d) olddeg.push_back(g.poly);
        for (const auto& g : out.generators)
            if (g.degree == d) newdeg.push_back(g.poly);
        if (olddeg.size() != newdeg.size()) throw lie_error("rebase: transform is not invertible");
        for (const auto& p : olddeg)
            if (!in_span(newdeg, p)) throw lie_error("rebase: transform is singular");
    }
    return out;
}

std::vector<std::string> product_syzygies(const LieAlgebraSpec& spec, const GeneratorSet& gens,
                                          int d) {
    auto multisets = all_products(gens, d);
    std::map<Monomial, int, GrlexGreater> col_of;
    int next = 0;
    std::vector<Polynomial> products;
    for (const auto& ms : multisets) {
        Polynomial prod = Polynomial::constant(spec.dim(), Scalar(1));
        for (int gi : ms) prod = prod * gens.generators[gi].poly;
        for (const auto& [m, c] : prod.terms()) {
            (void)c;
            if (!col_of.count(m)) col_of[m] = next++;
        }
        products.push_back(std::move(prod));
    }
    // nullspace of the product-evaluation map: rows are products
    std::vector<SparseRow> rows;
    for (const auto& p : products) rows.push_back(poly_to_row(p, col_of));
    // transpose: solve for combinations of products summing to zero
    std::vector<SparseRow> cols(static_cast<size_t>(next));
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) cols[c].emplace_back(static_cast<int>(r), v);
    for (auto& c : cols)
        std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    auto kernel = nullspace(cols, static_cast<int>(rows.size()));

    std::vector<std::string> out;
    for (const auto& relation : kernel) {
        std::string line;
        bool first = true;
        for (const auto& [idx, c] : relation) {
            if (!first) line += " + ";
            first = false;
            line += c.str();
            for (int gi : multisets[idx]) line += "*" + gens.generators[gi].label;
        }
        out.push_back(line + " = 0");
    }
    return out;
}

std::string relations_to_json_text(const std::vector<BracketRelation>& relations) {
    json j = json::array();
    for (const auto& rel : relations) {
        json terms = json::array();
        for (const auto& t : rel.terms)
            terms.push_back({{"coeff", t.coeff.str()}, {"factors", t.factors}});
        j.push_back({{"u", rel.u},
                     {"v", rel.v},
                     {"terms", terms},
                     {"residual", json::parse(polynomial_to_json_text(rel.residual))},
                     {"closed", rel.closed()}});
    }
    return j.dump(2);
}

} // namespace pcalg
