#include "pcalg/an_roots.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pcalg {

bool connected(const Root& a, const Root& b) {
    return (a.j == b.i) != (a.i == b.j);
}

std::vector<Root> all_roots(int rank) {
    std::vector<Root> out;
    for (int i = 1; i <= rank + 1; ++i)
        for (int j = 1; j <= rank + 1; ++j)
            if (i != j) out.emplace_back(i, j);
    return out;
}

CycleGenerator CycleGenerator::canonical(std::vector<int> idx) {
    if (idx.size() < 2) throw lie_error("cycle needs at least two indices");
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw lie_error("cycle indices must be distinct");
    auto min_it = std::min_element(idx.begin(), idx.end());
    std::rotate(idx.begin(), min_it, idx.end());
    CycleGenerator g;
    g.indices = std::move(idx);
    return g;
}

CycleGenerator CycleGenerator::parse(const std::string& text) {
    std::vector<int> idx;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        idx.push_back(std::stoi(part));
    }
    return canonical(std::move(idx));
}

std::vector<Root> CycleGenerator::roots() const {
    std::vector<Root> out;
    for (size_t k = 0; k < indices.size(); ++k)
        out.emplace_back(indices[k], indices[(k + 1) % indices.size()]);
    return out;
}

CycleGenerator CycleGenerator::reversed() const {
    std::vector<int> idx(indices.rbegin(), indices.rend());
    return canonical(std::move(idx));
}

std::string CycleGenerator::label() const {
    std::string out = "p(";
    for (size_t k = 0; k < indices.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(indices[k]);
    }
    return out + ")";
}

int CycleGenerator::positive_count() const {
    int n = 0;
    for (const auto& r : roots())
        if (r.i < r.j) ++n;
    return n;
}

std::vector<CycleGenerator> all_cycles(int rank) {
    std::vector<CycleGenerator> out;
    const int N = rank + 1;
    for (int len = 2; len <= N; ++len) {
        // subsets of size len, then permutations of the tail (min leads)
        std::vector<int> subset;
        std::function<void(int)> choose = [&](int from) {
            if (static_cast<int>(subset.size()) == len) {
                std::vector<int> tail(subset.begin() + 1, subset.end());
                std::sort(tail.begin(), tail.end());
                do {
                    std::vector<int> cycle;
                    cycle.push_back(subset[0]);
                    cycle.insert(cycle.end(), tail.begin(), tail.end());
                    out.push_back(CycleGenerator::canonical(cycle));
                } while (std::next_permutation(tail.begin(), tail.end()));
                return;
            }
            for (int v = from; v <= N; ++v) {
                subset.push_back(v);
                choose(v + 1);
                subset.pop_back();
            }
        };
        choose(1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int root_coordinate(const LieAlgebraSpec& sl, const Root& r) {
    std::string name = "e" + std::to_string(r.i) + std::to_string(r.j);
    int idx = sl.index_of(name);
    if (idx < 0) idx = sl.index_of("e" + std::to_string(r.i) + "_" + std::to_string(r.j));
    if (idx < 0) throw lie_error("root coordinate " + name + " not present");
    return idx;
}

GeneratorSet enumerate_cartan_generators(const LieAlgebraSpec& sl, int rank) {
    GeneratorSet set;
    set.max_degree = rank + 1;
    for (int i = 1; i <= rank; ++i) {
        Generator g;
        g.degree = 1;
        g.label = "h" + std::to_string(i);
        g.poly = Polynomial::coordinate(sl.dim(), sl.index_of(g.label));
        set.generators.push_back(std::move(g));
    }
    for (const auto& cycle : all_cycles(rank)) {
        Generator g;
        g.degree = cycle.degree();
        g.label = cycle.label();
        g.poly = cycle_polynomial(sl, cycle);
        set.generators.push_back(std::move(g));
    }
    std::stable_sort(set.generators.begin(), set.generators.end(),
                     [](const Generator& a, const Generator& b) { return a.degree < b.degree; });
    return set;
}

GradingSet grading_of_cycle(const CycleGenerator& g, size_t nblocks) {
    GradingSet out;
    std::vector<int> tuple(nblocks, 0);
    int pos = g.positive_count();
    tuple[1] = pos;
    tuple[2] = g.degree() - pos;
    out.tuples.insert(std::move(tuple));
    return out;
}

Polynomial cycle_polynomial(const LieAlgebraSpec& sl, const CycleGenerator& g) {
    std::vector<int> vars;
    for (const auto& r : g.roots()) vars.push_back(root_coordinate(sl, r));
    return Polynomial::monomial(sl.dim(), vars);
}

Polynomial BracketExpansion::value(const LieAlgebraSpec& sl) const {
    Polynomial total(sl.dim());
    for (const auto& term : terms) {
        Polynomial t = term.cartan.is_zero() ? Polynomial::constant(sl.dim(), term.coeff)
                                             : term.cartan * term.coeff;
        for (const auto& f : term.factors) t = t * cycle_polynomial(sl, f);
        total += t;
    }
    return total;
}

std::string BracketExpansion::str(const LieAlgebraSpec& sl) const {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        if (i) out += " + ";
        out += t.coeff.str();
        if (!t.cartan.is_zero()) out += "*(" + t.cartan.str(sl.basis()) + ")";
        for (const auto& f : t.factors) out += "*" + f.label();
    }
    return out;
}

std::vector<CycleGenerator> cycle_decomposition(std::vector<Root> roots) {
    // directed multigraph; extract simple cycles greedily, smallest vertex
    // and smallest target first
    std::multiset<std::pair<int, int>> edges;
    for (const auto& r : roots) edges.insert({r.i, r.j});
    std::vector<CycleGenerator> out;
    std::vector<int> path;
    auto take_smallest_edge = [&edges](int from) -> int {
        auto it = edges.lower_bound({from, 0});
        if (it == edges.end() || it->first != from) return -1;
        int to = it->second;
        edges.erase(it);
        return to;
    };
    while (!edges.empty()) {
        if (path.empty()) path.push_back(edges.begin()->first);
        int cur = path.back();
        int nxt = take_smallest_edge(cur);
        if (nxt < 0) {
            if (path.size() == 1) {
                path.clear();
                continue;
            }
            throw lie_error("cycle decomposition: unbalanced root multiset");
        }
        auto hit = std::find(path.begin(), path.end(), nxt);
        if (hit != path.end()) {
            std::vector<int> cycle(hit, path.end());
            out.push_back(CycleGenerator::canonical(cycle));
            path.erase(hit + 1, path.end());
        } else {
            path.push_back(nxt);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BracketExpansion cycle_bracket_expansion(const LieAlgebraSpec& sl, const CycleGenerator& p,
                                         const CycleGenerator& q) {
    BracketExpansion exp;
    auto proots = p.roots();
    auto qroots = q.roots();
    for (size_t a = 0; a < proots.size(); ++a) {
        for (size_t b = 0; b < qroots.size(); ++b) {
            const Root& beta = proots[a];
            const Root& gamma = qroots[b];
            std::vector<Root> rest;
            for (size_t k = 0; k < proots.size(); ++k)
                if (k != a) rest.push_back(proots[k]);
            for (size_t k = 0; k < qroots.size(); ++k)
                if (k != b) rest.push_back(qroots[k]);
            if (gamma == beta.negated()) {
                ExpansionTerm term;
                term.cartan =
                    sl.bracket_poly(root_coordinate(sl, beta), root_coordinate(sl, gamma));
                term.factors = cycle_decomposition(std::move(rest));
                exp.terms.push_back(std::move(term));
            } else if (connected(beta, gamma)) {
                auto coords =
                    sl.bracket_coords(root_coordinate(sl, beta), root_coordinate(sl, gamma));
                if (coords.size() != 1) throw lie_error("unexpected root bracket support");
                Root sum = (beta.j == gamma.i) ? Root(beta.i, gamma.j) : Root(gamma.i, beta.j);
                ExpansionTerm term;
                term.coeff = coords.front().second;
                term.cartan = Polynomial(sl.dim());
                rest.push_back(sum);
                term.factors = cycle_decomposition(std::move(rest));
                exp.terms.push_back(std::move(term));
            }
        }
    }
    return exp;
}

Polynomial cartan_pair_bracket(const LieAlgebraSpec& sl, const CycleGenerator& p,
                               const CycleGenerator& q) {
    return cycle_bracket_expansion(sl, p, q).value(sl);
}

namespace {

std::string cartan_free_label(int c1, int c2, int c3) {
    std::vector<int> c{c1, c2, c3};
    std::sort(c.rbegin(), c.rend());
    if (c[2] >= 1) return "C-all-roots-connected";
    if (c[0] == 0) return "zero-disconnected";
    if (c[1] == 0) return (c[0] == 1) ? "a1-single-connection" : "a2-double-connection";
    if (c[0] == 1) return "b1-two-single-connections";
    if (c[1] == 1) return "b2-mixed-connections";
    return "b3-two-double-connections";
}

} // namespace

BracketExpansion classify_bracket(const LieAlgebraSpec& sl, const CycleGenerator& p,
                                  const CycleGenerator& q) {
    if (p.degree() != 2 && p.degree() != 3)
        throw lie_error("classify_bracket supports first arguments of degree 2 or 3");
    BracketExpansion exp = cycle_bracket_expansion(sl, p, q);

    auto proots = p.roots();
    auto qroots = q.roots();
    int inverse_pairs = 0;
    for (const auto& beta : proots)
        for (const auto& gamma : qroots)
            if (gamma == beta.negated()) {
                ++inverse_pairs;
                break;
            }

    if (p.degree() == 2) {
        if (inverse_pairs > 0) {
            exp.label = (q == p.reversed() || q == p) ? "q2-mutual-inverse" : "q2-inverse-root";
        } else {
            int c = 0;
            for (const auto& gamma : qroots)
                if (connected(proots[0], gamma)) ++c;
            exp.label = (c == 0) ? "zero-disconnected"
                                 : (c == 1 ? "q2-one-connected" : "q2-two-connected");
        }
        return exp;
    }

    if (inverse_pairs == 3) {
        exp.label = "cartan-mutual-inverse";
    } else if (inverse_pairs == 2) {
        exp.label = "cartan-two-inverse";
    } else if (inverse_pairs == 1) {
        exp.label = "cartan-one-inverse";
    } else {
        int c[3] = {0, 0, 0};
        for (int a = 0; a < 3; ++a)
            for (const auto& gamma : qroots)
                if (connected(proots[a], gamma)) ++c[a];
        exp.label = cartan_free_label(c[0], c[1], c[2]);
    }
    return exp;
}

} // namespace pcalg
