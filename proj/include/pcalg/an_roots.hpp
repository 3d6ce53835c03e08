#ifndef PCALG_AN_ROOTS_HPP
#define PCALG_AN_ROOTS_HPP

#include "pcalg/commutant.hpp"
#include "pcalg/grading.hpp"
#include "pcalg/lie_algebra.hpp"

#include <string>
#include <vector>

namespace pcalg {

// eps_i - eps_j, i.e. the root of e_{ij}; 1-based indices
struct Root {
    int i = 0, j = 0;

    Root() = default;
    Root(int i_, int j_) : i(i_), j(j_) {
        if (i == j) throw lie_error("root requires distinct indices");
    }
    Root negated() const { return Root(j, i); }
    int length() const { return i < j ? j - i : i - j; }
    friend bool operator==(const Root& a, const Root& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
};

// a + b lies in the root system again (excludes a = -b)
bool connected(const Root& a, const Root& b);

std::vector<Root> all_roots(int rank);  // roots of A_n

// p_{i1,...,ir} = e_{i1 i2} ... e_{ir i1}; distinct indices, canonical
// rotation puts the smallest index first
struct CycleGenerator {
    std::vector<int> indices;

    static CycleGenerator canonical(std::vector<int> idx);
    static CycleGenerator parse(const std::string& text);  // "1,2,3"

    int degree() const { return static_cast<int>(indices.size()); }
    std::vector<Root> roots() const;
    CycleGenerator reversed() const;
    std::string label() const;  // p(1,2,3)
    // positive/negative root-vector counts as a singleton grading tuple
    int positive_count() const;

    friend bool operator==(const CycleGenerator& a, const CycleGenerator& b) {
        return a.indices == b.indices;
    }
    friend bool operator<(const CycleGenerator& a, const CycleGenerator& b) {
        if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
        return a.indices < b.indices;
    }
};

// all canonical cycles of length 2..n+1 on indices 1..n+1, shortest first,
// lexicographic within a length
std::vector<CycleGenerator> all_cycles(int rank);

// h_1..h_n then the cycles, as a GeneratorSet over make_sl(n+1); counts
// match sum_r (n+1)!/((n+1-r)! r) - 1
GeneratorSet enumerate_cartan_generators(const LieAlgebraSpec& sl, int rank);

// {(0, n_+, n_-)} for the concrete cycle
GradingSet grading_of_cycle(const CycleGenerator& g, size_t nblocks = 3);

Polynomial cycle_polynomial(const LieAlgebraSpec& sl, const CycleGenerator& g);
int root_coordinate(const LieAlgebraSpec& sl, const Root& r);

// one term of a closed-form bracket expansion:
// coeff * cartan_factor * product of cycle generators
struct ExpansionTerm {
    Scalar coeff{1};
    Polynomial cartan;  // linear in the h's; empty when absent
    std::vector<CycleGenerator> factors;
};

struct BracketExpansion {
    std::string label;
    std::vector<ExpansionTerm> terms;

    Polynomial value(const LieAlgebraSpec& sl) const;
    std::string str(const LieAlgebraSpec& sl) const;
};

// Closed-form bracket of two Cartan-commutant generators, assembled from
// root combinatorics and the structure table only (no differentiation):
// the mutual-inverse path and the degree-2 path realize the specialized
// formulas; the general path covers the remaining cycle pairs.
Polynomial cartan_pair_bracket(const LieAlgebraSpec& sl, const CycleGenerator& p,
                               const CycleGenerator& q);

// connectivity case label plus the labeled expansion; degree of p must be
// 2 or 3
BracketExpansion classify_bracket(const LieAlgebraSpec& sl, const CycleGenerator& p,
                                  const CycleGenerator& q);

// internal building block exposed for tests: the full root-pair expansion
BracketExpansion cycle_bracket_expansion(const LieAlgebraSpec& sl, const CycleGenerator& p,
                                         const CycleGenerator& q);

// greedy deterministic decomposition of a zero-sum root multiset into
// simple cycles
std::vector<CycleGenerator> cycle_decomposition(std::vector<Root> roots);

} // namespace pcalg

#endif
