#ifndef PCALG_GRADING_HPP
#define PCALG_GRADING_HPP

#include "pcalg/commutant.hpp"
#include "pcalg/lie_algebra.hpp"

#include <optional>
#include <set>
#include <vector>

namespace pcalg {

// Finite set of per-block factor-count tuples; one tuple per homogeneous
// component, duplicates collapse. Addition lifts to the Minkowski sum.
struct GradingSet {
    std::set<std::vector<int>> tuples;

    bool empty() const { return tuples.empty(); }
    bool singleton() const { return tuples.size() == 1; }
    bool subset_of(const GradingSet& other) const;
    GradingSet minkowski_sum(const GradingSet& other) const;
    std::string str() const;
};

// tuple counting the factors of each block per monomial, unioned over the
// monomials of p; the zero polynomial has no grading
GradingSet grade(const LieAlgebraSpec& spec, const Polynomial& p);

// Generic prediction from the block commutation table: for u in gp, v in gq,
// blocks r,s with u_r>0, v_s>0 and targets t of (r,s), collect
// u+v-e_r-e_s+e_t, discarding tuples with a negative entry. When
// invariant_block is set, (b,b) transfers are skipped (the commutant
// hypothesis of the two- and three-block lemmas).
GradingSet predict_bracket_grading(const BlockTable& table, const GradingSet& gp,
                                   const GradingSet& gq,
                                   std::optional<int> invariant_block = std::nullopt);
GradingSet predict_bracket_grading(const LieAlgebraSpec& spec, const GradingSet& gp,
                                   const GradingSet& gq);

// Pair-specific sound bound on grade({p,q}) for invariant p, q:
//  - a transfer (r,s)->t is admitted only when coordinate pairs actually
//    occurring in (p,q) bracket into block t,
//  - monomials supported entirely inside the subalgebra contribute nothing
//    against the invariant partner, so they are dropped on one side at a
//    time and the two bounds intersected.
// Every Leibniz term of the bracket is covered, so candidate pruning with
// this bound never loses a solution.
GradingSet bracket_grading_bound(const LieAlgebraSpec& spec, const std::string& sub,
                                 const Polynomial& p, const Polynomial& q);

// All multisets of generators with total degree d whose product grading is
// a subset of target; deterministic order (generator-index multisets,
// lexicographic). d <= 0 yields nothing (constants are excluded).
std::vector<std::vector<int>> admissible_products(const LieAlgebraSpec& spec,
                                                  const GeneratorSet& gens, int d,
                                                  const GradingSet& target);

// all generator multisets of total degree d (the compact-form enumeration)
std::vector<std::vector<int>> all_products(const GeneratorSet& gens, int d);

// Comparison-table counts for the bracket class {q_k, q_l}:
// unpruned = number of generator multisets of degree k+l-1;
// pruned = max over concrete pairs (p,q) in q_k x q_l, p != q, of the
// admissible-product count under the refined pair bound.
long count_unpruned(const GeneratorSet& gens, int k, int l);
long count_pruned(const LieAlgebraSpec& spec, const std::string& sub, const GeneratorSet& gens,
                  int k, int l);

} // namespace pcalg

#endif
