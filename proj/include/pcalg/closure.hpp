#ifndef PCALG_CLOSURE_HPP
#define PCALG_CLOSURE_HPP

#include "pcalg/commutant.hpp"
#include "pcalg/grading.hpp"
#include "pcalg/lie_algebra.hpp"

#include <string>
#include <vector>

namespace pcalg {

struct RelationTerm {
    Scalar coeff;
    std::vector<std::string> factors;  // generator labels, multiset
};

// {u,v} = sum coeff * product(factors) + residual, exactly
struct BracketRelation {
    std::string u, v;
    std::vector<RelationTerm> terms;
    Polynomial residual;
    bool closed() const { return residual.is_zero(); }
    std::string str() const;
};

struct ClosureResult {
    std::vector<BracketRelation> relations;
    std::vector<std::string> center;  // labels whose brackets all vanish
    int algebra_degree = 0;           // max # of non-central factors in any term
    bool all_closed() const;
};

// Solves the coefficients of {u,v} over candidate generator products:
// grading-pruned candidates when use_grading, otherwise every product of
// the right degree. Candidate order prefers lower-degree factors, then
// label order; dependent candidates resolve to the earliest ones.
BracketRelation close_pair(const LieAlgebraSpec& spec, const std::string& sub,
                           const GeneratorSet& gens, const std::string& u, const std::string& v,
                           bool use_grading = true);

ClosureResult close_all(const LieAlgebraSpec& spec, const std::string& sub,
                        const GeneratorSet& gens, bool use_grading = true, int threads = 1);

// Named invertible basis changes over a generator set: "identity",
// "elliott-B" (relabel by grading), "racah-cfg" (the c/f/g basis of the
// sl(3) Cartan chain). Throws on unknown names or singular transforms.
GeneratorSet rebase_generators(const GeneratorSet& gens, const std::string& transform);

// polynomial syzygies among the degree-d products of the generators
std::vector<std::string> product_syzygies(const LieAlgebraSpec& spec, const GeneratorSet& gens,
                                          int d);

std::string relations_to_json_text(const std::vector<BracketRelation>& relations);

} // namespace pcalg

#endif
