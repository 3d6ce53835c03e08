#ifndef PCALG_COMMUTANT_HPP
#define PCALG_COMMUTANT_HPP

#include "pcalg/lie_algebra.hpp"
#include "pcalg/linalg.hpp"
#include "pcalg/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pcalg {

struct Generator {
    int degree = 0;
    std::string label;
    Polynomial poly;
};

// Ordered set of indecomposable invariant generators, echelon-normalized
// per degree batch.
struct GeneratorSet {
    std::vector<Generator> generators;
    int max_degree = 0;

    std::vector<int> per_degree_counts() const;  // l_1..l_maxdeg
    std::vector<const Generator*> of_degree(int k) const;
    const Generator* find(const std::string& label) const;
};

// All monomials of total degree k in dim variables, leading (grlex) first.
std::vector<Monomial> monomials_of_degree(size_t dim, int k);

// Exact basis of S^k(g)^a: nullspace of the stacked coadjoint maps of the
// subalgebra generators, echelon-normalized under graded lex. Generators of
// the subalgebra that act diagonally only filter the candidate monomials
// (their action is multiplication by the monomial weight).
std::vector<Polynomial> invariant_space(const LieAlgebraSpec& spec, const std::string& sub, int k);

// Complement basis of invariant_space(k) modulo products of lower-degree
// generators of total degree k: the indecomposable new generators.
std::vector<Polynomial> new_generators(const LieAlgebraSpec& spec, const std::string& sub, int k,
                                       const GeneratorSet& lower);

GeneratorSet build_generating_set(const LieAlgebraSpec& spec, const std::string& sub,
                                  int max_degree);

// N(g) = dim g - generic rank of A_ij = sum C_ij^l x_l, sampled at several
// seeded random rational points (max over samples).
int independent_solution_count(const LieAlgebraSpec& spec, uint64_t seed = 12345);

// N(a) = dim g - dim a + l0 with l0 supplied by the caller
int expected_label_count(const LieAlgebraSpec& spec, const std::string& sub, int l0);

// true iff p is in the linear span of the given polynomials (exact)
bool in_span(const std::vector<Polynomial>& basis, const Polynomial& p);

// sparse coefficient row of p over the columns enumerated by index_of
SparseRow poly_to_row(const Polynomial& p,
                      const std::map<Monomial, int, GrlexGreater>& index_of);

std::string generators_to_json_text(const GeneratorSet& gens);
GeneratorSet generators_from_json_text(const std::string& text, size_t dim);

} // namespace pcalg

#endif
