#ifndef PCALG_LIE_ALGEBRA_HPP
#define PCALG_LIE_ALGEBRA_HPP

#include "pcalg/polynomial.hpp"
#include "pcalg/scalar.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace pcalg {

struct lie_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sparse structure constants and the data hanging off them. The table is
// stored for i<j only; antisymmetric completion is implicit. Basis order is
// part of the spec: it fixes the monomial order everywhere downstream.
class LieAlgebraSpec {
  public:
    LieAlgebraSpec() = default;
    LieAlgebraSpec(std::string name, std::vector<std::string> basis);

    const std::string& name() const { return name_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    int index_of(const std::string& coord) const;  // -1 when absent

    // declare C_ij^k += c for i<j (callers may pass i>j; the sign flips)
    void set_bracket_term(int i, int j, int k, const Scalar& c);
    // coefficients of {x_i, x_j} as (k, C_ij^k) pairs, any i, j
    std::vector<std::pair<int, Scalar>> bracket_coords(int i, int j) const;
    // {x_i, x_j} as a polynomial
    Polynomial bracket_poly(int i, int j) const;

    void add_subalgebra(const std::string& name, std::vector<int> indices);
    const std::map<std::string, std::vector<int>>& subalgebras() const { return subalgebras_; }
    const std::vector<int>& subalgebra(const std::string& name) const;

    void set_blocks(std::vector<std::vector<int>> blocks);
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    size_t block_count() const { return blocks_.size(); }
    int block_of(int index) const;  // -1 when no blocks declared

    // true when {x_i, x_j} is a multiple of x_j for every j
    bool acts_diagonally(int i) const;
    // eigenvalue of {x_cartan, x_j} = w * x_j; throws when x_j is not an
    // eigenvector of the action
    Scalar weight(int cartan, int j) const;

  private:
    std::string name_;
    std::vector<std::string> basis_;
    std::map<std::string, int> index_;
    // key (i,j) with i<j; value: sorted (k, c) pairs
    std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> structure_;
    std::map<std::string, std::vector<int>> subalgebras_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

// Which blocks receive nonzero structure constants from each block pair.
class BlockTable {
  public:
    BlockTable() = default;
    explicit BlockTable(const LieAlgebraSpec& spec);
    BlockTable(size_t nblocks, std::map<std::pair<int, int>, std::set<int>> targets)
        : nblocks_(nblocks), targets_(std::move(targets)) {}

    size_t block_count() const { return nblocks_; }
    const std::set<int>& targets(int r, int s) const;

  private:
    size_t nblocks_ = 0;
    std::map<std::pair<int, int>, std::set<int>> targets_;
    static const std::set<int> empty_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Antisymmetry (structural + diagonal entries), exact Jacobi scan over all
// triples, closure of each declared subalgebra, block partition sanity.
ValidationReport validate(const LieAlgebraSpec& spec);

// sl(n+1, C): basis h_1..h_n, then e_{ij} for i<j and i>j in lexicographic
// order; brackets from [E_ij, E_kl] = d_jk E_il - d_li E_kj with the
// trace-zero Cartan convention H_i = E_ii - E_{i+1,i+1}.
// Blocks: (Cartan, positive, negative). Subalgebras: "cartan", "positive"
// (aliased "o3" for n = 2).
LieAlgebraSpec make_sl(int nplus1);

// su(3) in the angular-momentum basis (l0, l+1, l-1, j0, j+1, j-1, j+2, j-2)
// with surd structure constants; blocks (g1 = span l, g2 = span j) and
// subalgebra "so3" = g1.
LieAlgebraSpec make_su3_elliott();

// builtin lookup: "su3-elliott", "sl3", "sl4", "sl<k>"
LieAlgebraSpec make_builtin(const std::string& name);

LieAlgebraSpec spec_from_json_text(const std::string& text);
std::string spec_to_json_text(const LieAlgebraSpec& spec);

Polynomial polynomial_from_json_text(const std::string& text, size_t dim);
std::string polynomial_to_json_text(const Polynomial& p);

} // namespace pcalg

#endif
