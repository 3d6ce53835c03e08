#ifndef PCALG_CHAINS_HPP
#define PCALG_CHAINS_HPP

#include "pcalg/closure.hpp"
#include "pcalg/commutant.hpp"
#include "pcalg/lie_algebra.hpp"

#include <string>
#include <vector>

namespace pcalg {

// A reduction chain: algebra, subalgebra, and a reference generator basis
// for its commutant.
struct Chain {
    std::string name;
    LieAlgebraSpec spec;
    std::string sub;
    GeneratorSet gens;
};

// Built-ins: "elliott" (so3 in su3, generators M1..M6), "elliott-B" (same,
// relabeled by grading), "o3sl3" (nilpotent o3 in sl3, A1..A6),
// "cartan-sl3", "racah-cfg" (its c/f/g basis), "cartan-sl4".
Chain make_chain(const std::string& name);

std::vector<std::string> chain_names();

} // namespace pcalg

#endif
