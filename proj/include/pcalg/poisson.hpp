#ifndef PCALG_POISSON_HPP
#define PCALG_POISSON_HPP

#include "pcalg/lie_algebra.hpp"
#include "pcalg/polynomial.hpp"

namespace pcalg {

// {p,q} = sum C_ij^k x_k dp/dx_i dq/dx_j, computed by bilinear expansion
// over the coordinate pairs occurring in the terms, with the structure
// table; exact.
Polynomial poisson_bracket(const LieAlgebraSpec& spec, const Polynomial& p, const Polynomial& q);

// ad*_{x_m}(p) = {x_m, p}
Polynomial coadjoint_action(const LieAlgebraSpec& spec, int m, const Polynomial& p);

} // namespace pcalg

#endif
