#pragma once

#include "exobasis/multitile.hpp"

namespace exobasis {

/// Λ = ℤ^d.
Lattice integer_lattice(int d);

/// The dyadic interval I_j = [1 - 2^{1-j}, 1 - 2^{-j}); I_1, I_2, … tile
/// [0,1) from the left.
Rat dyadic_lo(int j);
Rat dyadic_hi(int j);

/// [0,1) plus I_j translated by j, for j = 1..J. A 2-subtile of ℝ whose
/// fibers are {0, j} on I_j; no certificate works on the full family.
MultiTileSet linear_tail_family(int J);

/// [0,1) plus I_j translated by 2j+1. Same shape with odd translates, so
/// (n=2, v=1) stays valid at every truncation level.
MultiTileSet odd_tail_family(int J);

/// [0,1) plus I_j translated by j·m_j, where m_j comes from
/// kronecker_search against the target phases (β₁, β₂). Throws
/// KroneckerSearchFailed(j) when some level finds no m_j within m_max.
MultiTileSet kronecker_tail_family(int J, double a1, double a2, double beta1, double beta2,
                                   double eps, long m_max);

/// Full fundamental domain at translates 0, e₁, 2e₁, …, (k-1)e₁: the
/// canonical exact k-tile.
MultiTileSet box_k_tile(int k, const Lattice& L);

} // namespace exobasis
