#pragma once

#include "vogel/permutation.hpp"
#include "vogel/sinh_product.hpp"

namespace vogel {

/// Quantum dimension of the adjoint representation.
SinhProduct adjoint_qdim();

/// Classical dimension of Y2(beta) (Rational mode).
SinhProduct y2_beta_dim();

/// Classical dimension of the Cartan product of the adjoint with Y2
/// (Rational mode), written in the slot order (gamma, beta, alpha).
SinhProduct adj2_y2_cartan_dim();

/// Quantum dimension of the Cartan product of k adjoints and l copies of
/// Y2(beta). Throws InvalidFamilyParameter on negative k or l.
SinhProduct build_Z(int k, int l, const Permutation& sigma = Permutation());

/// Quantum dimension of the Cartan product of k copies of X2 and n adjoints.
SinhProduct build_X(int k, int n, const Permutation& sigma = Permutation());

}  // namespace vogel
