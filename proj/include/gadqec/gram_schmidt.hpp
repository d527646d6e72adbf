#pragma once

#include <vector>

#include "gadqec/sparse_state.hpp"

namespace gadqec {

/// Completes a set of pairwise orthonormal vectors to a full orthonormal
/// basis of the dim-dimensional space, returning exactly dim - given.size()
/// new vectors.
///
/// Candidates are the computational basis vectors e_0, e_1, ... in index
/// order; a candidate is skipped when its residual after projection has
/// norm below 1e-10. Projections are applied twice (modified Gram-Schmidt
/// with re-orthogonalization).
///
/// Throws if the given vectors fail pairwise orthonormality by more
/// than tol.
std::vector<SparseState> gram_schmidt_complete(const std::vector<SparseState>& given,
                                               std::size_t dim, double tol);

}  // namespace gadqec
