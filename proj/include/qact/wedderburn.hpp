#pragma once

#include <cstdint>

#include "qact/algebra.hpp"

namespace qact {

/// One simple summand of a semisimple *-algebra, with an explicit
/// *-isomorphism onto an n x n matrix block realized as the left action on a
/// minimal left ideal (Gram-orthonormalized, so stars map to adjoints).
struct WedderburnBlock {
    Eigen::Index n = 0;          // block size
    CVector central_idempotent;  // minimal central projection z_k
    CMatrix rep;                 // (n*n) x dim; col i = phi(e_i) flattened row-major
    CMatrix ideal_basis;         // dim x n; G-orthonormal basis of the minimal left ideal

    /// phi(x) as an n x n matrix.
    CMatrix apply(const CVector& x) const;
    /// Element of the block mapped by phi to the matrix m.
    CVector element_for(const CMatrix& m, const StarAlgebra& A) const;
};

/// Full Wedderburn decomposition. `phi` is the faithful positive functional
/// whose Gram certifies semisimplicity; defaults to the left-regular trace.
/// Blocks are sorted by (n, rounded trace vector). Throws NotSemisimple when
/// the Gram form is not positive definite.
std::vector<WedderburnBlock> wedderburn_blocks(const StarAlgebra& A,
                                               const Tolerance& tol = {},
                                               const Functional* phi = nullptr,
                                               std::uint64_t seed = 0);

/// Orthonormal basis of the center (kernel of all commutators).
CMatrix center_basis(const StarAlgebra& A, const Tolerance& tol = {});

} // namespace qact
