#pragma once

#include <string>
#include <vector>

#include "qact/numlin.hpp"
#include "qact/report.hpp"

namespace qact {

/// Finite-dimensional associative *-algebra over C given by structure
/// constants. Coefficient vectors are columns; linear maps C^a -> C^b are
/// b x a matrices. Index conventions for tensor legs are row-major:
/// e_i (x) e_j of A (x) B sits at flat index i*dim(B)+j.
///
///  - mult: d x d^2, column i*d+j holds the coefficients of e_i e_j.
///  - unit: coefficients of 1.
///  - star: conjugate-linear action matrix, a^* = star * conj(a).
struct StarAlgebra {
    std::string name;
    Eigen::Index dim = 0;
    std::vector<std::string> basis;
    CMatrix mult;   // d x d^2
    CVector unit;   // d
    CMatrix star;   // d x d (action matrix)

    CVector mul(const CVector& x, const CVector& y) const;
    CVector conj(const CVector& x) const { return star * x.conjugate(); }
    CVector basis_vector(Eigen::Index i) const;
    /// Left-multiplication operator L_x (d x d).
    CMatrix lmul(const CVector& x) const;
    /// Right-multiplication operator R_x (d x d).
    CMatrix rmul(const CVector& x) const;
};

/// Linear functional as a covector; omega(a) = omega^T a (no conjugation).
using Functional = CVector;

inline cplx apply(const Functional& omega, const CVector& a) {
    return (omega.transpose() * a)(0);
}

/// Structure-constant axioms: associativity, unit law, star involutivity and
/// anti-multiplicativity, finiteness.
VerifyReport verify_star_algebra(const StarAlgebra& A, const Tolerance& tol = {});

/// Componentwise tensor product *-algebra A (x) B.
StarAlgebra tensor_algebra(const StarAlgebra& A, const StarAlgebra& B);

/// Opposite algebra (same space and star, reversed product).
StarAlgebra opposite_algebra(const StarAlgebra& A);

/// Full matrix algebra M_n with matrix-unit basis E_{ij} at index i*n+j.
StarAlgebra matrix_algebra(Eigen::Index n, const std::string& name = "");

/// Restriction of A to the span of the given independent columns. The span
/// must be closed under product, star and contain the unit within tol; the
/// report records the worst closure residual.
StarAlgebra subalgebra(const StarAlgebra& A, const CMatrix& span,
                       const Tolerance& tol = {}, double* closure_residual = nullptr,
                       const std::string& name = "");

/// Quotient by a two-sided *-ideal given by a spanning set of columns.
StarAlgebra quotient_algebra(const StarAlgebra& A, const CMatrix& ideal_span,
                             const Tolerance& tol = {}, CMatrix* projection = nullptr);

/// Left-regular trace tau(a) = Tr(L_a); faithful positive exactly on
/// semisimple finite-dimensional *-algebras.
Functional regular_trace(const StarAlgebra& A);

/// Gram matrix G_ij = phi(e_i^* e_j).
CMatrix gram_matrix(const StarAlgebra& A, const Functional& phi);

/// Orthonormalize the columns of `vectors` with respect to the standard
/// inner product, dropping numerically dependent columns.
CMatrix orthonormalize(const CMatrix& vectors, const Tolerance& tol = {});

/// Coefficients of x in the given (independent-column) basis, least squares;
/// sets residual to the out-of-span error if requested.
CVector expand_in_basis(const CMatrix& basis, const CVector& x, double* residual = nullptr);

} // namespace qact
