#pragma once

#include "qact/hopf.hpp"

namespace qact {

/// Matrix corepresentation U in B(H) (x) O(G), stored as algebra-coefficient
/// slices: U = sum_k slice[k] (x) e_k, so U_ij = sum_k slice[k](i,j) e_k.
/// The carrier Hilbert space may have a non-standard Gram matrix
/// (inner_product), e.g. for conjugates and regular corepresentations.
struct Corepresentation {
    const HopfStarAlgebra* hopf = nullptr;
    Eigen::Index n = 0;
    std::vector<CMatrix> slices;  // dim(G) matrices of size n x n
    CMatrix inner_product;        // n x n PD Hermitian; identity by default

    CVector entry(Eigen::Index i, Eigen::Index j) const; // U_ij in O(G)
    static Corepresentation from_entries(const HopfStarAlgebra& H,
                                         const std::vector<std::vector<CVector>>& U);
};

/// Positive intertwiner normalized by Tr Q = Tr Q^{-1}; dim_q = Tr Q.
struct QMatrix {
    CMatrix q;
    double dim_q = 0.0;
};

Corepresentation trivial_corep(const HopfStarAlgebra& H);

/// Right regular corepresentation (Delta on H itself, Haar Gram).
Corepresentation regular_corep(const HopfStarAlgebra& H, const Functional& haar);

/// Corepresentation identity, counit condition and unitarity residuals.
VerifyReport verify_corep(const Corepresentation& U, const Tolerance& tol = {});

Corepresentation tensor(const Corepresentation& U, const Corepresentation& V);
Corepresentation direct_sum(const Corepresentation& U, const Corepresentation& V);

/// Conjugate corepresentation on the dual space with the transported inner
/// product <<xi*, eta*>> = <eta, Q xi>. Q must intertwine U with its double
/// contragredient (S^2-twist); throws QNotIntertwining.
Corepresentation conjugate(const Corepresentation& U, const QMatrix& Q,
                           const Tolerance& tol = {});

/// Orthonormal basis (Hilbert-Schmidt) of Mor(U, V) = {T : V(T (x) 1) = (T (x) 1)U}.
std::vector<CMatrix> intertwiners(const Corepresentation& U, const Corepresentation& V,
                                  const Tolerance& tol = {});

struct CorepComponent {
    Corepresentation irrep;
    Eigen::Index multiplicity = 0;
    /// Isometries H_irrep -> H_U, one per copy, each in Mor(irrep, U),
    /// with pairwise orthogonal ranges.
    std::vector<CMatrix> isometries;
};

/// Decomposition into pairwise non-isomorphic irreducible components.
std::vector<CorepComponent> decompose(const Corepresentation& U,
                                      const Tolerance& tol = {},
                                      std::uint64_t seed = 0);

/// Complete list of irreducibles via the regular corepresentation, ordered by
/// (dim, rounded trace vector).
std::vector<Corepresentation> irreducibles(const HopfStarAlgebra& H,
                                           const Functional& haar,
                                           const Tolerance& tol = {},
                                           std::uint64_t seed = 0);

/// Canonical Q from the Haar orthogonality relations of an irreducible.
QMatrix q_matrix(const Corepresentation& U, const Functional& haar,
                 const Tolerance& tol = {});

/// chi_pi = Tr(Q) sum_i U(e_i, Q^{-1} e_i) as an element of O(G).
CVector character(const Corepresentation& U, const QMatrix& Q);

/// p_pi = phi(. chi_pi^*), a minimal central projection in the dual algebra.
Functional central_projection(const Corepresentation& U, const QMatrix& Q,
                              const Functional& haar);

/// dim Mor(U, U) == 1.
bool is_irreducible(const Corepresentation& U, const Tolerance& tol = {});

/// Unitary intertwiner certifying U ~= V (polar decomposition of any
/// invertible morphism); empty matrix when not isomorphic.
CMatrix isomorphism(const Corepresentation& U, const Corepresentation& V,
                    const Tolerance& tol = {});

/// Replace the carrier basis so the Gram becomes the identity.
Corepresentation orthonormalize_corep(const Corepresentation& U, CMatrix* change = nullptr);

} // namespace qact
