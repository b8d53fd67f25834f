#pragma once

#include "qact/algebra.hpp"
#include "qact/report.hpp"

namespace qact {

/// Finite-dimensional Hopf *-algebra by structure constants.
///  - comult: d^2 x d, column i holds Delta(e_i) with e_j (x) e_k at j*d+k.
///  - counit: covector.
///  - antipode: d x d linear action matrix.
struct HopfStarAlgebra {
    StarAlgebra algebra;
    CMatrix comult;    // d^2 x d
    Functional counit; // d
    CMatrix antipode;  // d x d

    Eigen::Index dim() const { return algebra.dim; }
    const std::string& name() const { return algebra.name; }
    CVector comul(const CVector& x) const { return comult * x; }
};

/// Per-axiom residual report over all Hopf *-algebra axioms.
VerifyReport verify_hopf(const HopfStarAlgebra& H, const Tolerance& tol = {});

struct HaarResult {
    Functional phi;
    Eigen::Index solution_space_dim = 0;
    double min_gram_eigenvalue = 0.0;
    bool positive_definite = false;
};

/// Unique bi-invariant normalized functional; solves the joint linear system
/// {left invariance, right invariance, phi(1)=1} and certifies faithfulness
/// via the Gram form. Throws NoInvariantState / NonUniqueInvariantState /
/// HaarNotPositive.
HaarResult haar_state(const HopfStarAlgebra& H, const Tolerance& tol = {});

/// Convolution product (omega * theta)(x) = (omega (x) theta) Delta(x).
Functional convolution(const Functional& omega, const Functional& theta,
                       const HopfStarAlgebra& H);

/// Convolution involution omega^*(x) = conj(omega(S(x)^*)).
Functional functional_star(const Functional& omega, const HopfStarAlgebra& H);

/// Dual Hopf *-algebra on the dual basis.
HopfStarAlgebra dual_hopf(const HopfStarAlgebra& H);

/// Co-opposite Hopf *-algebra (flipped coproduct, antipode inverted).
HopfStarAlgebra coopposite(const HopfStarAlgebra& H);

/// Tensor product Hopf *-algebra H (x) K.
HopfStarAlgebra tensor_hopf(const HopfStarAlgebra& H, const HopfStarAlgebra& K);

/// Nakayama automorphism of a faithful positive functional:
/// phi(ab) = phi(b sigma(a)). Throws GramSingular.
CMatrix modular_automorphism(const HopfStarAlgebra& H, const Functional& phi,
                             const Tolerance& tol = {});

// --- Finite groups -----------------------------------------------------

/// Multiplication table, table[g][h] = g*h, identity at index 0.
struct GroupTable {
    std::string name;
    std::vector<std::vector<int>> table;
    int order() const { return (int)table.size(); }
    int mul(int g, int h) const { return table[g][h]; }
    int inverse(int g) const;
    void validate() const; // throws NotAGroup
};

GroupTable cyclic_group(int n);
GroupTable product_group(const GroupTable& a, const GroupTable& b);
GroupTable symmetric_group_s3();

/// Group algebra C[Gamma]: grouplike basis lambda_g.
HopfStarAlgebra group_algebra(const GroupTable& g);

/// Function algebra C(Gamma): Dirac basis delta_g, coproduct from the table.
HopfStarAlgebra function_algebra(const GroupTable& g);

} // namespace qact
