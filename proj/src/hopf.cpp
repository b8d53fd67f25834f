#include "qact/hopf.hpp"

namespace qact {

VerifyReport verify_hopf(const HopfStarAlgebra& H, const Tolerance& tol) {
    const StarAlgebra& A = H.algebra;
    const Eigen::Index d = A.dim;
    if (H.comult.rows() != d * d || H.comult.cols() != d || H.counit.size() != d ||
        H.antipode.rows() != d || H.antipode.cols() != d)
        throw DimensionMismatch("verify_hopf: tensor shapes");

    VerifyReport rep = verify_star_algebra(A, tol);
    const CMatrix I = CMatrix::Identity(d, d);
    const CMatrix& D = H.comult;
    const CMatrix& S = H.antipode;

    // Coassociativity (Delta (x) id) Delta = (id (x) Delta) Delta.
    rep.add("coassociativity", max_abs(CMatrix(kron(D, I) * D - kron(I, D) * D)));

    // Counit law.
    CMatrix epsT = H.counit.transpose();
    rep.add("counit_law_left", max_abs(CMatrix(kron(epsT, I) * D - I)));
    rep.add("counit_law_right", max_abs(CMatrix(kron(I, epsT) * D - I)));

    // Delta is a unital *-homomorphism into A (x) A.
    StarAlgebra AA = tensor_algebra(A, A);
    double hom = 0.0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            CVector lhs = D * A.mult.col(i * d + j);
            CVector rhs = AA.mul(D.col(i), D.col(j));
            hom = std::max(hom, max_abs(CVector(lhs - rhs)));
        }
    rep.add("comult_multiplicative", hom);
    rep.add("comult_unital", max_abs(CVector(D * A.unit - AA.unit)));
    rep.add("comult_star", max_abs(CMatrix(D * A.star - AA.star * D.conjugate())));

    // Counit is a unital *-homomorphism.
    double emul = 0.0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            emul = std::max(emul,
                            std::abs(apply(H.counit, A.mult.col(i * d + j)) -
                                     apply(H.counit, A.basis_vector(i)) *
                                         apply(H.counit, A.basis_vector(j))));
    rep.add("counit_multiplicative", emul);
    rep.add("counit_unital", std::abs(apply(H.counit, A.unit) - cplx(1.0)));
    rep.add("counit_star",
            max_abs(CVector(A.star.transpose() * H.counit - H.counit.conjugate())));

    // Antipode law m(S (x) id)Delta = unit . counit = m(id (x) S)Delta.
    CMatrix eta_eps = A.unit * epsT;
    rep.add("antipode_left", max_abs(CMatrix(A.mult * kron(S, I) * D - eta_eps)));
    rep.add("antipode_right", max_abs(CMatrix(A.mult * kron(I, S) * D - eta_eps)));

    // S(S(h)^*)^* = h.
    rep.add("antipode_star_formula",
            max_abs(CMatrix(A.star * S.conjugate() * A.star.conjugate() * S - I)));
    return rep;
}

HaarResult haar_state(const HopfStarAlgebra& H, const Tolerance& tol) {
    const StarAlgebra& A = H.algebra;
    const Eigen::Index d = A.dim;
    // Row (a, i) of the invariance system: sum_j Delta[a](i,j) phi_j -
    // unit_i phi_a = 0 (left), and with legs flipped (right).
    CMatrix sys(2 * d * d, d);
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index k = 0; k < d; ++k) {
                cplx left = H.comult(i * d + k, a);
                cplx right = H.comult(k * d + i, a);
                if (k == a) {
                    left -= A.unit(i);
                    right -= A.unit(i);
                }
                sys(a * d + i, k) = left;
                sys(d * d + a * d + i, k) = right;
            }
    CMatrix ker = kernel(sys, tol);
    HaarResult res;
    res.solution_space_dim = ker.cols();
    if (ker.cols() == 0) throw NoInvariantState(H.name());
    if (ker.cols() > 1) throw NonUniqueInvariantState(H.name());
    cplx norm = apply(Functional(ker.col(0)), A.unit);
    if (std::abs(norm) < tol.abs_tol)
        throw NoInvariantState(H.name() + ": invariant functional kills the unit");
    res.phi = ker.col(0) / norm;
    CMatrix gram = gram_matrix(A, res.phi);
    PsdResult p = is_psd(gram, tol);
    res.min_gram_eigenvalue = p.min_eigenvalue;
    res.positive_definite =
        p.hermiticity_residual <= tol.abs_tol && p.min_eigenvalue > tol.abs_tol;
    if (!res.positive_definite)
        throw HaarNotPositive(H.name() + ": Gram min eigenvalue " +
                              std::to_string(p.min_eigenvalue));
    return res;
}

Functional convolution(const Functional& omega, const Functional& theta,
                       const HopfStarAlgebra& H) {
    if (omega.size() != H.dim() || theta.size() != H.dim())
        throw DimensionMismatch("convolution");
    return H.comult.transpose() * kron(CVector(omega), CVector(theta));
}

Functional functional_star(const Functional& omega, const HopfStarAlgebra& H) {
    if (omega.size() != H.dim()) throw DimensionMismatch("functional_star");
    // omega^*(x) = conj(omega(S(x)^*)); S(x)^* acts as star * conj(S) on coords.
    CMatrix B = H.algebra.star * H.antipode.conjugate();
    return B.adjoint() * omega.conjugate();
}

HopfStarAlgebra dual_hopf(const HopfStarAlgebra& H) {
    const Eigen::Index d = H.dim();
    HopfStarAlgebra D;
    D.algebra.name = H.name().empty() ? "dual" : "dual(" + H.name() + ")";
    D.algebra.dim = d;
    D.algebra.basis.resize(d);
    for (Eigen::Index i = 0; i < d; ++i)
        D.algebra.basis[i] =
            (H.algebra.basis.empty() ? "e" + std::to_string(i) : H.algebra.basis[i]) + "^";
    D.algebra.mult = H.comult.transpose();
    D.algebra.unit = H.counit;
    D.algebra.star = (H.algebra.star * H.antipode.conjugate()).adjoint();
    D.comult = H.algebra.mult.transpose();
    D.counit = H.algebra.unit;
    D.antipode = H.antipode.transpose();
    return D;
}

HopfStarAlgebra coopposite(const HopfStarAlgebra& H) {
    HopfStarAlgebra C = H;
    C.algebra.name = H.name() + "^cop";
    const Eigen::Index d = H.dim();
    C.comult = swap_matrix(d, d) * H.comult;
    C.antipode = H.antipode.inverse();
    return C;
}

HopfStarAlgebra tensor_hopf(const HopfStarAlgebra& H, const HopfStarAlgebra& K) {
    const Eigen::Index a = H.dim(), b = K.dim(), d = a * b;
    HopfStarAlgebra T;
    T.algebra = tensor_algebra(H.algebra, K.algebra);
    // Delta_T(x (x) y) = (1 (x) swap (x) 1)(Delta x (x) Delta y).
    CMatrix mid = kron(CMatrix::Identity(a, a), kron(swap_matrix(a, b), CMatrix::Identity(b, b)));
    T.comult = mid * kron(H.comult, K.comult);
    T.counit = kron(CVector(H.counit), CVector(K.counit));
    T.antipode = kron(H.antipode, K.antipode);
    (void)d;
    return T;
}

CMatrix modular_automorphism(const HopfStarAlgebra& H, const Functional& phi,
                             const Tolerance& tol) {
    const StarAlgebra& A = H.algebra;
    const Eigen::Index d = A.dim;
    CMatrix P(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            P(i, j) = apply(phi, A.mult.col(i * d + j));
    if (numerical_rank(P, tol) < d)
        throw GramSingular("modular_automorphism: multiplication pairing singular");
    // phi(ab) = phi(b sigma(a))  <=>  P = sigma^T P^T.
    return P.inverse() * P.transpose();
}

int GroupTable::inverse(int g) const {
    for (int h = 0; h < order(); ++h)
        if (table[g][h] == 0) return h;
    throw NotAGroup(name + ": element " + std::to_string(g) + " has no inverse");
}

void GroupTable::validate() const {
    const int n = order();
    if (n == 0) throw NotAGroup("empty table");
    for (const auto& row : table) {
        if ((int)row.size() != n) throw NotAGroup(name + ": ragged table");
        for (int v : row)
            if (v < 0 || v >= n) throw NotAGroup(name + ": entry out of range");
    }
    for (int g = 0; g < n; ++g)
        if (table[0][g] != g || table[g][0] != g)
            throw NotAGroup(name + ": index 0 is not the identity");
    for (int g = 0; g < n; ++g) inverse(g);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw NotAGroup(name + ": associativity fails");
}

GroupTable cyclic_group(int n) {
    GroupTable g;
    g.name = "Z" + std::to_string(n);
    g.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    return g;
}

GroupTable product_group(const GroupTable& a, const GroupTable& b) {
    GroupTable g;
    g.name = a.name + "x" + b.name;
    const int na = a.order(), nb = b.order(), n = na * nb;
    g.table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int gi = i / nb, hi = i % nb, gj = j / nb, hj = j % nb;
            g.table[i][j] = a.table[gi][gj] * nb + b.table[hi][hj];
        }
    return g;
}

GroupTable symmetric_group_s3() {
    // Permutations of {0,1,2}; composition (p*q)(x) = p(q(x)); identity first.
    const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                             {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    auto find = [&](const int* p) {
        for (int k = 0; k < 6; ++k)
            if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2])
                return k;
        return -1;
    };
    GroupTable g;
    g.name = "S3";
    g.table.assign(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            g.table[i][j] = find(comp);
        }
    return g;
}

HopfStarAlgebra group_algebra(const GroupTable& g) {
    g.validate();
    const Eigen::Index n = g.order();
    HopfStarAlgebra H;
    H.algebra.name = "C[" + g.name + "]";
    H.algebra.dim = n;
    H.algebra.basis.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) H.algebra.basis[i] = "l" + std::to_string(i);
    H.algebra.mult = CMatrix::Zero(n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) H.algebra.mult(g.mul(a, b), a * n + b) = 1.0;
    H.algebra.unit = CVector::Zero(n);
    H.algebra.unit(0) = 1.0;
    H.algebra.star = CMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a) H.algebra.star(g.inverse(a), a) = 1.0;
    H.comult = CMatrix::Zero(n * n, n);
    for (int a = 0; a < n; ++a) H.comult(a * n + a, a) = 1.0;
    H.counit = CVector::Ones(n);
    H.antipode = CMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a) H.antipode(g.inverse(a), a) = 1.0;
    return H;
}

HopfStarAlgebra function_algebra(const GroupTable& g) {
    g.validate();
    const Eigen::Index n = g.order();
    HopfStarAlgebra H;
    H.algebra.name = "C(" + g.name + ")";
    H.algebra.dim = n;
    H.algebra.basis.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) H.algebra.basis[i] = "d" + std::to_string(i);
    H.algebra.mult = CMatrix::Zero(n, n * n);
    for (int a = 0; a < n; ++a) H.algebra.mult(a, a * n + a) = 1.0;
    H.algebra.unit = CVector::Ones(n);
    H.algebra.star = CMatrix::Identity(n, n);
    H.comult = CMatrix::Zero(n * n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) H.comult(a * n + b, g.mul(a, b)) += 1.0;
    H.counit = CVector::Zero(n);
    H.counit(0) = 1.0;
    H.antipode = CMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a) H.antipode(g.inverse(a), a) = 1.0;
    return H;
}

} // namespace qact
