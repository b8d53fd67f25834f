#include "qact/corep.hpp"

#include <algorithm>
#include <cmath>

namespace qact {

namespace {

std::vector<CMatrix> star_slices(const Corepresentation& U) {
    // (U^*)_ij = (U_ji)^*; slices C_m = sum_k star(m,k) conj(slices[k])^T... as
    // matrices: C_m = sum_k star(m,k) slices[k]^dagger.
    const auto& A = U.hopf->algebra;
    std::vector<CMatrix> out((std::size_t)A.dim, CMatrix::Zero(U.n, U.n));
    for (Eigen::Index m = 0; m < A.dim; ++m)
        for (Eigen::Index k = 0; k < A.dim; ++k)
            if (A.star(m, k) != cplx(0)) out[m] += A.star(m, k) * U.slices[k].adjoint();
    return out;
}

// Product of two slice families as elements of B(H) (x) O(G).
std::vector<CMatrix> slice_product(const HopfStarAlgebra& H,
                                   const std::vector<CMatrix>& X,
                                   const std::vector<CMatrix>& Y) {
    const Eigen::Index d = H.dim(), n = X[0].rows();
    std::vector<CMatrix> out((std::size_t)d, CMatrix::Zero(n, n));
    for (Eigen::Index k = 0; k < d; ++k)
        for (Eigen::Index l = 0; l < d; ++l) {
            CMatrix prod = X[k] * Y[l];
            for (Eigen::Index m = 0; m < d; ++m) {
                const cplx c = H.algebra.mult(m, k * d + l);
                if (c != cplx(0)) out[m] += c * prod;
            }
        }
    return out;
}

std::vector<double> corep_trace_vector(const Corepresentation& U) {
    std::vector<double> tv;
    tv.reserve(2 * U.slices.size());
    for (const auto& s : U.slices) {
        cplx t = s.trace();
        tv.push_back(std::round(t.real() * 1e6) / 1e6);
        tv.push_back(std::round(t.imag() * 1e6) / 1e6);
    }
    return tv;
}

} // namespace

CVector Corepresentation::entry(Eigen::Index i, Eigen::Index j) const {
    CVector v(hopf->dim());
    for (Eigen::Index k = 0; k < hopf->dim(); ++k) v(k) = slices[(std::size_t)k](i, j);
    return v;
}

Corepresentation Corepresentation::from_entries(
    const HopfStarAlgebra& H, const std::vector<std::vector<CVector>>& U) {
    Corepresentation c;
    c.hopf = &H;
    c.n = (Eigen::Index)U.size();
    c.inner_product = CMatrix::Identity(c.n, c.n);
    c.slices.assign((std::size_t)H.dim(), CMatrix::Zero(c.n, c.n));
    for (Eigen::Index i = 0; i < c.n; ++i)
        for (Eigen::Index j = 0; j < c.n; ++j)
            for (Eigen::Index k = 0; k < H.dim(); ++k)
                c.slices[(std::size_t)k](i, j) = U[(std::size_t)i][(std::size_t)j](k);
    return c;
}

Corepresentation trivial_corep(const HopfStarAlgebra& H) {
    Corepresentation c;
    c.hopf = &H;
    c.n = 1;
    c.inner_product = CMatrix::Identity(1, 1);
    c.slices.assign((std::size_t)H.dim(), CMatrix::Zero(1, 1));
    for (Eigen::Index k = 0; k < H.dim(); ++k) c.slices[(std::size_t)k](0, 0) = H.algebra.unit(k);
    return c;
}

Corepresentation regular_corep(const HopfStarAlgebra& H, const Functional& haar) {
    const Eigen::Index d = H.dim();
    Corepresentation c;
    c.hopf = &H;
    c.n = d;
    c.slices.assign((std::size_t)d, CMatrix::Zero(d, d));
    // Delta(e_j) = sum_{i,k} comult(i*d+k, j) e_i (x) e_k -> U_ij = sum_k D(i*d+k,j) e_k.
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index k = 0; k < d; ++k)
                c.slices[(std::size_t)k](i, j) = H.comult(i * d + k, j);
    c.inner_product = gram_matrix(H.algebra, haar);
    return c;
}

VerifyReport verify_corep(const Corepresentation& U, const Tolerance& tol) {
    VerifyReport rep;
    rep.tol = tol.abs_tol;
    const HopfStarAlgebra& H = *U.hopf;
    const Eigen::Index d = H.dim(), n = U.n;
    if ((Eigen::Index)U.slices.size() != d)
        throw DimensionMismatch("verify_corep: slice count");

    // Corepresentation identity Delta(U_ij) = sum_k U_ik (x) U_kj.
    double corep_res = 0.0;
    for (Eigen::Index p = 0; p < d; ++p)
        for (Eigen::Index q = 0; q < d; ++q) {
            CMatrix lhs = CMatrix::Zero(n, n);
            for (Eigen::Index m = 0; m < d; ++m) {
                const cplx c = H.comult(p * d + q, m);
                if (c != cplx(0)) lhs += c * U.slices[(std::size_t)m];
            }
            corep_res = std::max(corep_res,
                                 max_abs(CMatrix(lhs - U.slices[(std::size_t)p] *
                                                           U.slices[(std::size_t)q])));
        }
    rep.add("corep_identity", corep_res);

    // Counit condition (id (x) eps)U = id.
    CMatrix eps_applied = CMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < d; ++k)
        eps_applied += H.counit(k) * U.slices[(std::size_t)k];
    rep.add("counit_condition", max_abs(CMatrix(eps_applied - CMatrix::Identity(n, n))));

    // Unitarity with respect to the carrier Gram P: U^*(P (x) 1)U = P (x) 1
    // and U(P^{-1} (x) 1)U^* = P^{-1} (x) 1.
    const CMatrix& P = U.inner_product;
    auto scale = [&](const std::vector<CMatrix>& S, const CMatrix& M, bool left) {
        std::vector<CMatrix> out = S;
        for (auto& s : out) s = left ? CMatrix(M * s) : CMatrix(s * M);
        return out;
    };
    std::vector<CMatrix> Ust = star_slices(U);
    // U^* P U:
    std::vector<CMatrix> t1 = slice_product(H, scale(Ust, P, false), U.slices);
    double uni1 = 0.0;
    for (Eigen::Index k = 0; k < d; ++k)
        uni1 = std::max(uni1, max_abs(CMatrix(t1[(std::size_t)k] - P * H.algebra.unit(k))));
    rep.add("isometry", uni1);
    CMatrix Pinv = P.inverse();
    std::vector<CMatrix> t2 = slice_product(H, scale(U.slices, Pinv, false), Ust);
    double uni2 = 0.0;
    for (Eigen::Index k = 0; k < d; ++k)
        uni2 = std::max(uni2, max_abs(CMatrix(t2[(std::size_t)k] - Pinv * H.algebra.unit(k))));
    rep.add("counitarity", uni2);
    return rep;
}

Corepresentation tensor(const Corepresentation& U, const Corepresentation& V) {
    if (U.hopf != V.hopf) throw AlgebraMismatch("tensor: different Hopf algebras");
    const HopfStarAlgebra& H = *U.hopf;
    const Eigen::Index d = H.dim();
    Corepresentation W;
    W.hopf = U.hopf;
    W.n = U.n * V.n;
    W.inner_product = kron(U.inner_product, V.inner_product);
    W.slices.assign((std::size_t)d, CMatrix::Zero(W.n, W.n));
    for (Eigen::Index k = 0; k < d; ++k)
        for (Eigen::Index l = 0; l < d; ++l) {
            CMatrix kr = kron(U.slices[(std::size_t)k], V.slices[(std::size_t)l]);
            for (Eigen::Index m = 0; m < d; ++m) {
                const cplx c = H.algebra.mult(m, k * d + l);
                if (c != cplx(0)) W.slices[(std::size_t)m] += c * kr;
            }
        }
    return W;
}

Corepresentation direct_sum(const Corepresentation& U, const Corepresentation& V) {
    if (U.hopf != V.hopf) throw AlgebraMismatch("direct_sum: different Hopf algebras");
    Corepresentation W;
    W.hopf = U.hopf;
    W.n = U.n + V.n;
    W.inner_product = CMatrix::Zero(W.n, W.n);
    W.inner_product.topLeftCorner(U.n, U.n) = U.inner_product;
    W.inner_product.bottomRightCorner(V.n, V.n) = V.inner_product;
    W.slices.assign(U.slices.size(), CMatrix::Zero(W.n, W.n));
    for (std::size_t k = 0; k < U.slices.size(); ++k) {
        W.slices[k].topLeftCorner(U.n, U.n) = U.slices[k];
        W.slices[k].bottomRightCorner(V.n, V.n) = V.slices[k];
    }
    return W;
}

Corepresentation conjugate(const Corepresentation& U, const QMatrix& Q,
                           const Tolerance& tol) {
    const HopfStarAlgebra& H = *U.hopf;
    const Eigen::Index d = H.dim();
    // Q must implement the S^2 twist: S^2(U_ij) = (Q^{-1} U Q)_ij.
    CMatrix S2 = H.antipode * H.antipode;
    CMatrix Qinv = Q.q.inverse();
    double res = 0.0;
    for (Eigen::Index m = 0; m < d; ++m) {
        CMatrix lhs = CMatrix::Zero(U.n, U.n);
        for (Eigen::Index k = 0; k < d; ++k)
            if (S2(m, k) != cplx(0)) lhs += S2(m, k) * U.slices[(std::size_t)k];
        res = std::max(res, max_abs(CMatrix(lhs - Qinv * U.slices[(std::size_t)m] * Q.q)));
    }
    if (res > 100 * tol.abs_tol)
        throw QNotIntertwining("conjugate: S^2 twist residual " + std::to_string(res));

    Corepresentation C;
    C.hopf = U.hopf;
    C.n = U.n;
    // delta_bar(xi^*) = delta(xi)^*: in the conjugate basis f_i = e_i^*,
    // Ubar_ij = (U_ij)^*.
    C.slices.assign((std::size_t)d, CMatrix::Zero(U.n, U.n));
    const auto& A = H.algebra;
    for (Eigen::Index m = 0; m < d; ++m)
        for (Eigen::Index k = 0; k < d; ++k)
            if (A.star(m, k) != cplx(0))
                C.slices[(std::size_t)m] += A.star(m, k) * U.slices[(std::size_t)k].conjugate();
    // <<f_i, f_j>> = <e_j, Q e_i> = Q^T(i,j).
    C.inner_product = Q.q.transpose();
    return C;
}

std::vector<CMatrix> intertwiners(const Corepresentation& U, const Corepresentation& V,
                                  const Tolerance& tol) {
    if (U.hopf != V.hopf) throw AlgebraMismatch("intertwiners");
    const Eigen::Index d = U.hopf->dim();
    const Eigen::Index n1 = U.n, n2 = V.n;
    // V_m T = T U_m for all m; vec (column-major) with vec(AXB) = (B^T (x) A)vec(X).
    CMatrix sys(d * n2 * n1, n2 * n1);
    for (Eigen::Index m = 0; m < d; ++m) {
        CMatrix lhs = kron(CMatrix::Identity(n1, n1), V.slices[(std::size_t)m]);
        CMatrix rhs = kron(CMatrix(U.slices[(std::size_t)m].transpose()),
                           CMatrix::Identity(n2, n2));
        sys.middleRows(m * n2 * n1, n2 * n1) = lhs - rhs;
    }
    CMatrix ker = kernel(sys, tol);
    std::vector<CMatrix> out;
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        CMatrix T(n2, n1);
        for (Eigen::Index j = 0; j < n1; ++j) T.col(j) = ker.col(c).segment(j * n2, n2);
        out.push_back(T);
    }
    return out;
}

bool is_irreducible(const Corepresentation& U, const Tolerance& tol) {
    return intertwiners(U, U, tol).size() == 1;
}

CMatrix isomorphism(const Corepresentation& U, const Corepresentation& V,
                    const Tolerance& tol) {
    if (U.n != V.n) return CMatrix();
    auto mor = intertwiners(U, V, tol);
    for (const auto& T : mor) {
        if (numerical_rank(T, tol) < U.n) continue;
        // Polar decomposition T = W P; W is a unitary morphism.
        Eigen::JacobiSVD<CMatrix> svd(T, Eigen::ComputeFullU | Eigen::ComputeFullV);
        return svd.matrixU() * svd.matrixV().adjoint();
    }
    return CMatrix();
}

Corepresentation orthonormalize_corep(const Corepresentation& U, CMatrix* change) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(U.inner_product);
    if (es.eigenvalues().minCoeff() <= 0)
        throw InvalidInput("orthonormalize_corep: Gram not positive definite");
    CMatrix half = es.eigenvectors() *
                   es.eigenvalues().cwiseSqrt().asDiagonal() *
                   es.eigenvectors().adjoint();
    CMatrix invhalf = es.eigenvectors() *
                      es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                      es.eigenvectors().adjoint();
    Corepresentation W = U;
    for (auto& s : W.slices) s = half * s * invhalf;
    W.inner_product = CMatrix::Identity(U.n, U.n);
    if (change) *change = invhalf; // new basis vectors in old coordinates
    return W;
}

namespace {

// Recursive splitting into irreducible summands; carriers are orthonormal.
void split_irreducible(const Corepresentation& U, const CMatrix& embed,
                       std::vector<std::pair<Corepresentation, CMatrix>>& out,
                       const Tolerance& tol, std::uint64_t seed, int depth) {
    auto mor = intertwiners(U, U, tol);
    if (mor.size() == 1) {
        out.push_back({U, embed});
        return;
    }
    if (depth > 64) throw DecompositionUnstable("recursion depth exceeded");
    const double gap = std::max(10.0 * tol.abs_tol, 1e-8);
    for (std::uint64_t attempt = 0;; ++attempt) {
        if (attempt >= 5)
            throw DecompositionUnstable("commutant spectra kept clustering after 5 reseeds");
        Rng rng(seed + 7919 * (std::uint64_t)depth + attempt);
        CMatrix X = CMatrix::Zero(U.n, U.n);
        for (const auto& T : mor) X += rng.cgauss() * T;
        X = ((X + X.adjoint()) / 2.0).eval();
        Eigen::SelfAdjointEigenSolver<CMatrix> es(X);
        // Cluster sorted real eigenvalues.
        std::vector<std::pair<Eigen::Index, Eigen::Index>> groups; // [begin, end)
        Eigen::Index begin = 0;
        for (Eigen::Index i = 1; i <= U.n; ++i) {
            if (i == U.n || es.eigenvalues()(i) - es.eigenvalues()(i - 1) > gap) {
                groups.push_back({begin, i});
                begin = i;
            }
        }
        if (groups.size() < 2) continue;
        bool clustered = false;
        for (std::size_t g = 0; g + 1 < groups.size(); ++g)
            if (es.eigenvalues()(groups[g + 1].first) -
                    es.eigenvalues()(groups[g].second - 1) <
                gap * 2)
                clustered = true;
        if (clustered) continue;
        for (const auto& [b, e] : groups) {
            CMatrix V = es.eigenvectors().middleCols(b, e - b);
            Corepresentation sub;
            sub.hopf = U.hopf;
            sub.n = e - b;
            sub.inner_product = CMatrix::Identity(sub.n, sub.n);
            sub.slices.reserve(U.slices.size());
            for (const auto& s : U.slices) sub.slices.push_back(V.adjoint() * s * V);
            split_irreducible(sub, CMatrix(embed * V), out, tol, seed, depth + 1);
        }
        return;
    }
}

} // namespace

std::vector<CorepComponent> decompose(const Corepresentation& U0, const Tolerance& tol,
                                      std::uint64_t seed) {
    CMatrix change;
    Corepresentation U = orthonormalize_corep(U0, &change);
    std::vector<std::pair<Corepresentation, CMatrix>> pieces;
    split_irreducible(U, CMatrix::Identity(U.n, U.n), pieces, tol, seed, 0);

    std::vector<CorepComponent> comps;
    for (auto& [irr, embed] : pieces) {
        bool matched = false;
        for (auto& comp : comps) {
            if (comp.irrep.n != irr.n) continue;
            CMatrix u = isomorphism(comp.irrep, irr, tol);
            if (u.size() == 0) continue;
            // embed . u : H_rep -> H_U intertwines the representative with U.
            comp.isometries.push_back(change * (embed * u));
            ++comp.multiplicity;
            matched = true;
            break;
        }
        if (!matched) {
            CorepComponent c;
            c.irrep = irr;
            c.multiplicity = 1;
            c.isometries.push_back(change * embed);
            comps.push_back(std::move(c));
        }
    }
    return comps;
}

std::vector<Corepresentation> irreducibles(const HopfStarAlgebra& H,
                                           const Functional& haar,
                                           const Tolerance& tol, std::uint64_t seed) {
    Corepresentation reg = regular_corep(H, haar);
    auto comps = decompose(reg, tol, seed);
    std::vector<Corepresentation> irr;
    irr.reserve(comps.size());
    for (auto& c : comps) irr.push_back(std::move(c.irrep));
    std::sort(irr.begin(), irr.end(),
              [](const Corepresentation& a, const Corepresentation& b) {
                  if (a.n != b.n) return a.n < b.n;
                  return corep_trace_vector(a) < corep_trace_vector(b);
              });
    return irr;
}

QMatrix q_matrix(const Corepresentation& U, const Functional& haar,
                 const Tolerance& tol) {
    if (!is_irreducible(U, tol)) throw NotIrreducible("q_matrix");
    const HopfStarAlgebra& H = *U.hopf;
    const Eigen::Index n = U.n;
    const auto& A = H.algebra;
    // R(k,i) = sum_j phi(U_ij^* U_kj) = n Q^{-1}(k,i) / Tr Q.
    CMatrix R = CMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < n; ++k)
            for (Eigen::Index j = 0; j < n; ++j)
                R(k, i) += apply(haar, A.mul(A.conj(U.entry(i, j)), U.entry(k, j)));
    PsdResult pr = is_psd(R, tol);
    if (!pr.psd || pr.min_eigenvalue <= tol.abs_tol)
        throw QNotPositive("q_matrix: orthogonality Gram not positive");
    CMatrix Qun = R.inverse();
    Qun = ((Qun + Qun.adjoint()) / 2.0).eval();
    const double c = std::sqrt(Qun.trace().real() / Qun.inverse().trace().real());
    QMatrix Q;
    Q.q = Qun / c;
    Q.dim_q = Q.q.trace().real();
    return Q;
}

CVector character(const Corepresentation& U, const QMatrix& Q) {
    const Eigen::Index d = U.hopf->dim();
    CMatrix Qinv = Q.q.inverse();
    CVector chi(d);
    for (Eigen::Index k = 0; k < d; ++k)
        chi(k) = Q.dim_q * (U.slices[(std::size_t)k] * Qinv).trace();
    return chi;
}

Functional central_projection(const Corepresentation& U, const QMatrix& Q,
                              const Functional& haar) {
    const auto& A = U.hopf->algebra;
    CVector chi_star = A.conj(character(U, Q));
    Functional p(A.dim);
    for (Eigen::Index i = 0; i < A.dim; ++i)
        p(i) = apply(haar, A.mul(A.basis_vector(i), chi_star));
    return p;
}

} // namespace qact
