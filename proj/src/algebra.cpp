#include "qact/algebra.hpp"

namespace qact {

CVector StarAlgebra::mul(const CVector& x, const CVector& y) const {
    if (x.size() != dim || y.size() != dim)
        throw DimensionMismatch("StarAlgebra::mul");
    CVector out = CVector::Zero(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (x(i) == cplx(0)) continue;
        for (Eigen::Index j = 0; j < dim; ++j) {
            const cplx c = x(i) * y(j);
            if (c != cplx(0)) out += c * mult.col(i * dim + j);
        }
    }
    return out;
}

CVector StarAlgebra::basis_vector(Eigen::Index i) const {
    CVector v = CVector::Zero(dim);
    v(i) = 1.0;
    return v;
}

CMatrix StarAlgebra::lmul(const CVector& x) const {
    CMatrix out = CMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (x(i) == cplx(0)) continue;
        out += x(i) * mult.middleCols(i * dim, dim);
    }
    return out;
}

CMatrix StarAlgebra::rmul(const CVector& x) const {
    CMatrix out = CMatrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i)
            if (x(i) != cplx(0)) out.col(j) += x(i) * mult.col(j * dim + i);
    return out;
}

VerifyReport verify_star_algebra(const StarAlgebra& A, const Tolerance& tol) {
    VerifyReport rep;
    rep.tol = tol.abs_tol;
    const Eigen::Index d = A.dim;
    if (A.mult.rows() != d || A.mult.cols() != d * d || A.unit.size() != d ||
        A.star.rows() != d || A.star.cols() != d)
        throw DimensionMismatch("verify_star_algebra: tensor shapes");
    rep.add_flag("finite", is_finite(A.mult) && is_finite(A.star) &&
                               is_finite(CMatrix(A.unit)));

    // Associativity as operator identity L(e_i e_j) = L_i L_j.
    std::vector<CMatrix> L(d);
    for (Eigen::Index i = 0; i < d; ++i) L[i] = A.mult.middleCols(i * d, d);
    double assoc = 0.0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            CMatrix lhs = A.lmul(A.mult.col(i * d + j));
            assoc = std::max(assoc, max_abs(CMatrix(lhs - L[i] * L[j])));
        }
    rep.add("associativity", assoc);

    double unit_res = std::max(max_abs(CMatrix(A.lmul(A.unit) - CMatrix::Identity(d, d))),
                               max_abs(CMatrix(A.rmul(A.unit) - CMatrix::Identity(d, d))));
    rep.add("unit_law", unit_res);

    rep.add("star_involution",
            max_abs(CMatrix(A.star * A.star.conjugate() - CMatrix::Identity(d, d))));

    double antimult = 0.0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            CVector lhs = A.conj(A.mult.col(i * d + j));
            CVector rhs = A.mul(A.star.col(j), A.star.col(i));
            antimult = std::max(antimult, max_abs(CVector(lhs - rhs)));
        }
    rep.add("star_antimultiplicative", antimult);
    return rep;
}

StarAlgebra tensor_algebra(const StarAlgebra& A, const StarAlgebra& B) {
    StarAlgebra T;
    T.name = A.name.empty() && B.name.empty() ? "" : A.name + "(x)" + B.name;
    const Eigen::Index a = A.dim, b = B.dim, d = a * b;
    T.dim = d;
    T.basis.resize(d);
    for (Eigen::Index i = 0; i < a; ++i)
        for (Eigen::Index j = 0; j < b; ++j)
            T.basis[i * b + j] =
                (A.basis.empty() ? "" : A.basis[i]) + "(x)" +
                (B.basis.empty() ? "" : B.basis[j]);
    T.unit = kron(A.unit, B.unit);
    T.star = kron(A.star, B.star);
    T.mult = CMatrix::Zero(d, d * d);
    for (Eigen::Index i1 = 0; i1 < a; ++i1)
        for (Eigen::Index j1 = 0; j1 < b; ++j1)
            for (Eigen::Index i2 = 0; i2 < a; ++i2)
                for (Eigen::Index j2 = 0; j2 < b; ++j2) {
                    const Eigen::Index p = i1 * b + j1, q = i2 * b + j2;
                    T.mult.col(p * d + q) =
                        kron(CVector(A.mult.col(i1 * a + i2)),
                             CVector(B.mult.col(j1 * b + j2)));
                }
    return T;
}

StarAlgebra opposite_algebra(const StarAlgebra& A) {
    StarAlgebra O = A;
    O.name = A.name.empty() ? "" : A.name + "^op";
    const Eigen::Index d = A.dim;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            O.mult.col(i * d + j) = A.mult.col(j * d + i);
    return O;
}

StarAlgebra matrix_algebra(Eigen::Index n, const std::string& name) {
    StarAlgebra M;
    M.name = name.empty() ? "M_" + std::to_string(n) : name;
    const Eigen::Index d = n * n;
    M.dim = d;
    M.basis.resize(d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            M.basis[i * n + j] = "E" + std::to_string(i) + std::to_string(j);
    M.mult = CMatrix::Zero(d, d * d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k)
                for (Eigen::Index l = 0; l < n; ++l)
                    if (j == k)
                        M.mult((i * n + l), (i * n + j) * d + (k * n + l)) = 1.0;
    M.unit = CVector::Zero(d);
    for (Eigen::Index i = 0; i < n; ++i) M.unit(i * n + i) = 1.0;
    M.star = CMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) M.star(j * n + i, i * n + j) = 1.0;
    return M;
}

CMatrix orthonormalize(const CMatrix& vectors, const Tolerance& tol) {
    return column_space(vectors, tol);
}

CVector expand_in_basis(const CMatrix& basis, const CVector& x, double* residual) {
    if (basis.cols() == 0) {
        if (residual) *residual = max_abs(x);
        return CVector(0);
    }
    CVector c = basis.colPivHouseholderQr().solve(x);
    if (residual) *residual = max_abs(CVector(basis * c - x));
    return c;
}

StarAlgebra subalgebra(const StarAlgebra& A, const CMatrix& span,
                       const Tolerance& tol, double* closure_residual,
                       const std::string& name) {
    const Eigen::Index d = span.cols();
    StarAlgebra S;
    S.name = name.empty() ? A.name + ".sub" : name;
    S.dim = d;
    S.basis.resize(d);
    for (Eigen::Index i = 0; i < d; ++i) S.basis[i] = "b" + std::to_string(i);
    S.mult = CMatrix::Zero(d, d * d);
    S.star = CMatrix::Zero(d, d);
    double worst = 0.0;
    double res = 0.0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            CVector prod = A.mul(span.col(i), span.col(j));
            S.mult.col(i * d + j) = expand_in_basis(span, prod, &res);
            worst = std::max(worst, res);
        }
    for (Eigen::Index i = 0; i < d; ++i) {
        CVector st = A.conj(span.col(i));
        // star action on coordinates: (sum c_i b_i)^* = sum conj(c_i) b_i^*.
        S.star.col(i) = expand_in_basis(span, st, &res);
        worst = std::max(worst, res);
    }
    S.unit = expand_in_basis(span, A.unit, &res);
    worst = std::max(worst, res);
    if (closure_residual) *closure_residual = worst;
    else if (worst > tol.abs_tol * std::max(1.0, max_abs(span)) * 100)
        throw InvalidInput("subalgebra: span is not closed (residual " +
                           std::to_string(worst) + ")");
    return S;
}

StarAlgebra quotient_algebra(const StarAlgebra& A, const CMatrix& ideal_span,
                             const Tolerance& tol, CMatrix* projection_out) {
    CMatrix ideal = column_space(ideal_span, tol);
    // Complement basis: kernel of ideal^dagger.
    CMatrix comp = kernel(CMatrix(ideal.adjoint()), tol);
    const Eigen::Index d = comp.cols();
    // Projection along the ideal onto the complement coordinates.
    CMatrix full(A.dim, ideal.cols() + d);
    full << comp, ideal;
    CMatrix inv = full.colPivHouseholderQr().inverse();
    CMatrix proj = inv.topRows(d); // coordinates in the complement
    StarAlgebra Q;
    Q.name = A.name + "/I";
    Q.dim = d;
    Q.basis.resize(d);
    for (Eigen::Index i = 0; i < d; ++i) Q.basis[i] = "q" + std::to_string(i);
    Q.mult = CMatrix::Zero(d, d * d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            Q.mult.col(i * d + j) = proj * A.mul(comp.col(i), comp.col(j));
    Q.unit = proj * A.unit;
    Q.star = CMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) Q.star.col(i) = proj * A.conj(comp.col(i));
    if (projection_out) *projection_out = proj;
    return Q;
}

Functional regular_trace(const StarAlgebra& A) {
    Functional tau(A.dim);
    for (Eigen::Index i = 0; i < A.dim; ++i)
        tau(i) = A.mult.middleCols(i * A.dim, A.dim).trace();
    return tau;
}

CMatrix gram_matrix(const StarAlgebra& A, const Functional& phi) {
    CMatrix g(A.dim, A.dim);
    for (Eigen::Index i = 0; i < A.dim; ++i) {
        CVector si = A.star.col(i);
        for (Eigen::Index j = 0; j < A.dim; ++j)
            g(i, j) = apply(phi, A.mul(si, A.basis_vector(j)));
    }
    return g;
}

} // namespace qact
