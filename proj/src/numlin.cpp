#include "qact/numlin.hpp"

#include <cmath>

namespace qact {

bool is_finite(const CMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const cplx z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    return true;
}

void require_finite(const CMatrix& m, const char* who) {
    if (!is_finite(m)) throw NonFiniteInput(who);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CVector kron(const CVector& a, const CVector& b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

CMatrix swap_matrix(Eigen::Index a, Eigen::Index b) {
    CMatrix s = CMatrix::Zero(a * b, a * b);
    for (Eigen::Index i = 0; i < a; ++i)
        for (Eigen::Index j = 0; j < b; ++j) s(j * a + i, i * b + j) = 1.0;
    return s;
}

Eigen::Index numerical_rank(const CMatrix& m, const Tolerance& tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = tol.rank_tol * sv(0);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff && sv(i) > 0) ++r;
    return r;
}

CMatrix kernel(const CMatrix& m, const Tolerance& tol) {
    require_finite(m, "kernel");
    if (m.size() == 0) return CMatrix::Identity(m.cols(), m.cols());
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() ? tol.rank_tol * sv(0) : 0.0;
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff && sv(i) > 0) ++r;
    return svd.matrixV().rightCols(m.cols() - r);
}

CMatrix column_space(const CMatrix& m, const Tolerance& tol) {
    require_finite(m, "column_space");
    if (m.size() == 0) return CMatrix(m.rows(), 0);
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() ? tol.rank_tol * sv(0) : 0.0;
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff && sv(i) > 0) ++r;
    return svd.matrixU().leftCols(r);
}

PsdResult is_psd(const CMatrix& m, const Tolerance& tol) {
    if (m.rows() != m.cols()) throw DimensionMismatch("is_psd: non-square input");
    require_finite(m, "is_psd");
    PsdResult res;
    res.hermiticity_residual = max_abs(CMatrix(m - m.adjoint()));
    const double scale = std::max(1.0, max_abs(m));
    CMatrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    res.min_eigenvalue = m.size() == 0 ? 0.0 : es.eigenvalues().minCoeff();
    res.psd = res.hermiticity_residual <= tol.abs_tol * scale &&
              res.min_eigenvalue >= -tol.abs_tol * scale;
    return res;
}

double spectral_norm(const CMatrix& m) {
    require_finite(m, "spectral_norm");
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

double Rng::uniform() {
    // 53-bit mantissa from the raw stream.
    return static_cast<double>(eng_() >> 11) * (1.0 / 9007199254740992.0);
}

double Rng::gauss() {
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

cplx Rng::cgauss() {
    const double re = gauss(), im = gauss();
    return cplx(re, im) / std::sqrt(2.0);
}

} // namespace qact
