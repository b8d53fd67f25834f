#include "qact/wedderburn.hpp"

#include <algorithm>
#include <cmath>

namespace qact {

namespace {

// Spectral projector of the (diagonalizable) operator op for the eigenvalue
// cluster containing indices `idx`, via the full eigendecomposition.
CMatrix spectral_projector(const Eigen::ComplexEigenSolver<CMatrix>& es,
                           const std::vector<int>& idx) {
    const CMatrix& V = es.eigenvectors();
    CMatrix Vinv = V.inverse();
    CMatrix P = CMatrix::Zero(V.rows(), V.rows());
    for (int i : idx) P += V.col(i) * Vinv.row(i);
    return P;
}

std::vector<std::vector<int>> cluster_eigenvalues(const CVector& ev, double gap) {
    std::vector<int> order(ev.size());
    for (int i = 0; i < (int)ev.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (ev(a).real() != ev(b).real()) return ev(a).real() < ev(b).real();
        return ev(a).imag() < ev(b).imag();
    });
    std::vector<std::vector<int>> clusters;
    for (int i : order) {
        if (!clusters.empty() &&
            std::abs(ev(i) - ev(clusters.back().back())) < gap)
            clusters.back().push_back(i);
        else
            clusters.push_back({i});
    }
    return clusters;
}

CVector random_hermitian_in_span(const StarAlgebra& A, const CMatrix& span, Rng& rng) {
    CVector x = CVector::Zero(A.dim);
    for (Eigen::Index i = 0; i < span.cols(); ++i) x += rng.cgauss() * span.col(i);
    return 0.5 * (x + A.conj(x));
}

std::vector<double> trace_vector(const WedderburnBlock& b, const StarAlgebra& A) {
    std::vector<double> tv;
    tv.reserve(2 * A.dim);
    for (Eigen::Index i = 0; i < A.dim; ++i) {
        cplx t = b.apply(A.basis_vector(i)).trace();
        tv.push_back(std::round(t.real() * 1e6) / 1e6);
        tv.push_back(std::round(t.imag() * 1e6) / 1e6);
    }
    return tv;
}

} // namespace

CMatrix WedderburnBlock::apply(const CVector& x) const {
    CVector v = rep * x;
    CMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index s = 0; s < n; ++s) m(r, s) = v(r * n + s);
    return m;
}

CVector WedderburnBlock::element_for(const CMatrix& m, const StarAlgebra& A) const {
    // Solve on the block subspace: basis of the two-sided ideal = z_k A.
    CMatrix block = column_space(A.lmul(central_idempotent));
    CMatrix psi(n * n, block.cols());
    for (Eigen::Index t = 0; t < block.cols(); ++t) psi.col(t) = rep * block.col(t);
    CVector target(n * n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index s = 0; s < n; ++s) target(r * n + s) = m(r, s);
    CVector c = psi.colPivHouseholderQr().solve(target);
    return block * c;
}

CMatrix center_basis(const StarAlgebra& A, const Tolerance& tol) {
    const Eigen::Index d = A.dim;
    CMatrix komm(d * d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        CMatrix diff = A.rmul(A.basis_vector(j)) - A.lmul(A.basis_vector(j));
        komm.middleRows(j * d, d) = diff;
    }
    return kernel(komm, tol);
}

std::vector<WedderburnBlock> wedderburn_blocks(const StarAlgebra& A,
                                               const Tolerance& tol,
                                               const Functional* phi,
                                               std::uint64_t seed) {
    const Eigen::Index d = A.dim;
    Functional tau = phi ? *phi : regular_trace(A);
    CMatrix gram = gram_matrix(A, tau);
    {
        PsdResult p = is_psd(gram, tol);
        const double scale = std::max(1.0, max_abs(gram));
        if (p.hermiticity_residual > tol.abs_tol * scale ||
            p.min_eigenvalue <= tol.abs_tol * scale)
            throw NotSemisimple("Gram form not positive definite (min eig " +
                                std::to_string(p.min_eigenvalue) + ")");
    }

    CMatrix center = center_basis(A, tol);
    const Eigen::Index c = center.cols();
    const double scale = std::max(1.0, max_abs(A.mult));
    const double gap = std::max(10.0 * tol.abs_tol, 1e-8) * scale;

    // Minimal central idempotents from the spectral projectors of a generic
    // central Hermitian element.
    std::vector<CVector> idems;
    if (c == 1) {
        idems.push_back(A.unit);
    } else {
        bool done = false;
        for (std::uint64_t attempt = 0; attempt < 5 && !done; ++attempt) {
            Rng rng(seed + attempt);
            CVector h = random_hermitian_in_span(A, center, rng);
            Eigen::ComplexEigenSolver<CMatrix> es(A.lmul(h));
            auto clusters = cluster_eigenvalues(es.eigenvalues(), gap);
            if ((Eigen::Index)clusters.size() != c) continue;
            idems.clear();
            for (const auto& cl : clusters)
                idems.push_back(spectral_projector(es, cl) * A.unit);
            done = true;
        }
        if (!done)
            throw InternalError("wedderburn_blocks: central element spectra "
                                "kept clustering after 5 reseeds");
    }

    std::vector<WedderburnBlock> blocks;
    for (std::size_t k = 0; k < idems.size(); ++k) {
        const CVector& z = idems[k];
        CMatrix block_space = column_space(A.lmul(z), tol);
        const Eigen::Index m = block_space.cols();
        const Eigen::Index n = (Eigen::Index)std::llround(std::sqrt((double)m));
        if (n * n != m)
            throw NotSemisimple("central idempotent ideal of non-square dimension " +
                                std::to_string(m));
        WedderburnBlock blk;
        blk.n = n;
        blk.central_idempotent = z;

        // Minimal projection from a generic Hermitian element of the block.
        bool found = false;
        for (std::uint64_t attempt = 0; attempt < 8 && !found; ++attempt) {
            Rng rng(seed * 977 + 31 * k + attempt + 1);
            CVector x = random_hermitian_in_span(A, block_space, rng);
            Eigen::ComplexEigenSolver<CMatrix> es(A.lmul(x));
            auto clusters = cluster_eigenvalues(es.eigenvalues(), gap);
            for (const auto& cl : clusters) {
                if (std::abs(es.eigenvalues()(cl[0])) < gap) continue;
                CVector q = spectral_projector(es, cl) * z;
                CMatrix left_ideal = column_space(A.rmul(q), tol);
                if (left_ideal.cols() != n) continue;
                // Gram-orthonormalize the minimal left ideal.
                CMatrix small = left_ideal.adjoint() * gram * left_ideal;
                Eigen::SelfAdjointEigenSolver<CMatrix> ses(small);
                if (ses.eigenvalues().minCoeff() <= 0) continue;
                CMatrix invsqrt =
                    ses.eigenvectors() *
                    ses.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                    ses.eigenvectors().adjoint();
                CMatrix V = left_ideal * invsqrt;
                blk.ideal_basis = V;
                blk.rep = CMatrix(n * n, d);
                for (Eigen::Index i = 0; i < d; ++i) {
                    CMatrix mat = V.adjoint() * gram * (A.lmul(A.basis_vector(i)) * V);
                    for (Eigen::Index r = 0; r < n; ++r)
                        for (Eigen::Index s = 0; s < n; ++s)
                            blk.rep(r * n + s, i) = mat(r, s);
                }
                found = true;
                break;
            }
        }
        if (!found)
            throw InternalError("wedderburn_blocks: no minimal projection found");
        blocks.push_back(std::move(blk));
    }

    Eigen::Index total = 0;
    for (const auto& b : blocks) total += b.n * b.n;
    if (total != d)
        throw NotSemisimple("block dimensions sum to " + std::to_string(total) +
                            " != dim " + std::to_string(d));

    std::sort(blocks.begin(), blocks.end(),
              [&](const WedderburnBlock& a, const WedderburnBlock& b) {
                  if (a.n != b.n) return a.n < b.n;
                  return trace_vector(a, A) < trace_vector(b, A);
              });
    return blocks;
}

} // namespace qact
