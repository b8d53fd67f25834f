#include "doctest.h"

#include "qact/numlin.hpp"
#include "qact/wedderburn.hpp"
#include "qact/hopf.hpp"

using namespace qact;

TEST_CASE("kernel of identity is empty") {
    CMatrix id = CMatrix::Identity(2, 2);
    CHECK(kernel(id).cols() == 0);
    CHECK(numerical_rank(id) == 2);
}

TEST_CASE("kernel of [1,-1]") {
    CMatrix m(1, 2);
    m << 1.0, -1.0;
    CMatrix k = kernel(m);
    REQUIRE(k.cols() == 1);
    // Span check against (1,1)/sqrt(2).
    CVector v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(std::abs(std::abs((v.adjoint() * k.col(0))(0)) - 1.0) < 1e-12);
    CHECK(max_abs(CVector(m * k.col(0))) < 1e-12);
}

TEST_CASE("random rank-3 5x5 has 2 kernel columns") {
    Rng rng(42);
    CMatrix a(5, 3), b(3, 5);
    for (Eigen::Index i = 0; i < 5; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) {
            a(i, j) = rng.cgauss();
            b(j, i) = rng.cgauss();
        }
    CMatrix m = a * b;
    CMatrix k = kernel(m);
    CHECK(k.cols() == 2);
    CHECK(numerical_rank(m) == 3);
    CHECK(max_abs(CMatrix(m * k)) <= 1e-9 * spectral_norm(m));
    // rank-nullity
    CHECK(numerical_rank(m) + k.cols() == m.cols());
    // orthonormal columns
    CHECK(max_abs(CMatrix(k.adjoint() * k - CMatrix::Identity(2, 2))) < 1e-12);
}

TEST_CASE("rank-nullity across random shapes") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        int rows = 1 + (int)(rng.uniform() * 7);
        int cols = 1 + (int)(rng.uniform() * 7);
        int r = (int)(rng.uniform() * (std::min(rows, cols) + 1));
        CMatrix a = CMatrix::Zero(rows, std::max(r, 1)),
                b = CMatrix::Zero(std::max(r, 1), cols);
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = rng.cgauss();
        for (Eigen::Index i = 0; i < b.rows(); ++i)
            for (Eigen::Index j = 0; j < b.cols(); ++j) b(i, j) = rng.cgauss();
        CMatrix m = r == 0 ? CMatrix::Zero(rows, cols) : CMatrix(a * b);
        CMatrix k = kernel(m);
        CHECK(numerical_rank(m) + k.cols() == cols);
        if (k.cols() > 0)
            CHECK(max_abs(CMatrix(m * k)) <= 1e-8 * std::max(1.0, spectral_norm(m)));
    }
}

TEST_CASE("is_psd basics") {
    CHECK(is_psd(CMatrix::Identity(3, 3)).psd);
    CHECK(is_psd(CMatrix::Identity(3, 3)).min_eigenvalue == doctest::Approx(1.0));
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 1;
    d(1, 1) = -1;
    auto r = is_psd(d);
    CHECK_FALSE(r.psd);
    CHECK(r.min_eigenvalue == doctest::Approx(-1.0));
    CHECK_THROWS_AS(is_psd(CMatrix::Zero(2, 3)), DimensionMismatch);
}

TEST_CASE("Haar gram of C[Z_3] is positive definite") {
    auto H = group_algebra(cyclic_group(3));
    auto haar = haar_state(H);
    CMatrix g = gram_matrix(H.algebra, haar.phi);
    CHECK(is_psd(g).psd);
    CHECK(is_psd(g).min_eigenvalue > 1e-9);
}

TEST_CASE("spectral norm") {
    CHECK(spectral_norm(CMatrix::Identity(4, 4)) == doctest::Approx(1.0));
    CMatrix loop(1, 1);
    loop << 2.0;
    CHECK(spectral_norm(loop) == doctest::Approx(2.0));
    // adjacency of a 10-vertex path (truncated Podles chain shape) stays
    // under q + 1/q = 2.5 at q = 0.5
    CMatrix path = CMatrix::Zero(10, 10);
    for (int i = 0; i + 1 < 10; ++i) path(i, i + 1) = path(i + 1, i) = 1.0;
    CHECK(spectral_norm(path) <= 2.5);
    CHECK(spectral_norm(path) == doctest::Approx(2.0 * std::cos(M_PI / 11.0)));
    // norm(M) == norm(M^dagger)
    Rng rng(3);
    CMatrix m(4, 6);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 6; ++j) m(i, j) = rng.cgauss();
    CHECK(spectral_norm(m) ==
          doctest::Approx(spectral_norm(CMatrix(m.adjoint()))).epsilon(1e-10));
}

TEST_CASE("wedderburn of C[Z_3]: three 1x1 blocks") {
    auto H = group_algebra(cyclic_group(3));
    auto blocks = wedderburn_blocks(H.algebra);
    REQUIRE(blocks.size() == 3);
    for (const auto& b : blocks) CHECK(b.n == 1);
}

TEST_CASE("wedderburn of C[S_3]: blocks 1,1,2") {
    auto H = group_algebra(symmetric_group_s3());
    auto blocks = wedderburn_blocks(H.algebra);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].n == 1);
    CHECK(blocks[1].n == 1);
    CHECK(blocks[2].n == 2);
    Eigen::Index sum = 0;
    for (const auto& b : blocks) sum += b.n * b.n;
    CHECK(sum == 6);

    // Each block map is a *-homomorphism on all basis pairs.
    const auto& A = H.algebra;
    for (const auto& b : blocks) {
        double hom = 0.0, star = 0.0;
        for (Eigen::Index i = 0; i < A.dim; ++i) {
            CMatrix mi = b.apply(A.basis_vector(i));
            star = std::max(star,
                            max_abs(CMatrix(b.apply(A.star.col(i)) - mi.adjoint())));
            for (Eigen::Index j = 0; j < A.dim; ++j) {
                CMatrix mj = b.apply(A.basis_vector(j));
                hom = std::max(hom, max_abs(CMatrix(b.apply(A.mult.col(i * A.dim + j)) -
                                                    mi * mj)));
            }
        }
        CHECK(hom < 1e-9);
        CHECK(star < 1e-9);
    }
}

TEST_CASE("wedderburn block elements invert the isomorphism") {
    auto H = group_algebra(symmetric_group_s3());
    auto blocks = wedderburn_blocks(H.algebra);
    const auto& blk = blocks[2];
    CMatrix e01 = CMatrix::Zero(2, 2);
    e01(0, 1) = 1.0;
    CVector u = blk.element_for(e01, H.algebra);
    CHECK(max_abs(CMatrix(blk.apply(u) - e01)) < 1e-9);
    // and it lies in the block: z u = u
    CHECK(max_abs(CVector(H.algebra.mul(blk.central_idempotent, u) - u)) < 1e-9);
}

TEST_CASE("non-semisimple star algebra is rejected") {
    // C[x]/(x^2) with x^* = x: nilpotent kills the regular trace Gram.
    StarAlgebra A;
    A.name = "dual_numbers";
    A.dim = 2;
    A.basis = {"1", "x"};
    A.mult = CMatrix::Zero(2, 4);
    A.mult(0, 0) = 1;  // 1*1
    A.mult(1, 1) = 1;  // 1*x
    A.mult(1, 2) = 1;  // x*1
    A.unit = CVector::Zero(2);
    A.unit(0) = 1;
    A.star = CMatrix::Identity(2, 2);
    CHECK(verify_star_algebra(A).pass());
    CHECK_THROWS_AS(wedderburn_blocks(A), NotSemisimple);
}

TEST_CASE("kron and swap conventions") {
    CVector x(2), y(3);
    x << 1.0, 2.0;
    y << 5.0, 7.0, 11.0;
    CVector k = kron(x, y);
    CHECK(k(0) == cplx(5.0));
    CHECK(k(1 * 3 + 2) == cplx(22.0));
    CMatrix s = swap_matrix(2, 3);
    CVector swapped = s * k;
    CHECK(max_abs(CVector(swapped - kron(y, x))) == 0.0);
}
