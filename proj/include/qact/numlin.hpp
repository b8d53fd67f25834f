#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qact/errors.hpp"

namespace qact {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Numerical tolerances used throughout: abs_tol for residual checks,
/// rank_tol as the relative singular-value cutoff.
struct Tolerance {
    double abs_tol = 1e-9;
    double rank_tol = 1e-9;
};

inline double max_abs(const CMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}
inline double max_abs(const CVector& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

bool is_finite(const CMatrix& m);
void require_finite(const CMatrix& m, const char* who);

/// Kronecker product with row-major index convention:
/// (A (x) B)(i*rB + k, j*cB + l) = A(i,j) B(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

/// Permutation matrix sending x (x) y -> y (x) x for x in C^a, y in C^b.
CMatrix swap_matrix(Eigen::Index a, Eigen::Index b);

/// Numerical rank with relative singular-value cutoff rank_tol * sigma_max.
Eigen::Index numerical_rank(const CMatrix& m, const Tolerance& tol = {});

/// Orthonormal basis of the null space; columns span ker M.
CMatrix kernel(const CMatrix& m, const Tolerance& tol = {});

/// Orthonormal basis of the column span of m (empty allowed).
CMatrix column_space(const CMatrix& m, const Tolerance& tol = {});

struct PsdResult {
    bool psd = false;
    double min_eigenvalue = 0.0;
    double hermiticity_residual = 0.0;
};

/// Hermitian-within-tol plus min-eigenvalue >= -tol*||M|| test.
PsdResult is_psd(const CMatrix& m, const Tolerance& tol = {});

/// Largest singular value.
double spectral_norm(const CMatrix& m);

/// Deterministic random source (seeded Mersenne twister, hand-rolled
/// Box-Muller so streams are identical across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform();          // [0,1)
    double gauss();            // N(0,1)
    cplx cgauss();             // standard complex gaussian
    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

} // namespace qact
