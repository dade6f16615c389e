#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace projspec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Dynamics runs in extended precision: Chebyshev orbits double angular
// errors at every step, so 30-step products need more than 53 bits.
using WideReal = long double;
using WideComplex = std::complex<long double>;

/// Relative threshold for singularity: sigma_min <= tol * max(1, sigma_max).
inline constexpr double kSingularTol = 1e-10;
/// Singular values >= tol * sigma_max count toward numeric rank.
inline constexpr double kRankTol = 1e-10;

/// Singular values in descending order. Real matrices take a real SVD.
Eigen::VectorXd singular_values(const ComplexMatrix& m);

std::size_t numeric_rank(const ComplexMatrix& m, double tol = kRankTol);

/// True iff sigma_min(m) <= tol * max(1, sigma_max(m)). Throws
/// DimensionError for non-square input.
bool is_singular(const ComplexMatrix& m, double tol = kSingularTol);

/// Spectral norm (largest singular value).
double operator_norm(const ComplexMatrix& m);

bool is_real(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

}  // namespace projspec
