#pragma once

#include <cstddef>
#include <vector>

#include "projspec/multipoly.hpp"
#include "projspec/numeric.hpp"
#include "projspec/proj_point.hpp"

namespace projspec {

/// Largest dimension char_poly expands symbolically.
inline constexpr std::size_t kMaxSymbolicDim = 16;
/// Up to this size the determinant is expanded over column subsets
/// (division free).
inline constexpr std::size_t kMaxExpansionDim = 8;
/// Larger pencils are interpolated from determinant values on a torus grid
/// of (d+1)^n points when the grid is at most this big, and fall back to
/// fraction-free Bareiss elimination otherwise.
inline constexpr std::size_t kMaxInterpolationPoints = std::size_t{1} << 18;

/// A(z) = z_0 A_0 + ... + z_n A_n with square d x d coefficients.
class MatrixPencil {
 public:
  explicit MatrixPencil(std::vector<ComplexMatrix> matrices);

  /// Parameter count n; the pencil lives on P^n.
  std::size_t parameters() const { return mats_.size() - 1; }
  std::size_t dim() const { return static_cast<std::size_t>(mats_.front().rows()); }
  const std::vector<ComplexMatrix>& matrices() const { return mats_; }
  const ComplexMatrix& operator[](std::size_t i) const { return mats_[i]; }

 private:
  std::vector<ComplexMatrix> mats_;
};

/// sum_i z_i A_i using the coordinates as supplied (not canonicalized).
ComplexMatrix evaluate(const MatrixPencil& p, const ProjPoint& z);
ComplexMatrix evaluate(const MatrixPencil& p, const std::vector<Complex>& z);

/// z lies in the projective spectrum iff A(z) is singular.
bool spectrum_membership(const MatrixPencil& p, const ProjPoint& z, double tol = kSingularTol);

/// det A(z) as a homogeneous polynomial of degree d in n+1 variables.
/// Throws InvalidInput when d > kMaxSymbolicDim or n+1 > kMaxVariables.
MultiPoly char_poly(const MatrixPencil& p);

/// Symbolic determinant of a square matrix of polynomials.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

/// True iff Q vanishes identically on the hyperplane w.z = 0. Decided by
/// substituting z_k = -sum_{j != k} w_j z_j (k = pivot of w) and requiring
/// every resulting coefficient to be <= tol relative to the coefficient
/// produced by the same substitution applied to |Q| and |w|.
bool hyperplane_contained(const MultiPoly& q, const LinearForm& w, double tol = 1e-10);

/// Largest m such that (w.z)^m divides Q, by repeated synthetic division.
int linear_factor_multiplicity(const MultiPoly& q, const LinearForm& w, double tol = 1e-10);

/// A point of the projective spectrum on the line through u and v: either v
/// itself (A(v) singular) or u + s v for an eigenvalue s of the pencil
/// restricted to the line.
ProjPoint singular_point_on_line(const MatrixPencil& p, const ProjPoint& u, const ProjPoint& v);

}  // namespace projspec
