#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "projspec/multipoly.hpp"
#include "projspec/numeric.hpp"
#include "projspec/pencil.hpp"
#include "projspec/proj_point.hpp"

namespace projspec {

enum class Commutativity { verified_true, verified_false, unchecked };

/// Relative commutator threshold: ||A_i A_j - A_j A_i|| <= tol * max_k ||A_k||^2.
inline constexpr double kCommuteTol = 1e-10;

/// An n-tuple (A_1, ..., A_n) of d x d matrices.
class MatrixTuple {
 public:
  /// Validates shapes; runs the commutator test unless `check` is false.
  explicit MatrixTuple(std::vector<ComplexMatrix> matrices, bool check = true);

  std::size_t size() const { return mats_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(mats_.front().rows()); }
  const ComplexMatrix& operator[](std::size_t i) const { return mats_[i]; }
  const std::vector<ComplexMatrix>& matrices() const { return mats_; }

  Commutativity commutativity() const { return flag_; }
  bool commutes() const { return flag_ == Commutativity::verified_true; }

  /// max_{i<j} ||[A_i, A_j]|| (spectral norm).
  double max_commutator_norm() const;
  /// Every A_i satisfies ||A A* - A* A|| <= tol * ||A||^2.
  bool is_normal(double tol = 1e-10) const;

  /// (A_1 - lambda_1, ..., A_n - lambda_n), commutativity flag carried over.
  MatrixTuple shifted(std::span<const Complex> lambda) const;

  /// The pencil (I, A_1, ..., A_n).
  MatrixPencil pencil() const;

 private:
  MatrixTuple(std::vector<ComplexMatrix> matrices, Commutativity flag);

  std::vector<ComplexMatrix> mats_;
  Commutativity flag_ = Commutativity::unchecked;
};

/// Index sets of size p from {0..n-1} in lexicographic order. Basis of the
/// p-th exterior power used by every Koszul matrix.
std::vector<std::vector<int>> wedge_basis(std::size_t n, std::size_t p);

/// Boundary maps d_p : H (x) L^p -> H (x) L^{p+1}, p = 0..n-1, of the complex
/// d_p(x (x) w) = sum_i A_i x (x) (e_i ^ w).
struct KoszulComplex {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<ComplexMatrix> boundaries;

  /// Dimension of H (x) L^p, i.e. d * C(n, p).
  std::size_t space_dim(std::size_t p) const;
};

KoszulComplex koszul_build(const MatrixTuple& t);

/// rank(d_{p-1}) == nullity(d_p) at every stage p = 0..n, with d_{-1} = 0
/// and d_n = 0. Ranks count singular values >= tol * sigma_max.
bool koszul_is_exact(const KoszulComplex& k, double tol = kRankTol);

/// lambda is in the Taylor spectrum iff the shifted complex is not exact.
/// Throws DomainError unless the tuple is verified commuting.
bool taylor_membership(const MatrixTuple& t, std::span<const Complex> lambda,
                       double tol = kRankTol);

/// Contracting homotopy t_p = sum_i B_i iota_i for p = 1..n.
struct HomotopyMaps {
  /// maps[p - 1] is t_p : H (x) L^p -> H (x) L^{p-1}.
  std::vector<ComplexMatrix> maps;
  /// max_p || t_{p+1} d_p + d_{p-1} t_p - I ||.
  double residual = 0;
};

/// Builds the homotopy from B with sum A_i B_i = I (within 1e-8, else
/// DomainError) and reports its residual.
HomotopyMaps splitting_homotopy(const MatrixTuple& a, const MatrixTuple& b);

/// Not jointly bounded below (vertical stack rank-deficient) or not jointly
/// onto (horizontal stack of rank < d).
bool harte_membership(const MatrixTuple& t, std::span<const Complex> lambda,
                      double tol = kRankTol);

/// Vertical stack [A_1 - lambda_1; ...; A_n - lambda_n] is rank-deficient.
bool approx_point_membership(const MatrixTuple& t, std::span<const Complex> lambda,
                             double tol = kRankTol);

/// B_k = (A_k - l_k)^* (sum_j (A_j - l_j)(A_j - l_j)^*)^{-1}. Throws
/// DomainError when the sum is singular (lambda in the approximate point
/// spectrum).
MatrixTuple cho_takaguchi_inverse(const MatrixTuple& t, std::span<const Complex> lambda);

/// Joint diagonal of a simultaneous Schur triangularization: one Schur
/// decomposition of sum c_i A_i with seeded generic c, each A_j read in that
/// basis. Returns d vectors of length n (with multiplicity).
std::vector<std::vector<Complex>> joint_eigenvalues(const MatrixTuple& t,
                                                    std::uint64_t seed = 0x5eedULL);

struct HyperplaneVerdict {
  bool factors = false;
  /// Accepted forms z_0 + l^(1) z_1 + ... + l^(n) z_n with multiplicities.
  std::vector<std::pair<LinearForm, int>> factor_list;
  int degree = 0;
  /// Direct commutator test, reported alongside for cross-checking.
  bool commuting = false;
};

/// Decides whether det(z_0 I + sum z_i A_i) splits into the linear forms
/// built from the eigenvalue lists of the individual (normal) A_i.
/// Throws DomainError for non-normal input.
HyperplaneVerdict hyperplane_union_verdict(const MatrixTuple& t);

}  // namespace projspec
