#include "projspec/jointspec.hpp"

#include <algorithm>
#include <random>

#include <Eigen/Eigenvalues>

#include "projspec/errors.hpp"

namespace projspec {

MatrixTuple::MatrixTuple(std::vector<ComplexMatrix> matrices, bool check)
    : MatrixTuple(std::move(matrices), Commutativity::unchecked) {
  if (!check) return;
  double scale = 0;
  for (const auto& m : mats_) scale = std::max(scale, operator_norm(m));
  flag_ = max_commutator_norm() <= kCommuteTol * scale * scale ? Commutativity::verified_true
                                                                : Commutativity::verified_false;
}

MatrixTuple::MatrixTuple(std::vector<ComplexMatrix> matrices, Commutativity flag)
    : mats_(std::move(matrices)), flag_(flag) {
  if (mats_.empty()) throw InvalidInput("a matrix tuple needs at least one matrix");
  const auto d = mats_.front().rows();
  if (d < 1) throw DimensionError("tuple matrices must be at least 1x1");
  for (const auto& m : mats_) {
    if (m.rows() != d || m.cols() != d) {
      throw DimensionError("tuple matrices must all be " + std::to_string(d) + "x" +
                           std::to_string(d));
    }
    if (!all_finite(m)) throw InvalidInput("tuple matrix has non-finite entries");
  }
}

double MatrixTuple::max_commutator_norm() const {
  double worst = 0;
  for (std::size_t i = 0; i < mats_.size(); ++i) {
    for (std::size_t j = i + 1; j < mats_.size(); ++j) {
      const ComplexMatrix c = mats_[i] * mats_[j] - mats_[j] * mats_[i];
      worst = std::max(worst, operator_norm(c));
    }
  }
  return worst;
}

bool MatrixTuple::is_normal(double tol) const {
  return std::all_of(mats_.begin(), mats_.end(), [tol](const ComplexMatrix& a) {
    const double s = operator_norm(a);
    const ComplexMatrix c = a * a.adjoint() - a.adjoint() * a;
    return operator_norm(c) <= tol * s * s;
  });
}

MatrixTuple MatrixTuple::shifted(std::span<const Complex> lambda) const {
  if (lambda.size() != mats_.size()) {
    throw DimensionError("shift has " + std::to_string(lambda.size()) +
                         " entries for a tuple of " + std::to_string(mats_.size()));
  }
  std::vector<ComplexMatrix> out = mats_;
  const auto id = ComplexMatrix::Identity(dim(), dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= lambda[i] * id;
  return MatrixTuple(std::move(out), flag_);
}

MatrixPencil MatrixTuple::pencil() const {
  std::vector<ComplexMatrix> mats;
  mats.reserve(mats_.size() + 1);
  mats.push_back(ComplexMatrix::Identity(dim(), dim()));
  mats.insert(mats.end(), mats_.begin(), mats_.end());
  return MatrixPencil(std::move(mats));
}

std::vector<std::vector<int>> wedge_basis(std::size_t n, std::size_t p) {
  std::vector<std::vector<int>> out;
  if (p > n) return out;
  std::vector<int> cur(p);
  for (std::size_t i = 0; i < p; ++i) cur[i] = static_cast<int>(i);
  while (true) {
    out.push_back(cur);
    // advance to the next combination in lexicographic order
    int k = static_cast<int>(p) - 1;
    while (k >= 0 && cur[k] == static_cast<int>(n - p) + k) --k;
    if (k < 0) break;
    ++cur[k];
    for (std::size_t j = k + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t index_of(const std::vector<std::vector<int>>& basis, const std::vector<int>& s) {
  const auto it = std::lower_bound(basis.begin(), basis.end(), s);
  return static_cast<std::size_t>(it - basis.begin());
}

// (-1)^{#{s in set : s < i}}
double wedge_sign(const std::vector<int>& set, int i) {
  const auto below = std::count_if(set.begin(), set.end(), [i](int s) { return s < i; });
  return below % 2 ? -1.0 : 1.0;
}

// e_i ^ . : L^p -> L^{p+1}, scaled blockwise by the matrices of `t`.
ComplexMatrix exterior_map(const std::vector<ComplexMatrix>& t, std::size_t p) {
  const std::size_t n = t.size();
  const auto d = t.front().rows();
  const auto from = wedge_basis(n, p);
  const auto to = wedge_basis(n, p + 1);
  ComplexMatrix out = ComplexMatrix::Zero(d * to.size(), d * from.size());
  for (std::size_t col = 0; col < from.size(); ++col) {
    const auto& s = from[col];
    for (std::size_t i = 0; i < n; ++i) {
      const int ii = static_cast<int>(i);
      if (std::find(s.begin(), s.end(), ii) != s.end()) continue;
      std::vector<int> u = s;
      u.insert(std::upper_bound(u.begin(), u.end(), ii), ii);
      const std::size_t row = index_of(to, u);
      out.block(row * d, col * d, d, d) += wedge_sign(s, ii) * t[i];
    }
  }
  return out;
}

// iota_i : L^p -> L^{p-1}, scaled blockwise by the matrices of `t`.
ComplexMatrix contraction_map(const std::vector<ComplexMatrix>& t, std::size_t p) {
  const std::size_t n = t.size();
  const auto d = t.front().rows();
  const auto from = wedge_basis(n, p);
  const auto to = wedge_basis(n, p - 1);
  ComplexMatrix out = ComplexMatrix::Zero(d * to.size(), d * from.size());
  for (std::size_t col = 0; col < from.size(); ++col) {
    const auto& s = from[col];
    for (int i : s) {
      std::vector<int> u = s;
      u.erase(std::find(u.begin(), u.end(), i));
      const std::size_t row = index_of(to, u);
      out.block(row * d, col * d, d, d) += wedge_sign(s, i) * t[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

ComplexMatrix vertical_stack(const MatrixTuple& t) {
  const auto d = static_cast<Eigen::Index>(t.dim());
  ComplexMatrix v(d * static_cast<Eigen::Index>(t.size()), d);
  for (std::size_t i = 0; i < t.size(); ++i) v.block(i * d, 0, d, d) = t[i];
  return v;
}

ComplexMatrix horizontal_stack(const MatrixTuple& t) {
  const auto d = static_cast<Eigen::Index>(t.dim());
  ComplexMatrix h(d, d * static_cast<Eigen::Index>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) h.block(0, i * d, d, d) = t[i];
  return h;
}

}  // namespace

std::size_t KoszulComplex::space_dim(std::size_t p) const { return d * binomial(n, p); }

KoszulComplex koszul_build(const MatrixTuple& t) {
  KoszulComplex k;
  k.n = t.size();
  k.d = t.dim();
  for (std::size_t p = 0; p < k.n; ++p) k.boundaries.push_back(exterior_map(t.matrices(), p));
  return k;
}

bool koszul_is_exact(const KoszulComplex& k, double tol) {
  if (k.boundaries.size() != k.n) throw InvalidInput("malformed Koszul complex");
  std::vector<std::size_t> ranks;
  for (std::size_t p = 0; p < k.n; ++p) {
    const auto& b = k.boundaries[p];
    if (static_cast<std::size_t>(b.cols()) != k.space_dim(p) ||
        static_cast<std::size_t>(b.rows()) != k.space_dim(p + 1)) {
      throw InvalidInput("malformed Koszul complex: d_" + std::to_string(p) + " has wrong shape");
    }
    ranks.push_back(numeric_rank(b, tol));
  }
  for (std::size_t p = 0; p <= k.n; ++p) {
    const std::size_t incoming = p == 0 ? 0 : ranks[p - 1];
    const std::size_t outgoing = p == k.n ? 0 : ranks[p];
    if (incoming != k.space_dim(p) - outgoing) return false;
  }
  return true;
}

bool taylor_membership(const MatrixTuple& t, std::span<const Complex> lambda, double tol) {
  if (!t.commutes()) {
    throw DomainError("Taylor spectrum requires a verified commuting tuple");
  }
  return !koszul_is_exact(koszul_build(t.shifted(lambda)), tol);
}

HomotopyMaps splitting_homotopy(const MatrixTuple& a, const MatrixTuple& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) {
    throw DimensionError("splitting_homotopy: tuples differ in length or dimension");
  }
  const auto d = static_cast<Eigen::Index>(a.dim());
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  const double defect = operator_norm(sum - ComplexMatrix::Identity(d, d));
  if (defect > 1e-8) {
    throw DomainError("splitting_homotopy: ||sum A_i B_i - I|| = " + std::to_string(defect));
  }

  const std::size_t n = a.size();
  const KoszulComplex k = koszul_build(a);
  HomotopyMaps h;
  for (std::size_t p = 1; p <= n; ++p) h.maps.push_back(contraction_map(b.matrices(), p));

  for (std::size_t p = 0; p <= n; ++p) {
    const auto dim = static_cast<Eigen::Index>(k.space_dim(p));
    ComplexMatrix acc = -ComplexMatrix::Identity(dim, dim);
    if (p < n) acc += h.maps[p] * k.boundaries[p];
    if (p > 0) acc += k.boundaries[p - 1] * h.maps[p - 1];
    h.residual = std::max(h.residual, operator_norm(acc));
  }
  return h;
}

bool approx_point_membership(const MatrixTuple& t, std::span<const Complex> lambda, double tol) {
  return numeric_rank(vertical_stack(t.shifted(lambda)), tol) < t.dim();
}

bool harte_membership(const MatrixTuple& t, std::span<const Complex> lambda, double tol) {
  const MatrixTuple s = t.shifted(lambda);
  return numeric_rank(vertical_stack(s), tol) < t.dim() ||
         numeric_rank(horizontal_stack(s), tol) < t.dim();
}

MatrixTuple cho_takaguchi_inverse(const MatrixTuple& t, std::span<const Complex> lambda) {
  const MatrixTuple s = t.shifted(lambda);
  const auto d = static_cast<Eigen::Index>(t.dim());
  ComplexMatrix gram = ComplexMatrix::Zero(d, d);
  for (const auto& m : s.matrices()) gram += m * m.adjoint();
  if (is_singular(gram)) {
    throw DomainError("cho_takaguchi_inverse: sum of (A_j - l_j)(A_j - l_j)^* is singular; "
                      "lambda lies in the joint spectrum");
  }
  const ComplexMatrix inv = gram.inverse();
  std::vector<ComplexMatrix> out;
  for (const auto& m : s.matrices()) out.push_back(m.adjoint() * inv);
  return MatrixTuple(std::move(out));
}

std::vector<std::vector<Complex>> joint_eigenvalues(const MatrixTuple& t, std::uint64_t seed) {
  if (!t.commutes()) throw DomainError("joint_eigenvalues requires a verified commuting tuple");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const auto d = static_cast<Eigen::Index>(t.dim());
  ComplexMatrix mix = ComplexMatrix::Zero(d, d);
  for (const auto& m : t.matrices()) mix += Complex(unif(rng), unif(rng)) * m;

  const Eigen::ComplexSchur<ComplexMatrix> schur(mix);
  const ComplexMatrix& u = schur.matrixU();
  std::vector<std::vector<Complex>> out(t.dim(), std::vector<Complex>(t.size()));
  for (std::size_t j = 0; j < t.size(); ++j) {
    const ComplexMatrix tri = u.adjoint() * t[j] * u;
    for (Eigen::Index k = 0; k < d; ++k) out[k][j] = tri(k, k);
  }
  return out;
}

HyperplaneVerdict hyperplane_union_verdict(const MatrixTuple& t) {
  if (!t.is_normal()) throw DomainError("hyperplane_union_verdict requires normal matrices");
  HyperplaneVerdict v;
  const MultiPoly q = char_poly(t.pencil());
  v.degree = q.total_degree();

  double scale = 0;
  for (const auto& m : t.matrices()) scale = std::max(scale, operator_norm(m));
  v.commuting = t.commutativity() == Commutativity::unchecked
                    ? t.max_commutator_norm() <= kCommuteTol * scale * scale
                    : t.commutes();

  std::vector<Eigen::VectorXcd> spectra;
  for (const auto& m : t.matrices()) {
    spectra.push_back(Eigen::ComplexEigenSolver<ComplexMatrix>(m, false).eigenvalues());
  }

  // Cartesian product of the eigenvalue lists, deduplicated.
  std::vector<LinearForm> candidates;
  std::vector<std::size_t> pick(t.size(), 0);
  const std::size_t d = t.dim();
  while (true) {
    std::vector<Complex> w{1.0};
    for (std::size_t i = 0; i < t.size(); ++i) w.push_back(spectra[i](pick[i]));
    LinearForm form(std::move(w));
    const bool seen = std::any_of(candidates.begin(), candidates.end(),
                                  [&](const LinearForm& c) { return c.approx_equal(form); });
    if (!seen) candidates.push_back(std::move(form));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == d) pick[i++] = 0;
    if (i == pick.size()) break;
  }

  int total = 0;
  for (const auto& form : candidates) {
    const int m = linear_factor_multiplicity(q, form);
    if (m > 0) {
      v.factor_list.emplace_back(form, m);
      total += m;
    }
  }
  v.factors = total == v.degree;
  return v;
}

}  // namespace projspec
