#include "projspec/pencil.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include <Eigen/Eigenvalues>

#include "projspec/errors.hpp"

namespace projspec {

MatrixPencil::MatrixPencil(std::vector<ComplexMatrix> matrices) : mats_(std::move(matrices)) {
  if (mats_.size() < 2) throw InvalidInput("a pencil needs at least two matrices (n >= 1)");
  const auto d = mats_.front().rows();
  if (d < 1) throw DimensionError("pencil matrices must be at least 1x1");
  bool nonzero = false;
  for (const auto& m : mats_) {
    if (m.rows() != d || m.cols() != d) {
      throw DimensionError("pencil matrices must all be " + std::to_string(d) + "x" +
                           std::to_string(d));
    }
    if (!all_finite(m)) throw InvalidInput("pencil matrix has non-finite entries");
    nonzero = nonzero || !m.isZero(0.0);
  }
  if (!nonzero) throw InvalidInput("pencil matrices are all zero");
}

ComplexMatrix evaluate(const MatrixPencil& p, const std::vector<Complex>& z) {
  if (z.size() != p.matrices().size()) {
    throw DimensionError("pencil has " + std::to_string(p.matrices().size()) +
                         " coefficients but the point has " + std::to_string(z.size()) +
                         " coordinates");
  }
  ComplexMatrix out = ComplexMatrix::Zero(p.dim(), p.dim());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] != Complex(0)) out += z[i] * p[i];
  }
  return out;
}

ComplexMatrix evaluate(const MatrixPencil& p, const ProjPoint& z) {
  return evaluate(p, z.to_complex());
}

bool spectrum_membership(const MatrixPencil& p, const ProjPoint& z, double tol) {
  return is_singular(evaluate(p, z), tol);
}

namespace {

// Laplace expansion along rows, memoized over the set of used columns.
MultiPoly expand_determinant(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t d = m.size();
  const std::size_t vars = m[0][0].variables();
  std::vector<MultiPoly> minors(std::size_t{1} << d, MultiPoly(vars));
  minors[0] = MultiPoly::constant(vars, 1.0);
  for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
    const int row = std::popcount(mask) - 1;
    MultiPoly acc(vars);
    int position = 0;
    for (std::size_t col = 0; col < d; ++col) {
      if (!(mask & (1u << col))) continue;
      const MultiPoly& sub = minors[mask & ~(1u << col)];
      // Sign of moving column `col` to the last slot among the selected ones.
      const int sign = ((std::popcount(mask) - 1 - position) % 2) ? -1 : 1;
      ++position;
      if (m[row][col].is_zero() || sub.is_zero()) continue;
      acc += m[row][col] * sub * Complex(sign);
    }
    minors[mask] = std::move(acc);
  }
  return minors.back();
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t d = m.size();
  const std::size_t vars = m[0][0].variables();
  MultiPoly previous = MultiPoly::constant(vars, 1.0);
  Complex sign = 1.0;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < d && m[r][k].is_zero()) ++r;
      if (r == d) return MultiPoly(vars);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num.exact_divide(previous);
      }
    }
    previous = m[k][k];
  }
  return m[d - 1][d - 1] * sign;
}

// With z_0 = 1 the determinant is a polynomial of degree <= d in each of
// z_1..z_n, so its values at (1, w^a_1, ..., w^a_n), w = exp(2 pi i/(d+1)),
// determine every coefficient through an (unitary, hence well conditioned)
// inverse DFT along each axis.
MultiPoly interpolated_char_poly(const MatrixPencil& p) {
  const std::size_t d = p.dim(), vars = p.matrices().size(), m = vars - 1, n = d + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= n;

  std::vector<Complex> roots(n);
  for (std::size_t k = 0; k < n; ++k) roots[k] = std::polar(1.0, 2 * M_PI * k / n);

  std::vector<Complex> values(total);
  std::vector<Complex> z(vars, 1.0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < m; ++i, rest /= n) z[i + 1] = roots[rest % n];
    values[idx] = evaluate(p, z).partialPivLu().determinant();
  }

  // axis i has stride n^i; replace values along it by their inverse DFT
  std::vector<Complex> line(n);
  std::size_t stride = 1;
  for (std::size_t axis = 0; axis < m; ++axis, stride *= n) {
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % n != 0) continue;
      for (std::size_t b = 0; b < n; ++b) {
        Complex acc = 0;
        for (std::size_t a = 0; a < n; ++a) {
          acc += values[base + a * stride] * std::conj(roots[(a * b) % n]);
        }
        line[b] = acc / static_cast<double>(n);
      }
      for (std::size_t b = 0; b < n; ++b) values[base + b * stride] = line[b];
    }
  }

  double largest = 0;
  for (const auto& v : values) largest = std::max(largest, std::abs(v));
  const double noise = 1e-12 * std::max(1.0, largest);
  MultiPoly out(vars);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (std::abs(values[idx]) <= noise) continue;
    Monomial mono;
    std::size_t rest = idx, degree = 0;
    for (std::size_t i = 0; i < m; ++i, rest /= n) {
      mono.exponents[i + 1] = static_cast<std::uint8_t>(rest % n);
      degree += rest % n;
    }
    if (degree > d) continue;  // absent in exact arithmetic
    mono.exponents[0] = static_cast<std::uint8_t>(d - degree);
    out.add_term(mono, values[idx]);
  }
  return out;
}

}  // namespace

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t d = m.size();
  if (d == 0) throw DimensionError("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != d) throw DimensionError("determinant of a non-square matrix");
  }
  if (d > kMaxSymbolicDim) {
    throw InvalidInput("symbolic determinant limited to " + std::to_string(kMaxSymbolicDim) +
                       "x" + std::to_string(kMaxSymbolicDim));
  }
  return d <= kMaxExpansionDim ? expand_determinant(m) : bareiss_determinant(m);
}

MultiPoly char_poly(const MatrixPencil& p) {
  const std::size_t d = p.dim();
  const std::size_t vars = p.matrices().size();
  if (d > kMaxSymbolicDim) {
    throw InvalidInput("char_poly: dimension " + std::to_string(d) + " exceeds the bound " +
                       std::to_string(kMaxSymbolicDim));
  }
  if (vars > kMaxVariables) {
    throw InvalidInput("char_poly: at most " + std::to_string(kMaxVariables) +
                       " pencil coefficients supported");
  }
  if (d > kMaxExpansionDim) {
    std::size_t grid = 1;
    for (std::size_t i = 1; i < vars && grid <= kMaxInterpolationPoints; ++i) grid *= d + 1;
    if (grid <= kMaxInterpolationPoints) return interpolated_char_poly(p);
  }
  std::vector<std::vector<MultiPoly>> entries(d, std::vector<MultiPoly>(d, MultiPoly(vars)));
  std::vector<Complex> coeffs(vars);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t i = 0; i < vars; ++i) coeffs[i] = p[i](r, c);
      entries[r][c] = MultiPoly::linear(coeffs);
    }
  }
  return determinant(entries);
}

namespace {

std::vector<Complex> substitution_for(const LinearForm& w) {
  // w.z = 0 with w_k = 1  <=>  z_k = -sum_{j != k} w_j z_j
  std::vector<Complex> r(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) r[j] = -w[j];
  return r;
}

}  // namespace

bool hyperplane_contained(const MultiPoly& q, const LinearForm& w, double tol) {
  if (q.is_zero()) throw DomainError("hyperplane_contained: zero polynomial");
  if (w.size() != q.variables()) {
    throw DimensionError("hyperplane_contained: form and polynomial disagree on variable count");
  }
  const std::size_t k = w.pivot();
  const std::vector<Complex> r = substitution_for(w);
  std::vector<Complex> r_abs(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) r_abs[j] = std::abs(r[j]);

  const MultiPoly rem = q.substitute(k, r);
  const MultiPoly scale = q.abs().substitute(k, r_abs);
  const double ref = std::max(scale.max_abs_coefficient(), q.max_abs_coefficient());
  return rem.max_abs_coefficient() <= tol * ref;
}

int linear_factor_multiplicity(const MultiPoly& q, const LinearForm& w, double tol) {
  const std::size_t k = w.pivot();
  const std::vector<Complex> r = substitution_for(w);
  MultiPoly rest = q;
  int m = 0;
  while (rest.total_degree() > 0 && hyperplane_contained(rest, w, tol)) {
    rest = rest.divide_linear(k, r);
    ++m;
  }
  return m;
}

ProjPoint singular_point_on_line(const MatrixPencil& p, const ProjPoint& u, const ProjPoint& v) {
  const ComplexMatrix au = evaluate(p, u);
  const ComplexMatrix av = evaluate(p, v);
  if (is_singular(av)) return v;
  // det(A(u) + s A(v)) = 0  <=>  -s is an eigenvalue of A(v)^{-1} A(u).
  const ComplexMatrix m = av.partialPivLu().solve(au);
  const Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
  const WideComplex s(-es.eigenvalues()(0).real(), -es.eigenvalues()(0).imag());
  std::vector<WideComplex> z(u.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = u[i] + s * v[i];
  return ProjPoint(std::move(z));
}

}  // namespace projspec
