#include "projspec/sampling.hpp"

#include "projspec/dynamics.hpp"

namespace projspec {
namespace {

Complex uniform_complex(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  return {re, u(rng)};
}

}  // namespace

ComplexMatrix random_matrix(std::size_t d, Rng& rng) {
  std::normal_distribution<double> normal;
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix m(n, n);
  // column-major fill order keeps the draw sequence independent of Eigen internals
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      const double re = normal(rng);
      m(r, c) = Complex(re, normal(rng));
    }
  }
  return m;
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  const Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(d, rng));
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex rkk = r(k, k);
    if (std::abs(rkk) > 0) q.col(k) *= rkk / std::abs(rkk);
  }
  return q;
}

std::vector<ComplexMatrix> random_normal_commuting(std::size_t n, std::size_t d, Rng& rng) {
  const ComplexMatrix u = random_unitary(d, rng);
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::VectorXcd diag(static_cast<Eigen::Index>(d));
    for (Eigen::Index k = 0; k < diag.size(); ++k) diag(k) = uniform_complex(rng);
    out.push_back(u * diag.asDiagonal() * u.adjoint());
  }
  return out;
}

std::vector<ComplexMatrix> random_commuting(std::size_t n, std::size_t d, Rng& rng) {
  const ComplexMatrix m = random_matrix(d, rng) / std::sqrt(static_cast<double>(d));
  const auto id = ComplexMatrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    // c0 + c1 m + c2 m^2
    const Complex c0 = uniform_complex(rng), c1 = uniform_complex(rng), c2 = uniform_complex(rng);
    out.push_back(c0 * id + c1 * m + c2 * (m * m));
  }
  return out;
}

std::pair<ComplexMatrix, ComplexMatrix> random_normal_pair(std::size_t d, double eps, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(d);
  const ComplexMatrix u = random_unitary(d, rng);
  Eigen::VectorXcd d1(n), d2(n);
  for (Eigen::Index k = 0; k < n; ++k) d1(k) = uniform_complex(rng);
  for (Eigen::Index k = 0; k < n; ++k) d2(k) = uniform_complex(rng);
  const ComplexMatrix g = random_matrix(d, rng);
  ComplexMatrix h = (g + g.adjoint()) / 2.0;
  h /= operator_norm(h);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix k = Complex(0, eps / 2) * h;
  const ComplexMatrix cayley = (id - k).inverse() * (id + k);
  const ComplexMatrix v = u * cayley;
  return {u * d1.asDiagonal() * u.adjoint(), v * d2.asDiagonal() * v.adjoint()};
}

ProjPoint random_plane_point(Rng& rng) {
  std::vector<WideComplex> z(3);
  for (auto& c : z) {
    const Complex w = uniform_complex(rng);
    c = WideComplex(w.real(), w.imag());
  }
  if (z[0] == WideComplex(0) && z[1] == WideComplex(0) && z[2] == WideComplex(0)) z[0] = 1;
  return ProjPoint(std::move(z));
}

ProjPoint random_fatou_point(Rng& rng, long double margin) {
  for (;;) {
    ProjPoint p = random_plane_point(rng);
    const ExtendedComplex t = tau(p);
    if (!t.is_infinite() && !in_julia_interval(t, margin)) return p;
  }
}

}  // namespace projspec
