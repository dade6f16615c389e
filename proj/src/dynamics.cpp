#include "projspec/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "projspec/errors.hpp"

namespace projspec {
namespace {

void require_plane(const ProjPoint& z) {
  if (z.size() != 3) {
    throw DimensionError("expected a point of P^2, got " + std::to_string(z.size()) +
                         " coordinates");
  }
}

// 2x^2 - 1 written out so the escape loop and chebyshev() round identically.
inline WideComplex chebyshev_step(const WideComplex& x) {
  const long double a = x.real(), b = x.imag();
  return {2 * (a * a - b * b) - 1, 4 * a * b};
}

ProjPoint normalized(WideComplex a, WideComplex b, WideComplex c, const char* what) {
  const long double m = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (m < kIndeterminateTol) throw DomainError(std::string(what) + ": indeterminate point");
  return ProjPoint({a, b, c}).canonical();
}

}  // namespace

ExtendedComplex ExtendedComplex::infinity() {
  ExtendedComplex e;
  e.inf_ = true;
  return e;
}

WideComplex ExtendedComplex::value() const {
  if (inf_) throw DomainError("value() of the point at infinity");
  return v_;
}

long double ExtendedComplex::modulus() const {
  return inf_ ? std::numeric_limits<long double>::infinity() : std::abs(v_);
}

long double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b) {
  if (a.is_infinite() && b.is_infinite()) return 0;
  if (a.is_infinite() || b.is_infinite()) {
    const long double m = a.is_infinite() ? b.modulus() : a.modulus();
    return 2 / std::sqrt(1 + m * m);
  }
  const long double ma = a.modulus(), mb = b.modulus();
  return 2 * std::abs(a.value() - b.value()) / std::sqrt((1 + ma * ma) * (1 + mb * mb));
}

ExtendedComplex tau(const ProjPoint& z) {
  require_plane(z);
  const ProjPoint c = z.canonical();
  const WideComplex num = c[0] * c[0] - c[1] * c[1] - c[2] * c[2];
  if (std::abs(num) <= kTauZeroTol) return WideComplex(0);
  const WideComplex den = 2.0L * c[1] * c[2];
  if (den == WideComplex(0)) return ExtendedComplex::infinity();
  const WideComplex t = num / den;
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) return ExtendedComplex::infinity();
  return t;
}

ExtendedComplex chebyshev(const ExtendedComplex& x) {
  if (x.is_infinite() || x.modulus() > kOverflowModulus) return ExtendedComplex::infinity();
  return chebyshev_step(x.value());
}

ExtendedComplex chebyshev_iterate(ExtendedComplex x, int k) {
  if (k < 0) throw InvalidInput("chebyshev_iterate: negative count");
  for (int i = 0; i < k && !x.is_infinite(); ++i) x = chebyshev(x);
  return x;
}

bool in_julia_interval(const ExtendedComplex& t, long double tol) {
  if (t.is_infinite()) return false;
  const WideComplex v = t.value();
  const long double over = std::max(std::abs(v.real()) - 1, 0.0L);
  return std::hypot(over, v.imag()) <= tol;
}

ProjPoint cubic_map(const ProjPoint& z) {
  require_plane(z);
  const ProjPoint c = z.canonical();
  const WideComplex z0 = c[0], z1 = c[1], z2 = c[2];
  return normalized(z0 * (z0 * z0 - z1 * z1 - z2 * z2), z1 * z1 * z2, z2 * (z0 * z0 - z2 * z2),
                    "cubic_map");
}

ProjPoint renormalization_map(const ProjPoint& z) {
  require_plane(z);
  const ProjPoint c = z.canonical();
  const ExtendedComplex t = tau(c);
  if (t.is_infinite()) {
    if (c[0] == WideComplex(0) && c[2] == WideComplex(0)) return ProjPoint({0, 1, 1});
    return ProjPoint({c[0], 0, c[2]}).canonical();
  }
  const WideComplex tv = t.value();
  return normalized(2.0L * tv * c[0], c[1], 2.0L * tv * c[2] + c[1], "renormalization_map");
}

ProjPoint renormalization_iterate(ProjPoint z, int n) {
  if (n < 0) throw InvalidInput("renormalization_iterate: negative count");
  for (int i = 0; i < n; ++i) z = renormalization_map(z);
  return z;
}

bool IndeterminacyLocus::contains(const ProjPoint& z, long double tol) const {
  for (const auto& p : points) {
    if (p.approx_equal(z, tol)) return true;
  }
  const std::vector<Complex> zc = z.canonical().to_complex();
  for (const auto& w : lines) {
    if (std::abs(w.evaluate(zc)) <= tol) return true;
  }
  return false;
}

IndeterminacyLocus indeterminacy_set(RationalMap map, int order) {
  if (order < 0) throw InvalidInput("indeterminacy_set: negative order");
  IndeterminacyLocus locus;
  if (order == 0) return locus;
  if (map == RationalMap::renormalization) {
    locus.points = {ProjPoint({1, 0, 1}), ProjPoint({-1, 0, 1})};
    return locus;
  }
  if (order > 2) {
    throw InvalidInput("indeterminacy_set: the cubic map is supported for orders 1 and 2 only");
  }
  locus.points = {ProjPoint({1, 1, 0}), ProjPoint({-1, 1, 0}), ProjPoint({0, 1, 0}),
                  ProjPoint({1, 0, 1}), ProjPoint({-1, 0, 1})};
  if (order == 2) {
    // F maps z0 = z2 onto [-1:1:0] and z0 = -z2 onto [1:1:0].
    locus.lines = {LinearForm({1.0, 0.0, -1.0}), LinearForm({1.0, 0.0, 1.0})};
  }
  return locus;
}

long double semiconjugacy_residual(const ProjPoint& z, long double delta) {
  require_plane(z);
  const ProjPoint c = z.canonical();
  const ExtendedComplex t = tau(c);
  if (t.is_infinite()) throw DomainError("semiconjugacy: degenerate locus (tau infinite)");
  if (c[1] * c[2] == WideComplex(0)) throw DomainError("semiconjugacy: degenerate locus (z1 z2 = 0)");
  if (std::abs(c[0] * c[0] - c[2] * c[2]) < delta) {
    throw DomainError("semiconjugacy: degenerate locus (z0^2 = z2^2)");
  }
  return chordal_distance(tau(renormalization_map(c)), chebyshev(t));
}

ExtendedComplex chebyshev_product(WideComplex t, int n) {
  if (n < 0) throw InvalidInput("chebyshev_product: negative count");
  const long double log_limit = std::log(kOverflowModulus) * 1.6L;  // ~1e3840
  WideComplex prod = 1;
  ExtendedComplex x = t;
  for (int k = 0; k < n; ++k) {
    if (x.is_infinite()) return ExtendedComplex::infinity();
    const WideComplex factor = 2.0L * x.value();
    if (prod != WideComplex(0) && factor != WideComplex(0) &&
        std::log(std::abs(prod)) + std::log(std::abs(factor)) > log_limit) {
      return ExtendedComplex::infinity();
    }
    prod *= factor;
    x = chebyshev(x);
  }
  return prod;
}

WideComplex reciprocal_sum(WideComplex t, int n) {
  if (n < 1) throw InvalidInput("reciprocal_sum: count must be >= 1");
  WideComplex sum = 0;
  for (int j = 1; j <= n; ++j) {
    const ExtendedComplex p = chebyshev_product(t, j);
    if (p.is_infinite()) break;  // every later term is smaller still
    if (p.value() == WideComplex(0)) {
      throw DomainError("reciprocal_sum: p_" + std::to_string(j) + " vanishes");
    }
    sum += 1.0L / p.value();
  }
  return sum;
}

WideComplex bounded_root(WideComplex t) {
  if (in_julia_interval(t, 0)) throw DomainError("bounded_root: tau lies in [-1, 1]");
  const WideComplex s = std::sqrt(t * t - 1.0L);
  const WideComplex plus = t + s, minus = t - s;
  // take the large root and invert it; the roots multiply to 1
  return 1.0L / (std::abs(plus) >= std::abs(minus) ? plus : minus);
}

namespace {

WideComplex fatou_tau(const ProjPoint& z, const char* what) {
  const ExtendedComplex t = tau(z);
  if (t.is_infinite()) throw DomainError(std::string(what) + ": tau is infinite");
  if (in_julia_interval(t)) throw DomainError(std::string(what) + ": point lies in the spectrum");
  return t.value();
}

}  // namespace

ExtendedComplex orbit_product(const ProjPoint& z, int n) {
  const ExtendedComplex t = tau(z);
  if (t.is_infinite()) throw DomainError("orbit_product: tau is infinite");
  return chebyshev_product(t.value(), n);
}

WideComplex partial_limit_sum(const ProjPoint& z, int n) {
  return reciprocal_sum(fatou_tau(z, "partial_limit_sum"), n);
}

ProjPoint iterate_closed(const ProjPoint& z, int n) {
  if (n < 0) throw InvalidInput("iterate_closed: negative count");
  const WideComplex t = fatou_tau(z, "iterate_closed");
  const ProjPoint c = z.canonical();
  if (n == 0) return c;
  const ExtendedComplex p = chebyshev_product(t, n);
  const WideComplex middle = p.is_infinite() ? WideComplex(0) : c[1] / p.value();
  return ProjPoint({c[0], middle, c[2] + c[1] * reciprocal_sum(t, n)}).canonical();
}

WideComplex limit_sum(const ProjPoint& z) { return bounded_root(fatou_tau(z, "limit_sum")); }

ProjPoint limit_map(const ProjPoint& z) {
  const WideComplex f = limit_sum(z);
  const ProjPoint c = z.canonical();
  return ProjPoint({c[0], 0, c[2] + c[1] * f}).canonical();
}

int escape_count(const ExtendedComplex& t, const EscapeParams& params) {
  if (t.is_infinite()) return 0;
  const long double r2 = params.radius * params.radius;
  WideComplex x = t.value();
  for (int n = 0; n <= params.maxiter; ++n) {
    if (std::norm(x) > r2) return n;
    x = chebyshev_step(x);
  }
  return kBounded;
}

bool julia_membership(const ProjPoint& z, JuliaMode mode, const EscapeParams& params) {
  const ExtendedComplex t = tau(z);
  if (mode == JuliaMode::analytic) return in_julia_interval(t);
  return escape_count(t, params) == kBounded;
}

OrbitRecord chebyshev_orbit(const ProjPoint& z, const EscapeParams& params) {
  OrbitRecord rec{z, tau(z), kBounded, 0};
  rec.escape = escape_count(rec.tau0, params);
  const int steps = rec.escape == kBounded ? params.maxiter : rec.escape;
  rec.final_modulus = chebyshev_iterate(rec.tau0, steps).modulus();
  return rec;
}

std::vector<WideComplex> spectral_tau_values(const MatrixPencil& p, Complex z1, Complex z2) {
  if (p.parameters() != 2) throw DimensionError("spectral_tau_values needs a pencil on P^2");
  if (z1 * z2 == Complex(0)) throw DomainError("spectral_tau_values: z1 z2 must be nonzero");
  if (is_singular(p[0])) throw DomainError("spectral_tau_values: A_0 is singular");
  const ComplexMatrix m = -p[0].partialPivLu().solve(z1 * p[1] + z2 * p[2]);
  Eigen::VectorXcd eig;
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() == 0) {
    // group pencils at real (z1, z2): symmetric, and much cheaper to solve
    eig = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(m, Eigen::EigenvaluesOnly)
              .eigenvalues()
              .cast<Complex>();
  } else {
    eig = Eigen::ComplexEigenSolver<ComplexMatrix>(m, false).eigenvalues();
  }
  const WideComplex w1(z1.real(), z1.imag()), w2(z2.real(), z2.imag());
  std::vector<WideComplex> out;
  for (Eigen::Index k = 0; k < eig.size(); ++k) {
    const WideComplex z0(eig(k).real(), eig(k).imag());
    out.push_back((z0 * z0 - w1 * w1 - w2 * w2) / (2.0L * w1 * w2));
  }
  std::sort(out.begin(), out.end(), [](const WideComplex& a, const WideComplex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace projspec
