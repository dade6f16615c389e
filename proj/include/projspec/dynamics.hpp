#pragma once

#include <vector>

#include "projspec/numeric.hpp"
#include "projspec/pencil.hpp"
#include "projspec/proj_point.hpp"

namespace projspec {

/// A point of the Riemann sphere: a finite complex number or infinity.
class ExtendedComplex {
 public:
  ExtendedComplex(WideComplex v = 0) : v_(v) {}  // NOLINT(google-explicit-constructor)
  ExtendedComplex(long double re) : v_(re, 0) {}  // NOLINT(google-explicit-constructor)

  static ExtendedComplex infinity();

  bool is_infinite() const { return inf_; }
  /// Throws DomainError at infinity.
  WideComplex value() const;
  /// +inf at infinity.
  long double modulus() const;

 private:
  bool inf_ = false;
  WideComplex v_;
};

/// Chordal metric 2|a-b| / sqrt((1+|a|^2)(1+|b|^2)), extended to infinity.
long double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b);

inline constexpr long double kTauZeroTol = 1e-12L;
inline constexpr long double kRealAxisTol = 1e-9L;
inline constexpr long double kDegenerateTol = 1e-8L;
inline constexpr long double kIndeterminateTol = 1e-12L;
/// Moduli beyond this are treated as infinity by the Chebyshev map.
inline constexpr long double kOverflowModulus = 1e2400L;

/// (z0^2 - z1^2 - z2^2) / (2 z1 z2) on P^2, computed on canonical
/// coordinates: 0 when the numerator is below kTauZeroTol, infinity when the
/// numerator is nonzero and z1 z2 = 0.
ExtendedComplex tau(const ProjPoint& z);

/// T(x) = 2x^2 - 1, T(infinity) = infinity.
ExtendedComplex chebyshev(const ExtendedComplex& x);
ExtendedComplex chebyshev_iterate(ExtendedComplex x, int k);

/// Distance from tau to [-1, 1] is at most tol (infinity is never inside).
bool in_julia_interval(const ExtendedComplex& t, long double tol = kRealAxisTol);

/// [z0(z0^2 - z1^2 - z2^2) : z1^2 z2 : z2(z0^2 - z2^2)], canonical. Throws
/// DomainError at indeterminate points.
ProjPoint cubic_map(const ProjPoint& z);

/// [2 tau z0 : z1 : 2 tau z2 + z1], canonical. At tau = infinity the
/// degree-0 limit [z0 : 0 : z2] is used; [0:1:0] maps to [0:1:1].
/// Throws DomainError at [+-1:0:1].
ProjPoint renormalization_map(const ProjPoint& z);
/// n-fold composition of renormalization_map.
ProjPoint renormalization_iterate(ProjPoint z, int n);

enum class RationalMap { cubic, renormalization };

/// Points and projective lines making up an indeterminacy set.
struct IndeterminacyLocus {
  std::vector<ProjPoint> points;
  std::vector<LinearForm> lines;

  bool contains(const ProjPoint& z, long double tol = 1e-10L) const;
};

/// I_k of the cubic map (k = 1, 2) or of the renormalization map (any k).
/// I_2 of the cubic map contains the lines z0 = +-z2, whose images land in
/// I_1. Throws InvalidInput for other orders of the cubic map.
IndeterminacyLocus indeterminacy_set(RationalMap map, int order);

/// Chordal distance between tau(F_pi(z)) and T(tau(z)). Throws DomainError
/// (degenerate locus) when tau(z) is infinite, z1 z2 = 0, or
/// |z0^2 - z2^2| < delta on canonical coordinates.
long double semiconjugacy_residual(const ProjPoint& z, long double delta = kDegenerateTol);

/// 2^n prod_{k<n} T^k(t); infinity once the product overflows.
ExtendedComplex chebyshev_product(WideComplex t, int n);
/// sum_{j=1..n} 1 / chebyshev_product(t, j). Throws DomainError if a
/// product vanishes.
WideComplex reciprocal_sum(WideComplex t, int n);
/// The root of w^2 - 2tw + 1 = 0 with |w| < 1. Throws DomainError for t in
/// [-1, 1], where both roots lie on the unit circle.
WideComplex bounded_root(WideComplex t);

/// p_n(z) = chebyshev_product(tau(z), n). Throws DomainError at tau = infinity.
ExtendedComplex orbit_product(const ProjPoint& z, int n);
/// f_n(z) = sum_{j=1..n} 1/p_j(z). Requires tau(z) outside [-1, 1].
WideComplex partial_limit_sum(const ProjPoint& z, int n);
/// [z0 : z1/p_n : z2 + z1 f_n], canonical. Requires tau(z) finite and
/// outside [-1, 1].
ProjPoint iterate_closed(const ProjPoint& z, int n);
/// lim f_n = tau - sqrt(tau^2 - 1) on the bounded branch.
WideComplex limit_sum(const ProjPoint& z);
/// [z0 : 0 : z2 + z1 f(z)], the limit of the iterates off the spectrum.
ProjPoint limit_map(const ProjPoint& z);

struct EscapeParams {
  int maxiter = 100;
  long double radius = 10;
};

/// Returned by escape_count when the orbit stays bounded.
inline constexpr int kBounded = -1;

/// First n in [0, maxiter] with |T^n(t)| > radius, else kBounded. Infinity
/// escapes at 0.
int escape_count(const ExtendedComplex& t, const EscapeParams& params);

enum class JuliaMode { analytic, escape };

/// analytic: tau(z) within kRealAxisTol of [-1, 1]. escape: the Chebyshev
/// orbit of tau(z) stays bounded for maxiter steps.
bool julia_membership(const ProjPoint& z, JuliaMode mode, const EscapeParams& params = {});

struct OrbitRecord {
  ProjPoint start;
  ExtendedComplex tau0;
  int escape = kBounded;
  long double final_modulus = 0;
};

OrbitRecord chebyshev_orbit(const ProjPoint& z, const EscapeParams& params);

/// tau at the points of the projective spectrum of a pencil (A_0, A_1, A_2)
/// on the line through [1:0:0] and [0:z1:z2]: z0 runs over the eigenvalues
/// of -A_0^{-1}(z1 A_1 + z2 A_2). Sorted by real, then imaginary part.
/// Throws DomainError when A_0 is singular or z1 z2 = 0.
std::vector<WideComplex> spectral_tau_values(const MatrixPencil& p, Complex z1, Complex z2);

}  // namespace projspec
