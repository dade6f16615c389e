#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "projspec/numeric.hpp"

namespace projspec {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector of a monomial in at most kMaxVariables variables.
/// Ordered lexicographically with z_0 most significant.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exponents{};

  static Monomial from(std::initializer_list<int> exps);
  int degree() const;
  Monomial operator*(const Monomial& o) const;
  /// True iff every exponent of this is >= the matching one of `o`.
  bool divisible_by(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;

  auto operator<=>(const Monomial&) const = default;
};

/// Sparse multivariate polynomial with complex coefficients.
///
/// Coefficients of magnitude below kPruneTol are dropped after every
/// arithmetic step.
class MultiPoly {
 public:
  static constexpr double kPruneTol = 1e-12;
  using TermMap = std::map<Monomial, Complex>;

  explicit MultiPoly(std::size_t variables);

  static MultiPoly constant(std::size_t variables, Complex c);
  static MultiPoly variable(std::size_t variables, std::size_t index);
  /// sum_i coeffs[i] z_i
  static MultiPoly linear(std::span<const Complex> coeffs);

  std::size_t variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Complex coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, Complex c);

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  double max_abs_coefficient() const;

  Complex evaluate(std::span<const Complex> z) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(Complex c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);

  /// Quotient of a division known to be exact. Remainder terms below
  /// rel_tol * max|coef(this)| are treated as rounding noise; a larger
  /// non-divisible remainder throws NumericalError.
  MultiPoly exact_divide(const MultiPoly& divisor, double rel_tol = 1e-9) const;

  /// Substitutes z_k := sum_{j != k} r_j z_j. The result no longer involves
  /// z_k (its exponent is 0 in every term). `r[k]` is ignored.
  MultiPoly substitute(std::size_t k, std::span<const Complex> r) const;

  /// Synthetic division by (z_k - sum_{j != k} r_j z_j). Returns the quotient;
  /// the remainder equals substitute(k, r).
  MultiPoly divide_linear(std::size_t k, std::span<const Complex> r) const;

  /// Same polynomial with every coefficient replaced by its modulus.
  MultiPoly abs() const;

  /// Coefficient maps agree on the union of supports within `tol`.
  bool approx_equal(const MultiPoly& o, double tol) const;

  std::string to_string(int precision = 6) const;

 private:
  void prune();

  std::size_t vars_;
  TermMap terms_;
};

}  // namespace projspec
