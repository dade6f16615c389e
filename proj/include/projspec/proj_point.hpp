#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "projspec/numeric.hpp"

namespace projspec {

/// Homogeneous coordinates of a point of P^n.
///
/// Coordinates are stored exactly as supplied; canonical() rescales so the
/// coordinate of largest modulus becomes 1. Moduli within a relative 1e-12
/// of the maximum count as ties and the lowest index wins, so rounding noise
/// cannot flip the pivot.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<WideComplex> coords);
  ProjPoint(std::initializer_list<WideComplex> coords);

  std::size_t size() const { return coords_.size(); }
  const WideComplex& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<WideComplex>& coords() const { return coords_; }

  /// Index of the max-modulus coordinate (lowest index on ties).
  std::size_t pivot() const;
  ProjPoint canonical() const;
  ProjPoint scaled(WideComplex c) const;

  /// Both points divided by this point's pivot coordinate, compared entrywise.
  bool approx_equal(const ProjPoint& other, long double tol = 1e-9L) const;
  long double distance(const ProjPoint& other) const;

  /// Coordinates rounded to double precision.
  std::vector<Complex> to_complex() const;

  std::string to_string(int precision = 6) const;

 private:
  std::vector<WideComplex> coords_;
};

/// Coefficients of the form w_0 z_0 + ... + w_n z_n, normalized like a
/// ProjPoint (pivot coefficient equal to 1).
class LinearForm {
 public:
  explicit LinearForm(std::vector<Complex> coeffs);

  std::size_t size() const { return coeffs_.size(); }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  std::size_t pivot() const { return pivot_; }

  Complex evaluate(const std::vector<Complex>& z) const;
  bool approx_equal(const LinearForm& other, double tol = 1e-8) const;
  std::string to_string(int precision = 6) const;

 private:
  std::vector<Complex> coeffs_;
  std::size_t pivot_ = 0;
};

/// Parses "re", "re+imi", "imi", "-i" style complex literals.
WideComplex parse_complex(std::string_view text);
std::string format_complex(WideComplex c, int precision = 6);

/// Parses comma-separated homogeneous coordinates, e.g. "1,1+2i,-0.5i".
/// Optional surrounding brackets are accepted.
ProjPoint parse_point(std::string_view text);

}  // namespace projspec
