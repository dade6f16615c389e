#include "projspec/proj_point.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "projspec/errors.hpp"

namespace projspec {
namespace {

constexpr long double kTieTol = 1e-12L;

template <typename T>
std::size_t pivot_index(const std::vector<std::complex<T>>& v) {
  T best = 0;
  for (const auto& c : v) best = std::max(best, std::abs(c));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= (1 - static_cast<T>(kTieTol)) * best) return i;
  }
  return 0;
}

long double parse_real(std::string_view text, std::string_view whole) {
  const std::string s(text);
  if (s.empty()) throw InvalidInput("empty number in '" + std::string(whole) + "'");
  char* end = nullptr;
  errno = 0;
  const long double v = std::strtold(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw InvalidInput("cannot parse number '" + s + "' in '" + std::string(whole) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ProjPoint::ProjPoint(std::vector<WideComplex> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidInput("projective point needs at least one coordinate");
  bool nonzero = false;
  for (const auto& c : coords_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidInput("projective point has a non-finite coordinate");
    }
    nonzero = nonzero || c != WideComplex(0);
  }
  if (!nonzero) throw InvalidInput("projective point has all coordinates zero");
}

ProjPoint::ProjPoint(std::initializer_list<WideComplex> coords)
    : ProjPoint(std::vector<WideComplex>(coords)) {}

std::size_t ProjPoint::pivot() const { return pivot_index(coords_); }

ProjPoint ProjPoint::canonical() const {
  const WideComplex p = coords_[pivot()];
  std::vector<WideComplex> out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[i] / p;
  out[pivot()] = 1;
  return ProjPoint(std::move(out));
}

ProjPoint ProjPoint::scaled(WideComplex c) const {
  std::vector<WideComplex> out(coords_);
  for (auto& x : out) x *= c;
  return ProjPoint(std::move(out));
}

long double ProjPoint::distance(const ProjPoint& other) const {
  if (other.size() != size()) {
    throw DimensionError("cannot compare points of P^" + std::to_string(size() - 1) +
                         " and P^" + std::to_string(other.size() - 1));
  }
  const std::size_t k = pivot();
  if (std::abs(other[k]) == 0) return std::numeric_limits<long double>::infinity();
  long double d = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    d = std::max(d, std::abs(coords_[i] / coords_[k] - other[i] / other[k]));
  }
  return d;
}

bool ProjPoint::approx_equal(const ProjPoint& other, long double tol) const {
  return distance(other) <= tol;
}

std::vector<Complex> ProjPoint::to_complex() const {
  std::vector<Complex> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    out.emplace_back(static_cast<double>(c.real()), static_cast<double>(c.imag()));
  }
  return out;
}

std::string ProjPoint::to_string(int precision) const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ":";
    s += format_complex(coords_[i], precision);
  }
  return s + "]";
}

LinearForm::LinearForm(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidInput("linear form needs at least one coefficient");
  bool nonzero = false;
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidInput("linear form has a non-finite coefficient");
    }
    nonzero = nonzero || c != Complex(0);
  }
  if (!nonzero) throw InvalidInput("linear form has all coefficients zero");
  pivot_ = pivot_index(coeffs_);
  const Complex p = coeffs_[pivot_];
  for (auto& c : coeffs_) c /= p;
  coeffs_[pivot_] = 1;
}

Complex LinearForm::evaluate(const std::vector<Complex>& z) const {
  if (z.size() != coeffs_.size()) throw DimensionError("linear form: coordinate count mismatch");
  Complex s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) s += coeffs_[i] * z[i];
  return s;
}

bool LinearForm::approx_equal(const LinearForm& other, double tol) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (std::abs(coeffs_[i] - other[i]) > tol) return false;
  }
  return true;
}

std::string LinearForm::to_string(int precision) const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == Complex(0)) continue;
    if (!s.empty()) s += " + ";
    const WideComplex c(coeffs_[i].real(), coeffs_[i].imag());
    s += "(" + format_complex(c, precision) + ")*z" + std::to_string(i);
  }
  return s;
}

WideComplex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw InvalidInput("empty complex literal");
  if (s.back() != 'i') return {parse_real(s, text), 0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = 0;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re = trim(body.substr(0, split));
  std::string_view im = trim(body.substr(split));
  long double imv = 0;
  if (im.empty() || im == "+") {
    imv = 1;
  } else if (im == "-") {
    imv = -1;
  } else {
    if (im.front() == '+') im.remove_prefix(1);
    imv = parse_real(im, text);
  }
  return {re.empty() ? 0 : parse_real(re, text), imv};
}

std::string format_complex(WideComplex c, int precision) {
  std::ostringstream os;
  os.precision(precision);
  const long double re = c.real() == 0 ? 0 : c.real();  // drop negative zero
  const long double im = c.imag() == 0 ? 0 : c.imag();
  if (im == 0) {
    os << re;
  } else if (re == 0) {
    os << im << "i";
  } else {
    os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  }
  return os.str();
}

ProjPoint parse_point(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) s.remove_prefix(1);
  if (!s.empty() && (s.back() == ']' || s.back() == ')')) s.remove_suffix(1);
  std::vector<WideComplex> coords;
  while (true) {
    const std::size_t comma = s.find_first_of(",:");
    coords.push_back(parse_complex(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return ProjPoint(std::move(coords));
}

}  // namespace projspec
