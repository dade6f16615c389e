#include "projspec/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "projspec/errors.hpp"
#include "projspec/proj_point.hpp"

namespace projspec {

Monomial Monomial::from(std::initializer_list<int> exps) {
  if (exps.size() > kMaxVariables) throw DimensionError("monomial has too many variables");
  Monomial m;
  std::size_t i = 0;
  for (int e : exps) {
    if (e < 0 || e > 255) throw InvalidInput("monomial exponent out of range");
    m.exponents[i++] = static_cast<std::uint8_t>(e);
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exponents) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const int e = exponents[i] + o.exponents[i];
    if (e > 255) throw NumericalError("monomial exponent overflow");
    m.exponents[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exponents[i] < o.exponents[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exponents[i] = static_cast<std::uint8_t>(exponents[i] - o.exponents[i]);
  }
  return m;
}

MultiPoly::MultiPoly(std::size_t variables) : vars_(variables) {
  if (variables == 0 || variables > kMaxVariables) {
    throw DimensionError("polynomials support 1.." + std::to_string(kMaxVariables) +
                         " variables, got " + std::to_string(variables));
  }
}

MultiPoly MultiPoly::constant(std::size_t variables, Complex c) {
  MultiPoly p(variables);
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw DimensionError("variable index out of range");
  MultiPoly p(variables);
  Monomial m;
  m.exponents[index] = 1;
  p.add_term(m, 1.0);
  return p;
}

MultiPoly MultiPoly::linear(std::span<const Complex> coeffs) {
  MultiPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m;
    m.exponents[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

Complex MultiPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Complex(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, Complex c) {
  for (std::size_t i = vars_; i < kMaxVariables; ++i) {
    if (m.exponents[i] != 0) throw DimensionError("monomial uses an undeclared variable");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneTol) terms_.erase(it);
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

double MultiPoly::max_abs_coefficient() const {
  double best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, std::abs(c));
  return best;
}

Complex MultiPoly::evaluate(std::span<const Complex> z) const {
  if (z.size() != vars_) throw DimensionError("polynomial evaluated at wrong coordinate count");
  Complex sum = 0;
  for (const auto& [m, c] : terms_) {
    Complex term = c;
    for (std::size_t i = 0; i < vars_; ++i) {
      for (int e = 0; e < m.exponents[i]; ++e) term *= z[i];
    }
    sum += term;
  }
  return sum;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) throw DimensionError("polynomial variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.vars_ != vars_) throw DimensionError("polynomial variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r(*this);
  return r += o;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r(*this);
  return r -= o;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (o.vars_ != vars_) throw DimensionError("polynomial variable count mismatch");
  MultiPoly r(vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      auto [it, inserted] = r.terms_.try_emplace(ma * mb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  r.prune();
  return r;
}

MultiPoly MultiPoly::operator*(Complex c) const {
  MultiPoly r(vars_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

void MultiPoly::prune() {
  std::erase_if(terms_, [](const auto& t) { return std::abs(t.second) < kPruneTol; });
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& divisor, double rel_tol) const {
  if (divisor.vars_ != vars_) throw DimensionError("polynomial variable count mismatch");
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  const double noise = rel_tol * max_abs_coefficient();
  const auto& [lead_m, lead_c] = *divisor.terms_.rbegin();

  MultiPoly quotient(vars_);
  MultiPoly rest(*this);
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms_.rbegin();
    if (!m.divisible_by(lead_m)) {
      if (std::abs(c) > noise) {
        throw NumericalError("exact_divide: non-zero remainder term of size " +
                             std::to_string(std::abs(c)));
      }
      rest.terms_.erase(m);
      continue;
    }
    const Monomial qm = m / lead_m;
    const Complex qc = c / lead_c;
    quotient.add_term(qm, qc);
    for (const auto& [dm, dc] : divisor.terms_) rest.add_term(qm * dm, -qc * dc);
    rest.terms_.erase(m);  // cancelled exactly in theory
  }
  return quotient;
}

namespace {

MultiPoly times_monomial(const MultiPoly& p, const Monomial& m, Complex c) {
  MultiPoly r(p.variables());
  for (const auto& [pm, pc] : p.terms()) r.add_term(pm * m, pc * c);
  return r;
}

MultiPoly replacement(std::size_t vars, std::size_t k, std::span<const Complex> r) {
  if (r.size() != vars) throw DimensionError("substitution vector has wrong length");
  if (k >= vars) throw DimensionError("substitution index out of range");
  MultiPoly lin(vars);
  for (std::size_t j = 0; j < vars; ++j) {
    if (j == k) continue;
    Monomial m;
    m.exponents[j] = 1;
    lin.add_term(m, r[j]);
  }
  return lin;
}

}  // namespace

MultiPoly MultiPoly::substitute(std::size_t k, std::span<const Complex> r) const {
  const MultiPoly lin = replacement(vars_, k, r);
  std::vector<MultiPoly> powers{MultiPoly::constant(vars_, 1.0)};
  MultiPoly out(vars_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponents[k];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * lin);
    Monomial rest = m;
    rest.exponents[k] = 0;
    out += times_monomial(powers[e], rest, c);
  }
  return out;
}

MultiPoly MultiPoly::divide_linear(std::size_t k, std::span<const Complex> r) const {
  const MultiPoly lin = replacement(vars_, k, r);
  int top = 0;
  for (const auto& [m, c] : terms_) top = std::max(top, int(m.exponents[k]));
  if (top == 0) return MultiPoly(vars_);

  // slices[j] = coefficient of z_k^j, a polynomial free of z_k.
  std::vector<MultiPoly> slices(top + 1, MultiPoly(vars_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.exponents[k] = 0;
    slices[m.exponents[k]].add_term(rest, c);
  }
  Monomial zk;
  zk.exponents[k] = 1;

  MultiPoly quotient(vars_);
  MultiPoly b = slices[top];
  for (int j = top - 1; j >= 0; --j) {
    Monomial shift;
    shift.exponents[k] = static_cast<std::uint8_t>(j);
    quotient += times_monomial(b, shift, 1.0);
    if (j > 0) b = slices[j] + lin * b;
  }
  return quotient;
}

MultiPoly MultiPoly::abs() const {
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, std::abs(c));
  return r;
}

bool MultiPoly::approx_equal(const MultiPoly& o, double tol) const {
  if (o.vars_ != vars_) return false;
  for (const auto& [m, c] : terms_) {
    if (std::abs(c - o.coefficient(m)) > tol) return false;
  }
  for (const auto& [m, c] : o.terms_) {
    if (std::abs(c - coefficient(m)) > tol) return false;
  }
  return true;
}

std::string MultiPoly::to_string(int precision) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    const WideComplex c(it->second.real(), it->second.imag());
    s += "(" + format_complex(c, precision) + ")";
    for (std::size_t i = 0; i < vars_; ++i) {
      const int e = it->first.exponents[i];
      if (e == 0) continue;
      s += "*z" + std::to_string(i);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

}  // namespace projspec
