#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "projspec/dynamics.hpp"
#include "projspec/errors.hpp"
#include "projspec/groups.hpp"

using namespace projspec;

namespace {

std::size_t element_order(const CayleyTable& c, std::size_t g) {
  std::size_t x = g, k = 1;
  while (x != c.identity) {
    x = c.table[g][x];
    ++k;
  }
  return k;
}

std::map<std::size_t, int> order_histogram(const CayleyTable& c) {
  std::map<std::size_t, int> h;
  for (std::size_t g = 0; g < c.order; ++g) ++h[element_order(c, g)];
  return h;
}

std::map<std::size_t, int> dihedral_histogram(int n) {
  std::map<std::size_t, int> h;
  for (int g = 0; g < 2 * n; ++g) {
    int x = g;
    std::size_t k = 1;
    while (x != 0) {
      x = oracle::dihedral_mul(g, x, n);
      ++k;
    }
    ++h[k];
  }
  return h;
}

bool associative(const CayleyTable& c) {
  for (std::size_t a = 0; a < c.order; ++a) {
    for (std::size_t b = 0; b < c.order; ++b) {
      for (std::size_t d = 0; d < c.order; ++d) {
        if (c.table[c.table[a][b]][d] != c.table[a][c.table[b][d]]) return false;
      }
    }
  }
  return true;
}

bool is_permutation_matrix(const ComplexMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    int ones = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (m(r, c) == Complex(1)) {
        ++ones;
      } else if (m(r, c) != Complex(0)) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return (m.cwiseAbs().colwise().sum().array() == 1).all();
}

}  // namespace

TEST_CASE("dihedral tables match the r^k s^e model") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const CayleyTable c = dihedral_cayley(n);
    CHECK(c.order == static_cast<std::size_t>(2 * n));
    CHECK_NOTHROW(c.validate());
    CHECK(associative(c));
    CHECK(order_histogram(c) == dihedral_histogram(n));
  }
}

TEST_CASE("cyclic tables") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const CayleyTable c = cyclic_cayley(n);
    CHECK(c.order == n);
    CHECK(associative(c));
    CHECK(element_order(c, c.generators[0]) == n);
  }
}

TEST_CASE("coset enumeration with coincidences") {
  // S3 and the quaternion group
  const CayleyTable s3 = cayley_from_presentation({"s", "r"}, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}});
  CHECK(s3.order == 6);
  CHECK(associative(s3));
  CHECK(s3.table[s3.generators[0]][s3.generators[1]] != s3.table[s3.generators[1]][s3.generators[0]]);

  const CayleyTable q8 =
      cayley_from_presentation({"a", "b"}, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}});
  CHECK(q8.order == 8);
  CHECK(associative(q8));
  const auto h = order_histogram(q8);
  CHECK(h.at(1) == 1);
  CHECK(h.at(2) == 1);
  CHECK(h.at(4) == 6);

  // a redundant generator collapses onto the identity
  CHECK(cayley_from_presentation({"a", "b"}, {{1, 1, 1}, {2}}).order == 3);
  CHECK_THROWS_AS(cayley_from_presentation({"a"}, {}, 50), InvalidInput);
}

TEST_CASE("regular representations are homomorphisms") {
  const CayleyTable c = dihedral_cayley(4);
  const GroupRep rep = regular_rep(c);
  CHECK_NOTHROW(rep.verify());
  for (const auto& g : rep.generators) CHECK(is_permutation_matrix(g));
  // build lambda(g) for every g from the generators and check multiplicativity
  std::vector<ComplexMatrix> lam(c.order);
  for (std::size_t g = 0; g < c.order; ++g) {
    ComplexMatrix m = ComplexMatrix::Zero(8, 8);
    for (std::size_t h = 0; h < c.order; ++h) m(c.table[g][h], h) = 1;
    lam[g] = m;
  }
  for (std::size_t g = 0; g < c.order; ++g) {
    for (std::size_t h = 0; h < c.order; ++h) {
      CHECK((lam[g] * lam[h] - lam[c.table[g][h]]).norm() == 0);
    }
  }
  CHECK((lam[c.generators[0]] - rep.generators[0]).norm() == 0);
  CHECK(operator_norm(markov_operator(rep)) == doctest::Approx(1));
}

TEST_CASE("Koopman truncations") {
  for (int level = 0; level <= 8; ++level) {
    CAPTURE(level);
    const GroupRep rep = koopman_truncation(level);
    CHECK(rep.dim() == std::size_t{1} << level);
    CHECK_NOTHROW(rep.verify());
    for (const auto& g : rep.generators) {
      CHECK(is_permutation_matrix(g));
      CHECK((g * g - ComplexMatrix::Identity(g.rows(), g.cols())).norm() == 0);
    }
    CHECK(operator_norm(markov_operator(rep)) <= 1 + 1e-12);
  }
  CHECK_THROWS_AS(koopman_truncation(13), InvalidInput);
  CHECK_THROWS_AS(koopman_truncation(-1), InvalidInput);

  SUBCASE("tau-values are cos(pi k / 2^(L-1))") {
    for (int level = 1; level <= 8; ++level) {
      CAPTURE(level);
      const auto taus = spectral_tau_values(group_pencil(koopman_truncation(level)),
                                            Complex(0.4, -0.3), Complex(1.1, 0.6));
      auto want = oracle::koopman_taus(level);
      std::vector<double> got;
      for (const auto& t : taus) {
        CHECK(std::abs(t.imag()) < 1e-9);
        got.push_back(static_cast<double>(t.real()));
      }
      // distinct values, each present with some multiplicity
      std::sort(got.begin(), got.end());
      std::vector<double> distinct;
      for (double v : got) {
        if (distinct.empty() || v - distinct.back() > 1e-7) distinct.push_back(v);
      }
      REQUIRE(distinct.size() == want.size());
      for (std::size_t k = 0; k < want.size(); ++k) CHECK(distinct[k] == doctest::Approx(want[k]).epsilon(1e-9));
    }
  }
}

TEST_CASE("H0 containment") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(h0_containment_test(regular_rep(cyclic_cayley(n))).contained);
  for (std::size_t n = 2; n <= 4; ++n) CHECK(h0_containment_test(regular_rep(dihedral_cayley(n))).contained);
  const H0Result sampled = h0_containment_test(koopman_truncation(5));
  CHECK(sampled.contained);
  CHECK_FALSE(sampled.exact);
  CHECK(sampled.samples == 50);
  const H0Result rho = h0_containment_test(gl3_reps().first);
  CHECK(rho.exact);
  CHECK_FALSE(rho.contained);
}

TEST_CASE("the two-dimensional representations of GL3(Z/3)") {
  const auto [plus, minus] = gl3_reps();
  for (const GroupRep* rep : {&plus, &minus}) {
    CHECK(rep->dim() == 2);
    CHECK(rep->generators.size() == 3);
    CHECK_NOTHROW(rep->verify());
  }
  // z0^2 + z0 z2 + z0 z3 - z1^2 + z2^2 + z3^2 for both
  for (const GroupRep* rep : {&plus, &minus}) {
    const MultiPoly q = char_poly(group_pencil(*rep));
    MultiPoly want(4);
    want.add_term(Monomial::from({2, 0, 0, 0}), 1);
    want.add_term(Monomial::from({1, 0, 1, 0}), 1);
    want.add_term(Monomial::from({1, 0, 0, 1}), 1);
    want.add_term(Monomial::from({0, 2, 0, 0}), -1);
    want.add_term(Monomial::from({0, 0, 2, 0}), 1);
    want.add_term(Monomial::from({0, 0, 0, 2}), 1);
    CHECK(q.term_count() == want.term_count());
    CHECK((q - want).max_abs_coefficient() <= 1e-12);
  }
}

TEST_CASE("free group region") {
  CHECK_FALSE(free_group_region(ProjPoint({1, -0.5L, -0.5L}), 2));
  const long double a = 2 * M_PIl / 3;
  CHECK(free_group_region(ProjPoint({1, std::polar(1.0L, a), std::polar(1.0L, -a)}), 2));
  CHECK(free_group_region(ProjPoint({1, 1, 1}), 2));
  CHECK_THROWS_AS(free_group_region(ProjPoint({1, 1}), 2), DimensionError);
}
