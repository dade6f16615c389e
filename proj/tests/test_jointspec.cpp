#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "projspec/errors.hpp"
#include "projspec/jointspec.hpp"
#include "projspec/sampling.hpp"

using namespace projspec;

namespace {

struct KnownTuple {
  MatrixTuple tuple;
  std::vector<std::vector<Complex>> joint;  // rows of the diagonals
};

// U D_i U^* with the diagonals kept, so the joint spectrum is known exactly.
KnownTuple known_normal_tuple(std::size_t n, std::size_t d, Rng& rng) {
  const ComplexMatrix u = random_unitary(d, rng);
  std::uniform_real_distribution<double> unif(-1, 1);
  std::vector<std::vector<Complex>> joint(d, std::vector<Complex>(n));
  for (auto& row : joint) {
    for (auto& c : row) c = Complex(unif(rng), unif(rng));
  }
  std::vector<ComplexMatrix> mats;
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::VectorXcd diag(static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < d; ++k) diag(static_cast<Eigen::Index>(k)) = joint[k][i];
    mats.push_back(u * diag.asDiagonal() * u.adjoint());
  }
  return {MatrixTuple(mats), joint};
}

long double binomial(std::size_t n, std::size_t k) {
  long double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("wedge basis") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t p = 0; p <= n; ++p) {
      const auto b = wedge_basis(n, p);
      CHECK(b.size() == static_cast<std::size_t>(binomial(n, p)));
      CHECK(std::is_sorted(b.begin(), b.end()));
      for (const auto& s : b) CHECK(std::is_sorted(s.begin(), s.end()));
    }
  }
  CHECK(wedge_basis(3, 2) == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("Koszul boundaries square to zero for commuting tuples") {
  Rng rng(31);
  for (std::size_t n = 1; n <= 4; ++n) {
    const MatrixTuple t(random_commuting(n, 3, rng));
    REQUIRE(t.commutes());
    const KoszulComplex k = koszul_build(t);
    REQUIRE(k.boundaries.size() == n);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      const ComplexMatrix dd = k.boundaries[p + 1] * k.boundaries[p];
      CHECK(dd.cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  ComplexMatrix sx(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sz << 1, 0, 0, -1;
  const MatrixTuple pauli({sx, sz});
  CHECK(pauli.commutativity() == Commutativity::verified_false);
  const std::vector<Complex> l{0, 0};
  CHECK_THROWS_AS(taylor_membership(pauli, l), DomainError);
}

TEST_CASE("joint spectra of normal tuples equal the joint eigenvalues") {
  Rng rng(37);
  for (std::size_t n = 1; n <= 3; ++n) {
    const KnownTuple k = known_normal_tuple(n, 4, rng);
    REQUIRE(k.tuple.commutes());
    for (const auto& l : k.joint) {
      CHECK(taylor_membership(k.tuple, l));
      CHECK(harte_membership(k.tuple, l));
      CHECK(approx_point_membership(k.tuple, l));
      CHECK_THROWS_AS(cho_takaguchi_inverse(k.tuple, l), DomainError);
    }
    std::vector<Complex> far(n, Complex(3, 3));
    CHECK_FALSE(taylor_membership(k.tuple, far));
    CHECK_FALSE(harte_membership(k.tuple, far));
    CHECK_FALSE(approx_point_membership(k.tuple, far));

    auto eig = joint_eigenvalues(k.tuple);
    REQUIRE(eig.size() == 4);
    for (const auto& row : k.joint) {
      const bool found = std::any_of(eig.begin(), eig.end(), [&](const std::vector<Complex>& e) {
        for (std::size_t i = 0; i < n; ++i) {
          if (std::abs(e[i] - row[i]) > 1e-10) return false;
        }
        return true;
      });
      CHECK(found);
    }
  }
}

TEST_CASE("inclusions on non-normal commuting tuples") {
  Rng rng(41);
  std::uniform_real_distribution<double> unif(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const MatrixTuple t(random_commuting(n, 3, rng));
    REQUIRE(t.commutes());
    auto grid = joint_eigenvalues(t);
    for (int g = 0; g < 5; ++g) {
      std::vector<Complex> l(n);
      for (auto& c : l) c = Complex(unif(rng), unif(rng));
      grid.push_back(l);
    }
    for (const auto& l : grid) {
      const bool pi = approx_point_membership(t, l), h = harte_membership(t, l),
                 tay = taylor_membership(t, l);
      CHECK((!pi || h));
      CHECK((!h || tay));
    }
  }
}

TEST_CASE("Cho-Takaguchi inverse and the splitting homotopy") {
  Rng rng(43);
  const KnownTuple k = known_normal_tuple(2, 3, rng);
  const std::vector<Complex> l{Complex(2, 0), Complex(0, 2)};
  const MatrixTuple b = cho_takaguchi_inverse(k.tuple, l);
  const MatrixTuple s = k.tuple.shifted(l);
  ComplexMatrix sum = ComplexMatrix::Zero(3, 3);
  for (std::size_t i = 0; i < 2; ++i) sum += s[i] * b[i];
  CHECK((sum - ComplexMatrix::Identity(3, 3)).norm() < 1e-12);
  const HomotopyMaps h = splitting_homotopy(s, b);
  CHECK(h.maps.size() == 2);
  CHECK(h.residual <= 1e-8);
  CHECK_THROWS_AS(splitting_homotopy(s, k.tuple), DomainError);
}

TEST_CASE("hyperplane-union verdicts") {
  Rng rng(47);
  for (int k = 0; k < 6; ++k) {
    const auto [a, b] = random_normal_pair(3, k % 2 ? 1e-2 : 0.0, rng);
    const MatrixTuple t({a, b}, false);
    const HyperplaneVerdict v = hyperplane_union_verdict(t);
    const double scale = std::max(operator_norm(a), operator_norm(b));
    const bool commuting = (a * b - b * a).norm() <= 1e-9 * scale * scale;
    CHECK(v.factors == commuting);
    CHECK(v.commuting == commuting);
    CHECK(v.degree == 3);
    if (v.factors) {
      int total = 0;
      for (const auto& f : v.factor_list) total += f.second;
      CHECK(total == 3);
    }
  }
  ComplexMatrix sx(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sz << 1, 0, 0, -1;
  CHECK_FALSE(hyperplane_union_verdict(MatrixTuple({sx, sz})).factors);
  ComplexMatrix jordan(2, 2);
  jordan << 1, 1, 0, 1;
  CHECK_THROWS_AS(hyperplane_union_verdict(MatrixTuple({jordan})), DomainError);
}
