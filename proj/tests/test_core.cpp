#include <cmath>

#include "doctest.h"
#include "projspec/errors.hpp"
#include "projspec/matrix_io.hpp"
#include "projspec/multipoly.hpp"
#include "projspec/numeric.hpp"
#include "projspec/proj_point.hpp"
#include "projspec/sampling.hpp"

using namespace projspec;

TEST_CASE("singular values of a diagonal matrix") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 2;
  m(1, 1) = Complex(0, -5);
  m(2, 2) = 0.5;
  const Eigen::VectorXd s = singular_values(m);
  CHECK(s(0) == doctest::Approx(5));
  CHECK(s(1) == doctest::Approx(2));
  CHECK(s(2) == doctest::Approx(0.5));
  CHECK(operator_norm(m) == doctest::Approx(5));
  CHECK_FALSE(is_singular(m));
  m(2, 2) = 1e-14;
  CHECK(is_singular(m));
  CHECK_THROWS_AS(is_singular(ComplexMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("numeric rank of a product of thin factors") {
  Rng rng(3);
  const ComplexMatrix a = random_matrix(5, rng).leftCols(2) * random_matrix(5, rng).topRows(2);
  CHECK(numeric_rank(a) == 2);
  CHECK(numeric_rank(random_matrix(4, rng)) == 4);
}

TEST_CASE("projective points") {
  CHECK_THROWS_AS(ProjPoint({0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(ProjPoint(std::vector<WideComplex>{}), InvalidInput);
  const ProjPoint p({2, WideComplex(0, 4), -1});
  CHECK(p.pivot() == 1);
  const ProjPoint c = p.canonical();
  CHECK(c[1] == WideComplex(1));
  CHECK(std::abs(c[0] - WideComplex(0, -0.5L)) < 1e-18L);

  SUBCASE("ties go to the lowest index") {
    CHECK(ProjPoint({-1, 1, 0}).pivot() == 0);
    CHECK(ProjPoint({1, 0, 1 + 1e-14L}).pivot() == 0);
  }
  SUBCASE("equality is invariant under rescaling") {
    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
      const ProjPoint z = random_plane_point(rng);
      const ProjPoint w = random_plane_point(rng);
      const WideComplex s(w[0].real() + 2, w[1].imag());
      CHECK(z.approx_equal(z.scaled(s)));
      CHECK(z.scaled(s).approx_equal(z));
      CHECK(z.canonical().approx_equal(z));
    }
  }
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("1.5") == WideComplex(1.5L, 0));
  CHECK(parse_complex("-i") == WideComplex(0, -1));
  CHECK(parse_complex("3i") == WideComplex(0, 3));
  CHECK(parse_complex("1+2i") == WideComplex(1, 2));
  CHECK(parse_complex(" 2e-3-1e2i ") == WideComplex(2e-3L, -1e2L));
  CHECK_THROWS_AS(parse_complex("abc"), InvalidInput);
  CHECK_THROWS_AS(parse_complex(""), InvalidInput);
  const ProjPoint p = parse_point("[1:1+i:0]");
  REQUIRE(p.size() == 3);
  CHECK(p[1] == WideComplex(1, 1));
  CHECK(parse_point("1,1,1").size() == 3);
  CHECK(format_complex(WideComplex(-0.0L, 0)) == "0");
  CHECK(format_complex(WideComplex(1, -2)) == "1-2i");
}

TEST_CASE("linear forms normalize to pivot 1") {
  const LinearForm w({2, 0, -4});
  CHECK(w.pivot() == 2);
  CHECK(w[0] == Complex(-0.5));
  CHECK(w.approx_equal(LinearForm({-1, 0, 2})));
  CHECK_THROWS_AS(LinearForm({0, 0}), InvalidInput);
}

TEST_CASE("polynomial arithmetic") {
  const auto z0 = MultiPoly::variable(3, 0), z1 = MultiPoly::variable(3, 1),
             z2 = MultiPoly::variable(3, 2);
  const MultiPoly q = (z0 + z1) * (z0 - z1);
  CHECK(q.term_count() == 2);
  CHECK(q.coefficient(Monomial::from({2, 0, 0})) == Complex(1));
  CHECK(q.coefficient(Monomial::from({0, 2, 0})) == Complex(-1));
  CHECK(q.total_degree() == 2);
  CHECK(q.is_homogeneous());
  CHECK_FALSE((q + MultiPoly::constant(3, 1)).is_homogeneous());

  const MultiPoly r = z0 * z0 * z2 + z1 * z2 * Complex(0, 3) - z2 * z2 * z1;
  const MultiPoly prod = r * (z0 + z1 * Complex(2, 1));
  CHECK(prod.exact_divide(z0 + z1 * Complex(2, 1)).approx_equal(r, 1e-12));
  CHECK_THROWS_AS(r.exact_divide(z0 + z1), NumericalError);

  SUBCASE("evaluation matches direct arithmetic") {
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
      const ComplexMatrix v = random_matrix(3, rng);
      const std::vector<Complex> z{v(0, 0), v(1, 0), v(2, 0)};
      const Complex direct = z[0] * z[0] * z[2] + Complex(0, 3) * z[1] * z[2] - z[2] * z[2] * z[1];
      CHECK(std::abs(r.evaluate(z) - direct) < 1e-12 * (1 + std::abs(direct)));
    }
  }
  SUBCASE("synthetic division leaves the substitution as remainder") {
    const std::vector<Complex> coeffs{0, Complex(1, -1), 0.5};
    const MultiPoly lin = z0 - z1 * coeffs[1] - z2 * coeffs[2];
    const MultiPoly quo = r.divide_linear(0, coeffs);
    const MultiPoly rem = r.substitute(0, coeffs);
    CHECK((quo * lin + rem).approx_equal(r, 1e-12));
    CHECK(rem.coefficient(Monomial::from({1, 0, 1})) == Complex(0));
  }
}

TEST_CASE("matrix files round-trip") {
  MatrixFile f;
  f.kind = MatrixFile::Kind::tuple;
  ComplexMatrix a(2, 2);
  a << Complex(1, 2), 3, Complex(0, -1), 0.25;
  f.matrices = {a, a.adjoint()};
  const MatrixFile g = parse_matrix_file(format_matrix_file(f));
  CHECK(g.kind == MatrixFile::Kind::tuple);
  CHECK(g.n() == 2);
  CHECK(g.d() == 2);
  CHECK((g.matrices[0] - a).norm() == 0);
  CHECK((g.matrices[1] - a.adjoint()).norm() == 0);

  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"tuple","n":1,"d":1,"matrices":[[[1,0]]],"x":1})"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"pencil","n":1,"d":1,"matrices":[[[1,0]]]})"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_matrix_file("not json"), InvalidInput);
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/file.json"), IoError);
}
