#include "projspec/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "projspec/errors.hpp"

namespace projspec {

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return Eigen::VectorXd();
  if (is_real(m)) {
    const Eigen::MatrixXd re = m.real();
    return Eigen::BDCSVD<Eigen::MatrixXd>(re).singularValues();
  }
  return Eigen::BDCSVD<ComplexMatrix>(m).singularValues();
}

std::size_t numeric_rank(const ComplexMatrix& m, double tol) {
  const Eigen::VectorXd sv = singular_values(m);
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = tol * sv(0);
  return static_cast<std::size_t>(std::count_if(
      sv.data(), sv.data() + sv.size(), [cut](double s) { return s >= cut; }));
}

bool is_singular(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("is_singular: matrix is " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + ", not square");
  }
  if (m.size() == 0) throw DimensionError("is_singular: empty matrix");
  const Eigen::VectorXd sv = singular_values(m);
  return sv(sv.size() - 1) <= tol * std::max(1.0, sv(0));
}

double operator_norm(const ComplexMatrix& m) {
  const Eigen::VectorXd sv = singular_values(m);
  return sv.size() == 0 ? 0.0 : sv(0);
}

bool is_real(const ComplexMatrix& m) {
  return (m.imag().array() == 0.0).all();
}

bool all_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

}  // namespace projspec
