// Dense matrix aliases and small validation helpers shared by all modules.
#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace gpe {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrixd = Matrix<double>;
using Vectord = Vector<double>;
using Index = Eigen::Index;

namespace detail {

inline void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument(what);
}

}  // namespace detail

template <class Derived>
typename Derived::Scalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return typename Derived::Scalar(0);
  return m.cwiseAbs().maxCoeff();
}

template <class Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m,
                  typename Derived::Scalar rel_tol = typename Derived::Scalar(1e-9)) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) return false;
  const Matrix<Scalar> d = m.derived();
  return max_abs(d - d.transpose()) <= rel_tol * (Scalar(1) + max_abs(d));
}

template <class Derived>
void check_finite(const Eigen::MatrixBase<Derived>& m, const std::string& who) {
  detail::require(m.allFinite(), who + ": non-finite entries");
}

}  // namespace gpe
