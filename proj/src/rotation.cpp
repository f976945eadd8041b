#include "detovl/rotation.hpp"

#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace detovl {

namespace {
constexpr double kAntisymTol = 1e-12;
}

KappaGenerator::KappaGenerator(int n_orbitals) {
  if (n_orbitals < 1) throw std::invalid_argument("KappaGenerator: n_orbitals must be >= 1");
  kappa_ = Eigen::MatrixXd::Zero(n_orbitals, n_orbitals);
}

KappaGenerator::KappaGenerator(Eigen::MatrixXd kappa) {
  if (kappa.rows() != kappa.cols() || kappa.rows() < 1)
    throw std::invalid_argument("KappaGenerator: matrix must be square");
  const double defect = (kappa + kappa.transpose()).cwiseAbs().maxCoeff();
  if (defect > kAntisymTol)
    throw std::invalid_argument("KappaGenerator: matrix is not antisymmetric (defect " +
                                std::to_string(defect) + ")");
  // Exact antisymmetry from the lower triangle.
  kappa_ = Eigen::MatrixXd::Zero(kappa.rows(), kappa.cols());
  for (Eigen::Index i = 1; i < kappa.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j) {
      kappa_(i, j) = kappa(i, j);
      kappa_(j, i) = -kappa(i, j);
    }
}

KappaGenerator KappaGenerator::from_free_params(int n_orbitals, const Eigen::VectorXd& x) {
  if (x.size() != n_free_params(n_orbitals))
    throw std::invalid_argument("from_free_params: expected " +
                                std::to_string(n_free_params(n_orbitals)) + " parameters");
  KappaGenerator k(n_orbitals);
  int idx = 0;
  for (int i = 1; i < n_orbitals; ++i)
    for (int j = 0; j < i; ++j) {
      k.kappa_(i, j) = x(idx);
      k.kappa_(j, i) = -x(idx);
      ++idx;
    }
  return k;
}

Eigen::VectorXd KappaGenerator::free_params() const {
  const int n = n_orbitals();
  Eigen::VectorXd x(n_free_params(n));
  int idx = 0;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) x(idx++) = kappa_(i, j);
  return x;
}

RotationMatrix matrix_exponential(const KappaGenerator& kappa) {
  return RotationMatrix{(-kappa.matrix()).exp()};
}

RotationMatrix identity_rotation(int n_orbitals) {
  return RotationMatrix{Eigen::MatrixXd::Identity(n_orbitals, n_orbitals)};
}

double orthogonality_defect(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd d =
      m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff();
}

Eigen::MatrixXd expm_frechet(const Eigen::MatrixXd& a, const Eigen::MatrixXd& e) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || e.rows() != n || e.cols() != n)
    throw std::invalid_argument("expm_frechet: dimension mismatch");
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  block.topLeftCorner(n, n) = a;
  block.topRightCorner(n, n) = e;
  block.bottomRightCorner(n, n) = a;
  const Eigen::MatrixXd be = block.exp();
  return be.topRightCorner(n, n);
}

KappaGenerator kappa_from_rotation(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("kappa_from_rotation: matrix not square");
  if (orthogonality_defect(m) > 1e-8)
    throw std::invalid_argument("kappa_from_rotation: matrix not orthogonal");
  if (m.determinant() < 0.0)
    throw std::invalid_argument("kappa_from_rotation: determinant is -1, no real generator");
  Eigen::MatrixXd log_m = m.log();
  // The principal log of a special orthogonal matrix is antisymmetric up to
  // rounding; clean it up, then confirm the generator reproduces m.
  Eigen::MatrixXd gen = 0.5 * (log_m - log_m.transpose());
  const double skew_defect = (log_m - gen).cwiseAbs().maxCoeff();
  if (skew_defect > 1e-8)
    throw std::invalid_argument("kappa_from_rotation: log is not antisymmetric");
  KappaGenerator kappa(Eigen::MatrixXd(-gen));
  const double rebuild = (matrix_exponential(kappa).m - m).cwiseAbs().maxCoeff();
  if (rebuild > 1e-8)
    throw std::invalid_argument("kappa_from_rotation: exp(-kappa) does not reproduce input");
  return kappa;
}

}  // namespace detovl
