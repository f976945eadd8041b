#pragma once

#include <Eigen/Dense>

namespace detovl {

// Real antisymmetric generator of an orbital rotation. The free parameters
// are the L(L-1)/2 strictly lower triangular entries; the upper triangle is
// fixed by kappa(i,j) = -kappa(j,i).
class KappaGenerator {
 public:
  KappaGenerator() = default;
  explicit KappaGenerator(int n_orbitals);  // zero generator
  explicit KappaGenerator(Eigen::MatrixXd kappa);  // validates antisymmetry (1e-12)

  // Packs x over (i, j) with i > j, row-major: (1,0), (2,0), (2,1), (3,0), ...
  static KappaGenerator from_free_params(int n_orbitals, const Eigen::VectorXd& x);
  static int n_free_params(int n_orbitals) { return n_orbitals * (n_orbitals - 1) / 2; }

  int n_orbitals() const { return static_cast<int>(kappa_.rows()); }
  const Eigen::MatrixXd& matrix() const { return kappa_; }
  Eigen::VectorXd free_params() const;

 private:
  Eigen::MatrixXd kappa_;
};

// M = exp(-kappa); orthogonal because kappa is antisymmetric.
struct RotationMatrix {
  Eigen::MatrixXd m;
  int n_orbitals() const { return static_cast<int>(m.rows()); }
};

RotationMatrix matrix_exponential(const KappaGenerator& kappa);

RotationMatrix identity_rotation(int n_orbitals);

// ||M^T M - I||_inf (max-abs entry).
double orthogonality_defect(const Eigen::MatrixXd& m);

// Frechet derivative of the matrix exponential at a in direction e, i.e.
// d/dt exp(a + t e) at t = 0, read off as the upper-right block of
// exp([[a, e], [0, a]]).
Eigen::MatrixXd expm_frechet(const Eigen::MatrixXd& a, const Eigen::MatrixXd& e);

// Generator with exp(-kappa) = m (principal branch); requires m special
// orthogonal. Used to seed optimizations at a known basis.
KappaGenerator kappa_from_rotation(const Eigen::MatrixXd& m);

}  // namespace detovl
