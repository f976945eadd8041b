#pragma once

#include <cstddef>
#include <optional>

#include <Eigen/Dense>

#include "detovl/determinant.hpp"
#include "detovl/rotation.hpp"

namespace detovl {

// Rows selected by the occupied orbitals of j_prime (ascending), columns by
// those of i; one block per spin channel, same m for both.
Eigen::MatrixXd rotation_submatrix(const Eigen::MatrixXd& m, OccMask row_occ,
                                   OccMask col_occ);

// det(M^alpha_{J'I}) * det(M^beta_{J'I}). Throws on particle-number mismatch.
double det_overlap(const Determinant& j_prime, const Determinant& i,
                   const RotationMatrix& m);

struct OverlapReport {
  double eta = 0.0;      // <J'|Psi~> over the first n_sd entries
  double p0 = 0.0;       // eta^2
  std::size_t n_sd_used = 0;
  double norm_sq_used = 0.0;
  double eps_r2 = 0.0;
  std::optional<double> eps_r1;
};

// Truncated determinant sum: eta = sum_{I < n_sd} c_I det_overlap(J', I, m),
// accumulated in descending-|c_I| order with compensated summation. The split
// into `workers` chunks is deterministic for a fixed worker count.
OverlapReport overlap(const Determinant& j_prime, const Statevector& psi,
                      const RotationMatrix& m, std::size_t n_sd, int workers = 1);

// sqrt(2 (1 - <Psi~|Psi>)); input in [-1, 1] within 1e-10.
double bound_eps_r1(double overlap_exact_approx);

// sqrt(1 - min(norm_sq_truncated, 1)); input in [0, 1 + 1e-10].
double bound_eps_r2(double norm_sq_truncated);

// sqrt(a + b - 2 c), radicand clamped to 0 when >= -1e-12, error below that.
double bound_eps_r_tight(double norm_sq_a, double norm_sq_b, double cross);

// Derivative d det(A) / dA alongside det(A); LU with partial pivoting, with
// an SVD fallback when A is near singular. A 0x0 block has det 1 and an
// empty gradient.
struct DetWithGradient {
  double value = 1.0;
  Eigen::MatrixXd grad;
};
DetWithGradient det_with_gradient(const Eigen::MatrixXd& a);

}  // namespace detovl
