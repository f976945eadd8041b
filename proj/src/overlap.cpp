#include "detovl/overlap.hpp"

#include <cmath>
#include <stdexcept>

#include "detovl/parallel.hpp"

namespace detovl {

Eigen::MatrixXd rotation_submatrix(const Eigen::MatrixXd& m, OccMask row_occ,
                                   OccMask col_occ) {
  const auto rows = occupied_list(row_occ);
  const auto cols = occupied_list(col_occ);
  Eigen::MatrixXd sub(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      sub(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          m(rows[r], cols[c]);
  return sub;
}

namespace {

double submatrix_det(const Eigen::MatrixXd& m, OccMask row_occ, OccMask col_occ) {
  const int n = popcount(row_occ);
  if (n == 0) return 1.0;
  if (n == 1) {
    const int r = occupied_list(row_occ)[0];
    const int c = occupied_list(col_occ)[0];
    return m(r, c);
  }
  const Eigen::MatrixXd sub = rotation_submatrix(m, row_occ, col_occ);
  return Eigen::PartialPivLU<Eigen::MatrixXd>(sub).determinant();
}

}  // namespace

double det_overlap(const Determinant& j_prime, const Determinant& i,
                   const RotationMatrix& m) {
  if (popcount(j_prime.alpha) != popcount(i.alpha) ||
      popcount(j_prime.beta) != popcount(i.beta))
    throw std::invalid_argument("det_overlap: incompatible sectors");
  const double da = submatrix_det(m.m, j_prime.alpha, i.alpha);
  const double db = submatrix_det(m.m, j_prime.beta, i.beta);
  return da * db;
}

OverlapReport overlap(const Determinant& j_prime, const Statevector& psi,
                      const RotationMatrix& m, std::size_t n_sd, int workers) {
  if (psi.empty()) throw std::invalid_argument("overlap: empty statevector");
  if (n_sd < 1 || n_sd > psi.size())
    throw std::invalid_argument("overlap: n_sd must be in [1, statevector size]");
  if (m.n_orbitals() != psi.n_orbitals())
    throw std::invalid_argument("overlap: rotation dimension does not match statevector");
  if (popcount(j_prime.alpha) != psi.n_alpha() || popcount(j_prime.beta) != psi.n_beta())
    throw std::invalid_argument("overlap: incompatible sectors");

  const auto& entries = psi.entries();
  struct Partial {
    KahanSum eta;
    KahanSum norm;
  };
  auto chunk = [&](std::size_t begin, std::size_t end) {
    Partial p;
    for (std::size_t k = begin; k < end; ++k) {
      const auto& e = entries[k];
      p.eta.add(e.amplitude * det_overlap(j_prime, e.det, m));
      p.norm.add(e.amplitude * e.amplitude);
    }
    return p;
  };
  struct Acc {
    KahanSum eta;
    KahanSum norm;
  };
  const Acc acc = reduce_chunked<Acc>(
      n_sd, workers, chunk,
      [](Acc& a, const Partial& p) {
        a.eta.add(p.eta.value());
        a.norm.add(p.norm.value());
      });

  OverlapReport rep;
  rep.eta = acc.eta.value();
  rep.p0 = rep.eta * rep.eta;
  rep.n_sd_used = n_sd;
  rep.norm_sq_used = acc.norm.value();
  rep.eps_r2 = bound_eps_r2(rep.norm_sq_used);
  return rep;
}

double bound_eps_r1(double overlap_exact_approx) {
  constexpr double tol = 1e-10;
  if (overlap_exact_approx < -1.0 - tol || overlap_exact_approx > 1.0 + tol)
    throw std::invalid_argument("bound_eps_r1: overlap outside [-1, 1]");
  const double x = std::min(1.0, std::max(-1.0, overlap_exact_approx));
  return std::sqrt(2.0 * (1.0 - x));
}

double bound_eps_r2(double norm_sq_truncated) {
  constexpr double tol = 1e-10;
  if (norm_sq_truncated < 0.0)
    throw std::invalid_argument("bound_eps_r2: negative truncated norm");
  if (norm_sq_truncated > 1.0 + tol)
    throw std::invalid_argument("bound_eps_r2: truncated norm exceeds 1");
  return std::sqrt(1.0 - std::min(norm_sq_truncated, 1.0));
}

double bound_eps_r_tight(double norm_sq_a, double norm_sq_b, double cross) {
  const double radicand = norm_sq_a + norm_sq_b - 2.0 * cross;
  if (radicand < -1e-12)
    throw std::invalid_argument("bound_eps_r_tight: inconsistent inputs");
  return std::sqrt(std::max(0.0, radicand));
}

DetWithGradient det_with_gradient(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  DetWithGradient out;
  if (n == 0) return out;  // det of the empty block is 1
  if (n == 1) {
    out.value = a(0, 0);
    out.grad = Eigen::MatrixXd::Ones(1, 1);
    return out;
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  out.value = lu.determinant();
  const double scale = a.cwiseAbs().maxCoeff();
  if (lu.rcond() > 1e-10 && scale > 0.0) {
    // Jacobi's formula: d det / dA = det(A) A^{-T}.
    out.grad = out.value * lu.inverse().transpose();
    return out;
  }
  // Near-singular block: adjugate from the SVD, valid also at rank deficiency.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd sigma = svd.singularValues();
  const double uv_sign =
      (svd.matrixU().determinant() * svd.matrixV().determinant()) > 0 ? 1.0 : -1.0;
  double det = uv_sign;
  for (Eigen::Index k = 0; k < n; ++k) det *= sigma(k);
  out.value = det;
  out.grad = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double prod = uv_sign;
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != k) prod *= sigma(i);
    out.grad.noalias() += prod * svd.matrixU().col(k) * svd.matrixV().col(k).transpose();
  }
  return out;
}

}  // namespace detovl
