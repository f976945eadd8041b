#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "detovl/determinant.hpp"
#include "detovl/rotation.hpp"

namespace detovl {

// Small model Hamiltonian for the exact-diagonalization oracle. The
// interaction is either an on-site Hubbard U or a dense two-body tensor
// (pq|rs) in chemists' notation with 8-fold symmetry.
struct ModelHamiltonian {
  Eigen::MatrixXd h1;
  std::optional<double> hubbard_u;
  std::vector<double> two_body;  // L^4 dense (pq|rs); empty when hubbard_u is set
  double core_energy = 0.0;
  std::optional<int> nelec_hint;  // from FCIDUMP headers
  std::optional<int> ms2_hint;

  int n_orbitals() const { return static_cast<int>(h1.rows()); }
  bool has_dense_two_body() const { return !two_body.empty(); }
  double g(int p, int q, int r, int s) const {
    const int n = n_orbitals();
    return two_body[static_cast<std::size_t>(((p * n + q) * n + r) * n + s)];
  }
  // Checks h1 symmetry and two-body 8-fold symmetry within 1e-12.
  void validate() const;
};

ModelHamiltonian build_hubbard(int sites, double t, double u, bool pbc);

// h1' = m^T h1 m; the two-body tensor is transformed on all four indices
// (an on-site Hubbard interaction is promoted to a dense tensor first).
// Columns of m are the new orbitals over the old basis, so the spectrum is
// unchanged for orthogonal m.
ModelHamiltonian rotate_hamiltonian(const ModelHamiltonian& h, const RotationMatrix& m);

// (H + core) |psi>, merged and canonically sorted. Not normalized.
Statevector apply_hamiltonian(const ModelHamiltonian& h, const Statevector& psi);

// <psi|H|psi> / <psi|psi>, core energy included.
double energy_expectation(const ModelHamiltonian& h, const Statevector& psi);

// S^2 |psi> via S^2 = S^- S^+ + S_z (S_z + 1).
Statevector apply_s2(const Statevector& psi);

double statevector_dot(const Statevector& a, const Statevector& b);

struct FciOptions {
  // Dense diagonalization below this dimension, Lanczos above.
  std::size_t dense_dim_cap = 4000;
  std::size_t dim_cap = 1000000;
  int lanczos_block = 60;
  int lanczos_max_cycles = 60;
  double lanczos_tol = 1e-10;
  // Eigenvector components below this magnitude are dropped from the
  // returned statevector (numerical zeros).
  double amplitude_floor = 1e-14;
};

struct FciResult {
  double energy = 0.0;  // includes core_energy
  Statevector statevector;
  double energy_gap = 0.0;  // E1 - E0 (Ritz estimate on the Lanczos path)
  double residual_norm = 0.0;
};

FciResult fci_ground_state(const ModelHamiltonian& h, int n_alpha, int n_beta,
                           const FciOptions& options = {});

struct TruncatedReference {
  Statevector state;  // top ceil(fraction * N) amplitudes, not renormalized
  double discarded_mass = 0.0;
};
TruncatedReference truncated_reference(const FciResult& result, double keep_fraction);

ModelHamiltonian read_fcidump(const std::string& path);
void write_fcidump(const ModelHamiltonian& h, const std::string& path);

// All C(L, ne) occupation masks in ascending numeric order.
std::vector<OccMask> sector_masks(int n_orbitals, int n_electrons);

}  // namespace detovl
