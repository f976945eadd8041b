#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace detovl {

// Occupation mask over spatial orbitals; bit i set <=> orbital i occupied.
// Orbital 0 is the lowest-index orbital and maps to the leftmost character
// of the text representation.
using OccMask = std::uint64_t;

inline constexpr int kMaxOrbitals = 64;

int popcount(OccMask m) noexcept;

// Occupied orbital indices in ascending order.
std::vector<int> occupied_list(OccMask m);

// Lexicographic order of the occupation string: compare orbital 0 first,
// '0' < '1'.
bool occ_lex_less(OccMask a, OccMask b) noexcept;

std::string occ_to_string(OccMask m, int n_orbitals);
OccMask occ_from_string(const std::string& s);  // throws on length/character errors

struct Determinant {
  OccMask alpha = 0;
  OccMask beta = 0;

  friend bool operator==(const Determinant&, const Determinant&) = default;
};

// Lexicographic (alpha_occ, beta_occ) string order; used for tie-breaking.
bool det_lex_less(const Determinant& a, const Determinant& b) noexcept;

// "aaa...;bbb..." with one character per orbital.
std::string to_string(const Determinant& d, int n_orbitals);

struct DeterminantHash {
  std::size_t operator()(const Determinant& d) const noexcept;
};

struct SdEntry {
  Determinant det;
  double amplitude = 0.0;
};

// Sparse CI vector over a fixed (L, N_alpha, N_beta) sector. Entries are
// kept sorted by descending |amplitude| with ties broken by lexicographic
// (alpha_occ, beta_occ); immutable after construction.
class Statevector {
 public:
  Statevector() = default;

  // Validates sector consistency and sorts canonically. Duplicate
  // determinants are an error unless sum_duplicates is set, in which case
  // they are merged (exact-zero merged amplitudes are dropped).
  static Statevector from_entries(int n_orbitals, int n_alpha, int n_beta,
                                  std::vector<SdEntry> entries,
                                  bool sum_duplicates = false);

  int n_orbitals() const noexcept { return n_orbitals_; }
  int n_alpha() const noexcept { return n_alpha_; }
  int n_beta() const noexcept { return n_beta_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<SdEntry>& entries() const noexcept { return entries_; }
  double norm_sq() const noexcept { return norm_sq_; }

  // Sum of c^2 over the first n entries (the truncated norm).
  double norm_sq_prefix(std::size_t n) const;

  bool contains(const Determinant& d) const;
  // Amplitude of d, 0.0 when absent.
  double amplitude(const Determinant& d) const;

  // Same entries scaled by 1/sqrt(norm_sq).
  Statevector normalized() const;

 private:
  int n_orbitals_ = 0;
  int n_alpha_ = 0;
  int n_beta_ = 0;
  std::vector<SdEntry> entries_;
  double norm_sq_ = 0.0;
  std::unordered_map<Determinant, double, DeterminantHash> index_;
};

// Canonical entry order: descending |amplitude|, ties by lexicographic
// (alpha_occ, beta_occ).
bool entry_order_less(const SdEntry& a, const SdEntry& b) noexcept;

}  // namespace detovl
