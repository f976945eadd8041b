#include "detovl/determinant.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "detovl/parallel.hpp"

namespace detovl {

int popcount(OccMask m) noexcept { return std::popcount(m); }

std::vector<int> occupied_list(OccMask m) {
  std::vector<int> occ;
  occ.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    const int i = std::countr_zero(m);
    occ.push_back(i);
    m &= m - 1;
  }
  return occ;
}

bool occ_lex_less(OccMask a, OccMask b) noexcept {
  if (a == b) return false;
  // First differing orbital decides; '0' sorts before '1'.
  const int i = std::countr_zero(a ^ b);
  return ((a >> i) & 1u) == 0;
}

std::string occ_to_string(OccMask m, int n_orbitals) {
  std::string s(static_cast<std::size_t>(n_orbitals), '0');
  for (int i = 0; i < n_orbitals; ++i)
    if ((m >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

OccMask occ_from_string(const std::string& s) {
  if (s.size() > static_cast<std::size_t>(kMaxOrbitals))
    throw std::invalid_argument("occupation string longer than " +
                                std::to_string(kMaxOrbitals) + " orbitals");
  OccMask m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      m |= OccMask{1} << i;
    else if (s[i] != '0')
      throw std::invalid_argument("occupation string must be over {0,1}, got '" +
                                  std::string(1, s[i]) + "'");
  }
  return m;
}

bool det_lex_less(const Determinant& a, const Determinant& b) noexcept {
  if (a.alpha != b.alpha) return occ_lex_less(a.alpha, b.alpha);
  return occ_lex_less(a.beta, b.beta);
}

std::string to_string(const Determinant& d, int n_orbitals) {
  return occ_to_string(d.alpha, n_orbitals) + ";" + occ_to_string(d.beta, n_orbitals);
}

std::size_t DeterminantHash::operator()(const Determinant& d) const noexcept {
  auto mix = [](std::uint64_t v) {
    v ^= v >> 30;
    v *= 0xbf58476d1ce4e5b9ULL;
    v ^= v >> 27;
    v *= 0x94d049bb133111ebULL;
    v ^= v >> 31;
    return v;
  };
  const std::uint64_t ha = mix(d.alpha);
  const std::uint64_t hb = mix(d.beta + 0x9e3779b97f4a7c15ULL);
  return static_cast<std::size_t>(ha ^ (hb + 0x9e3779b97f4a7c15ULL + (ha << 6) + (ha >> 2)));
}

bool entry_order_less(const SdEntry& a, const SdEntry& b) noexcept {
  const double aa = std::abs(a.amplitude);
  const double ab = std::abs(b.amplitude);
  if (aa != ab) return aa > ab;
  return det_lex_less(a.det, b.det);
}

Statevector Statevector::from_entries(int n_orbitals, int n_alpha, int n_beta,
                                      std::vector<SdEntry> entries,
                                      bool sum_duplicates) {
  if (n_orbitals < 1 || n_orbitals > kMaxOrbitals)
    throw std::invalid_argument("n_orbitals out of range [1, 64]");
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_orbitals || n_beta > n_orbitals)
    throw std::invalid_argument("electron counts out of range");

  Statevector sv;
  sv.n_orbitals_ = n_orbitals;
  sv.n_alpha_ = n_alpha;
  sv.n_beta_ = n_beta;

  const OccMask valid = (n_orbitals == kMaxOrbitals)
                            ? ~OccMask{0}
                            : ((OccMask{1} << n_orbitals) - 1);
  if (sum_duplicates) {
    std::unordered_map<Determinant, double, DeterminantHash> merged;
    merged.reserve(entries.size());
    for (const auto& e : entries) merged[e.det] += e.amplitude;
    entries.clear();
    for (const auto& [det, amp] : merged)
      if (amp != 0.0) entries.push_back({det, amp});
  }

  for (const auto& e : entries) {
    if ((e.det.alpha & ~valid) != 0 || (e.det.beta & ~valid) != 0)
      throw std::invalid_argument("determinant occupies orbitals beyond L");
    if (popcount(e.det.alpha) != n_alpha || popcount(e.det.beta) != n_beta)
      throw std::invalid_argument("determinant particle numbers do not match sector (" +
                                  to_string(e.det, n_orbitals) + ")");
    if (!std::isfinite(e.amplitude))
      throw std::invalid_argument("non-finite amplitude");
  }

  std::sort(entries.begin(), entries.end(), entry_order_less);
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].det == entries[i - 1].det)
      throw std::invalid_argument("duplicate determinant " +
                                  to_string(entries[i].det, n_orbitals));

  KahanSum norm;
  for (const auto& e : entries) norm.add(e.amplitude * e.amplitude);
  sv.norm_sq_ = norm.value();

  sv.index_.reserve(entries.size());
  for (const auto& e : entries) sv.index_.emplace(e.det, e.amplitude);
  sv.entries_ = std::move(entries);
  return sv;
}

double Statevector::norm_sq_prefix(std::size_t n) const {
  if (n > entries_.size()) throw std::out_of_range("prefix length exceeds statevector size");
  KahanSum s;
  for (std::size_t i = 0; i < n; ++i) s.add(entries_[i].amplitude * entries_[i].amplitude);
  return s.value();
}

bool Statevector::contains(const Determinant& d) const { return index_.count(d) != 0; }

double Statevector::amplitude(const Determinant& d) const {
  const auto it = index_.find(d);
  return it == index_.end() ? 0.0 : it->second;
}

Statevector Statevector::normalized() const {
  if (entries_.empty() || norm_sq_ <= 0.0)
    throw std::invalid_argument("cannot normalize an empty or zero statevector");
  const double inv = 1.0 / std::sqrt(norm_sq_);
  std::vector<SdEntry> scaled = entries_;
  for (auto& e : scaled) e.amplitude *= inv;
  return from_entries(n_orbitals_, n_alpha_, n_beta_, std::move(scaled));
}

}  // namespace detovl
