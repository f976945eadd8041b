#pragma once

#include <cstddef>
#include <future>
#include <vector>

namespace detovl {

// Compensated (Kahan) accumulator.
class KahanSum {
 public:
  void add(double x) noexcept {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const noexcept { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Deterministic chunked reduction: [0, n) is split into `workers` contiguous
// chunks, each reduced independently, and the partial results combined in
// chunk order. For a given worker count the result is bit-identical across
// runs; workers = 1 is the reference path.
//
// ChunkFn: T(std::size_t begin, std::size_t end)
// CombineFn: void(T& acc, const T& partial)
template <typename T, typename ChunkFn, typename CombineFn>
T reduce_chunked(std::size_t n, int workers, ChunkFn chunk_fn, CombineFn combine,
                 T init = T{}) {
  if (workers < 1) workers = 1;
  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(workers),
                                              n == 0 ? 1 : n);
  if (w <= 1) {
    T acc = init;
    combine(acc, chunk_fn(0, n));
    return acc;
  }
  const std::size_t base = n / w;
  const std::size_t rem = n % w;
  std::vector<std::future<T>> parts;
  parts.reserve(w);
  std::size_t begin = 0;
  for (std::size_t k = 0; k < w; ++k) {
    const std::size_t len = base + (k < rem ? 1 : 0);
    const std::size_t end = begin + len;
    parts.push_back(std::async(std::launch::async, chunk_fn, begin, end));
    begin = end;
  }
  T acc = init;
  for (auto& p : parts) combine(acc, p.get());
  return acc;
}

}  // namespace detovl
