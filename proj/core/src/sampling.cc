#include "genspect/sampling.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "genspect/error.h"

namespace genspect {

std::uint64_t Sampler::Below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "Below(0) has no valid result");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // 2^64 mod bound; accepting x <= kMax - rem keeps a multiple of bound values.
  const std::uint64_t rem = (kMax % bound + 1) % bound;
  if (rem == 0) return engine_() % bound;
  const std::uint64_t threshold = kMax - rem;
  while (true) {
    const std::uint64_t x = engine_();
    if (x <= threshold) return x % bound;
  }
}

std::vector<std::size_t> Sampler::Choose(std::size_t n, std::size_t k) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k >= n) return idx;
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(Below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace genspect
