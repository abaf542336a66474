#ifndef GENSPECT_SAMPLING_H_
#define GENSPECT_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace genspect {

// Seeded sampler over std::mt19937_64. Bounded draws are rejection-sampled
// from the raw 64-bit output, so a seed gives the same draws everywhere.
class Sampler {
 public:
  static constexpr std::string_view kAlgorithm =
      "mt19937_64+rejection+partial-fisher-yates";

  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound). Throws Error(kInvalidArgument) for bound 0.
  std::uint64_t Below(std::uint64_t bound);

  // k distinct indices drawn uniformly from [0, n), returned ascending.
  // k >= n returns every index without consuming randomness.
  std::vector<std::size_t> Choose(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace genspect

#endif  // GENSPECT_SAMPLING_H_
