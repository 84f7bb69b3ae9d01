#ifndef WEYL_RNG_HPP
#define WEYL_RNG_HPP

#include <cstdint>

namespace weyl {

/// Stateless counter-based generator: every draw is a pure function of
/// (seed, counter), so parallel partitions of the index range reproduce
/// the serial stream exactly.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter) const {
    std::uint64_t z = seed_ + counter * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    // one extra round so nearby seeds decorrelate
    z = (z + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi] (inclusive).
  long long uniform_int(std::uint64_t counter, long long lo, long long hi) const {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(bits(counter) % span);
  }

  /// Derived independent stream.
  CounterRng split(std::uint64_t stream) const {
    return CounterRng(bits(0xd1b54a32d192ed03ULL ^ stream));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

}  // namespace weyl

#endif  // WEYL_RNG_HPP
