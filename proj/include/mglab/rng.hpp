#ifndef MGLAB_RNG_HPP
#define MGLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace mglab {

/// splitmix64 step, used for seed mixing and derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Derive a child seed from a parent seed plus a key tuple. Used to give
/// every (n, trial) cell of an experiment its own independent stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  s ^= a + 0x9e3779b97f4a7c15ull;
  h ^= splitmix64(s);
  s ^= b + 0xd1b54a32d192ed03ull;
  h ^= splitmix64(s);
  return h;
}

/// Deterministic random source. mt19937_64's raw output sequence is pinned
/// by the standard; all value mappings below avoid std distributions, whose
/// results are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    // Rejection sampling over the top multiple of n.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  bool next_bool() { return (engine_() >> 63) != 0; }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Sampler for a fixed probability vector, via inverse-CDF lookup.
class CategoricalSampler {
 public:
  explicit CategoricalSampler(const std::vector<double>& mass);

  std::size_t sample(Rng& rng) const;

 private:
  std::vector<double> cdf_;
};

}  // namespace mglab

#endif  // MGLAB_RNG_HPP
