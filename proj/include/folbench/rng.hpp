#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace folbench {

/// SplitMix64 finalizer; a stateless 64-bit mixer.
std::uint64_t mix64(std::uint64_t x) noexcept;

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis = 0xcbf29ce484222325ULL) noexcept;

/// Seed for one (instance, task) stream, so adding instances never moves the
/// randomness of the others.
std::uint64_t derive_stream_seed(std::uint64_t global_seed, std::string_view instance_id,
                                 std::string_view task) noexcept;

/// Seeded generator whose outputs are identical on every platform:
/// std::mt19937_64 is fully specified, the distributions on top of it are
/// not, so bounded draws and shuffles are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  /// Fisher-Yates.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// k distinct indices drawn uniformly from [0, n), in draw order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace folbench
