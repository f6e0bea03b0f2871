//
// Copyright 2026 The ICE Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef ICE_RANDOM_HPP_
#define ICE_RANDOM_HPP_

#include <cstdint>
#include <string_view>

namespace ice {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// FNV-1a, 64 bit.
constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Counter-based generator: output i is mix64(key + i * gamma). The same key
// always yields the same stream, independent of any other stream, and the
// output is identical across platforms and standard libraries.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t operator()() {
    return mix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL);
  }

  // Uniform integer in [0, bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x >= limit) return x % bound;
    }
  }

  // Uniform real in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Derives a stream key from a seed and a sequence of coordinates.
template <typename... Parts>
constexpr std::uint64_t stream_key(std::uint64_t seed, Parts... parts) {
  std::uint64_t k = mix64(seed);
  ((k = mix64(k ^ static_cast<std::uint64_t>(parts))), ...);
  return k;
}

}  // namespace ice

#endif  // ICE_RANDOM_HPP_
