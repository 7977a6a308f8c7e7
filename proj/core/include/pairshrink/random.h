// Copyright 2026 The Pairshrink Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded randomness. All sampling goes through these helpers instead of the
// <random> distributions, whose output is implementation-defined; this keeps
// seeded results identical across standard libraries.

#ifndef PAIRSHRINK_RANDOM_H_
#define PAIRSHRINK_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace pairshrink {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
inline std::uint64_t MixSeed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of the `stream`-th independent substream of `master`. Substreams are
// a pure function of (master, stream), so work split across them can run in
// any order.
inline std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream) {
  return MixSeed(MixSeed(master) ^ MixSeed(stream + 0x632be59bd9b4e019ULL));
}

inline Rng MakeRng(std::uint64_t master, std::uint64_t stream) {
  return Rng(DeriveSeed(master, stream));
}

// Uniform on [0, 1) with 53 random bits.
inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on {0, ..., n-1}; n must be positive.
inline std::size_t UniformIndex(Rng& rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

inline bool Bernoulli(Rng& rng, double p) { return Uniform01(rng) < p; }

// Fisher-Yates shuffle driven by UniformIndex.
template <typename Container>
void Shuffle(Container& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = UniformIndex(rng, i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace pairshrink

#endif  // PAIRSHRINK_RANDOM_H_
