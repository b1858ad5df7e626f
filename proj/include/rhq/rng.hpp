// Copyright 2026 The rhq Authors
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

#pragma once

#include <cstdint>

// Counter-based seed derivation. Every random quantity in the library is a
// pure function of (seed, counters), so trial t can be replayed without
// generating trials 0..t-1.
namespace rhq::rng {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t a,
                               std::uint64_t b = 0) noexcept {
  return mix64(mix64(seed ^ mix64(a)) ^ mix64(b ^ 0x632be59bd9b4e019ULL));
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double unit_interval(std::uint64_t x) noexcept {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Stream tags, so that different consumers of one user seed never collide.
inline constexpr std::uint64_t kTagState = 0x5354415445ULL;      // "STATE"
inline constexpr std::uint64_t kTagParams = 0x504152414dULL;     // "PARAM"
inline constexpr std::uint64_t kTagShots = 0x53484f5453ULL;      // "SHOTS"
inline constexpr std::uint64_t kTagBatch = 0x4241544348ULL;      // "BATCH"
inline constexpr std::uint64_t kTagPosition = 0x504f534954ULL;   // "POSIT"

}  // namespace rhq::rng
