/*
 * Copyright 2026 The lowcost-explore Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EXPLORE_COMMON_RANDOM_H_
#define EXPLORE_COMMON_RANDOM_H_

#include <cstdint>
#include <random>

namespace explore {

// Seeded generator whose draws are identical on every standard library.
// std::*_distribution output is implementation-defined, so uniform and
// Gaussian draws are derived here directly from the mt19937_64 stream, which
// the standard pins down bit for bit.
class DeterministicRng {
 public:
  explicit DeterministicRng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }

  // Standard normal via Box-Muller; the second variate is cached.
  double Gaussian();

  double Gaussian(double mean, double sigma) {
    return mean + sigma * Gaussian();
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// 64-bit FNV-1a, used for stable configuration fingerprints.
uint64_t Fnv1a64(const void* data, size_t size);

}  // namespace explore

#endif  // EXPLORE_COMMON_RANDOM_H_
