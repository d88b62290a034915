//
// Copyright 2026 The Prestige Authors
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

#ifndef PRESTIGE_RANDOM_HPP_
#define PRESTIGE_RANDOM_HPP_

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace prestige {

// Every randomized routine in the library draws through this interface, so a
// test can substitute a scripted source and predict each decision.
template <typename R>
concept RandomSource = requires(R& r, std::size_t n) {
  { r.uniform() } -> std::convertible_to<double>;   // [0, 1)
  { r.gaussian() } -> std::convertible_to<double>;  // N(0, 1)
  { r.index(n) } -> std::convertible_to<std::size_t>;  // [0, n)
};

// Seeded deterministic stream. Built only on std::mt19937_64, whose output
// sequence is fixed by the standard, so draws are reproducible across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Marsaglia polar method; the second variate of each pair is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
  }

  // Unbiased integer in [0, n) by rejection. n must be positive.
  std::size_t index(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return static_cast<std::size_t>(r % bound);
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

static_assert(RandomSource<Rng>);

template <RandomSource R>
bool bernoulli(R& rng, double p) {
  return rng.uniform() < p;
}

// Fisher-Yates, drawing index(i + 1) for i = n-1 down to 1.
template <typename T, RandomSource R>
void shuffle(std::vector<T>& items, R& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.index(i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

template <RandomSource R>
std::vector<std::size_t> permutation(std::size_t n, R& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  shuffle(order, rng);
  return order;
}

}  // namespace prestige

#endif  // PRESTIGE_RANDOM_HPP_
