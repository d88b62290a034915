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

#ifndef PRESTIGE_DATA_HPP_
#define PRESTIGE_DATA_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "prestige/errors.hpp"
#include "prestige/random.hpp"
#include "prestige/types.hpp"

namespace prestige {

// Sparse text format, one example per line:
//
//   <label> <index>:<value> <index>:<value> ...
//
// Indices are 1-based and strictly increasing. Labels are -1/+1 (0 is read as
// -1) unless a LabelMap names the two raw values. Blank lines and lines whose
// first non-blank character is '#' are skipped. "\r\n" endings are accepted.

struct LabelMap {
  double positive = 1.0;
  double negative = -1.0;
};

struct ParseOptions {
  std::optional<std::size_t> dimension;  // may exceed the largest index seen
  std::optional<LabelMap> label_map;
};

namespace internal {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
           c == '\f';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return false;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

inline int map_label(double raw, const std::optional<LabelMap>& map,
                     std::size_t line, std::string_view token) {
  if (map) {
    if (raw == map->positive) return 1;
    if (raw == map->negative) return -1;
  } else {
    if (raw == 1.0) return 1;
    if (raw == -1.0 || raw == 0.0) return -1;
  }
  throw ParseError(line, "unknown label value '" + std::string(token) + "'");
}

}  // namespace internal

inline Dataset parse_sparse_text(std::istream& in,
                                 const ParseOptions& options = {}) {
  Dataset data;
  std::size_t max_index = 0;  // 1-based
  std::string raw_line;
  std::size_t line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    const std::string_view line = internal::trim(raw_line);
    if (line.empty() || line.front() == '#') continue;

    Example example;
    std::size_t pos = 0;
    bool first = true;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      const std::string_view token = line.substr(pos, end - pos);
      pos = end;

      if (first) {
        double raw = 0.0;
        if (!internal::parse_number(token, raw)) {
          throw ParseError(line_no, "non-numeric label '" + std::string(token) + "'");
        }
        example.label = internal::map_label(raw, options.label_map, line_no, token);
        first = false;
        continue;
      }

      const std::size_t colon = token.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, "expected index:value, got '" + std::string(token) + "'");
      }
      std::uint64_t index = 0;
      double value = 0.0;
      if (!internal::parse_number(token.substr(0, colon), index)) {
        throw ParseError(line_no, "bad feature index in '" + std::string(token) + "'");
      }
      if (!internal::parse_number(token.substr(colon + 1), value) ||
          !std::isfinite(value)) {
        throw ParseError(line_no, "bad feature value in '" + std::string(token) + "'");
      }
      if (index < 1 || index > UINT32_MAX) {
        throw ParseError(line_no, "feature index out of range in '" + std::string(token) + "'");
      }
      const auto zero_based = static_cast<std::uint32_t>(index - 1);
      if (!example.features.empty() &&
          zero_based <= example.features.back().index) {
        throw ParseError(line_no, "feature indices must be strictly increasing");
      }
      example.features.push_back(Feature{zero_based, value});
      max_index = std::max<std::size_t>(max_index, index);
    }
    data.examples.push_back(std::move(example));
  }
  if (in.bad()) throw IoError("read failure");

  if (options.dimension) {
    if (*options.dimension < max_index) {
      throw DimensionMismatch("declared dimension " +
                              std::to_string(*options.dimension) +
                              " is smaller than the largest index " +
                              std::to_string(max_index));
    }
    data.dimension = *options.dimension;
  } else {
    data.dimension = std::max<std::size_t>(max_index, 1);
  }
  return data;
}

inline Dataset load_sparse_text(const std::string& path,
                                const ParseOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_sparse_text(in, options);
}

// Shortest round-trip representation of each value.
inline void write_sparse_text(std::ostream& out, const Dataset& data) {
  char buffer[64];
  for (const Example& e : data.examples) {
    out << (e.label > 0 ? "+1" : "-1");
    for (const Feature& f : e.features) {
      const auto res = std::to_chars(buffer, buffer + sizeof(buffer), f.value);
      out << ' ' << (static_cast<std::uint64_t>(f.index) + 1) << ':'
          << std::string_view(buffer, res.ptr - buffer);
    }
    out << '\n';
  }
  if (!out) throw IoError("write failure");
}

struct SyntheticSpec {
  std::size_t n = 1000;
  std::size_t d = 2;
  double margin = 4.0;      // distance between the two class means
  double noise_rate = 0.0;  // fraction of labels flipped
  std::uint64_t seed = 0;

  void validate() const {
    if (n < 2) throw ConfigError("synthetic n must be >= 2");
    if (d < 1) throw ConfigError("synthetic d must be >= 1");
    if (!(margin > 0.0) || !std::isfinite(margin)) {
      throw ConfigError("synthetic margin must be > 0");
    }
    if (!(noise_rate >= 0.0 && noise_rate < 0.5)) {
      throw ConfigError("noise rate must lie in [0, 0.5)");
    }
  }
};

// Two unit-variance spherical Gaussians centred at +-(margin / 2) e_1.
// Labels alternate +1, -1, ... so the classes differ in size by at most one;
// then exactly round(noise_rate * n) labels, chosen uniformly, are flipped.
inline Dataset synth_two_gaussians(const SyntheticSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  Dataset data;
  data.dimension = spec.d;
  data.examples.resize(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    Example& e = data.examples[i];
    e.label = (i % 2 == 0) ? 1 : -1;
    e.features.resize(spec.d);
    for (std::size_t j = 0; j < spec.d; ++j) {
      e.features[j] = Feature{static_cast<std::uint32_t>(j), rng.gaussian()};
    }
    e.features[0].value += 0.5 * spec.margin * e.label;
  }
  const auto flips = static_cast<std::size_t>(
      std::llround(spec.noise_rate * static_cast<double>(spec.n)));
  std::vector<std::size_t> order = permutation(spec.n, rng);
  for (std::size_t k = 0; k < flips; ++k) {
    data.examples[order[k]].label *= -1;
  }
  return data;
}

// Subsamples the majority class without replacement down to the size of the
// minority class. Retained examples keep their relative order.
template <RandomSource R>
Dataset rebalance(const Dataset& data, R& rng) {
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < data.size(); ++i) {
    (data.examples[i].label > 0 ? pos : neg).push_back(i);
  }
  if (pos.empty() || neg.empty()) {
    throw InputError("rebalance needs both classes present");
  }
  std::vector<std::size_t>& majority = pos.size() > neg.size() ? pos : neg;
  const std::size_t keep = std::min(pos.size(), neg.size());
  shuffle(majority, rng);
  majority.resize(keep);

  std::vector<std::size_t> kept = pos;
  kept.insert(kept.end(), neg.begin(), neg.end());
  std::sort(kept.begin(), kept.end());
  Dataset out;
  out.dimension = data.dimension;
  out.examples.reserve(kept.size());
  for (std::size_t i : kept) out.examples.push_back(data.examples[i]);
  return out;
}

// Shuffled disjoint partition; the test part has round(n * fraction) examples.
template <RandomSource R>
std::pair<Dataset, Dataset> split(const Dataset& data, double test_fraction,
                                  R& rng) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ConfigError("test fraction must lie in (0, 1)");
  }
  const std::vector<std::size_t> order = permutation(data.size(), rng);
  const auto n_test = static_cast<std::size_t>(
      std::llround(test_fraction * static_cast<double>(data.size())));
  Dataset train, test;
  train.dimension = test.dimension = data.dimension;
  for (std::size_t k = 0; k < order.size(); ++k) {
    (k < n_test ? test : train).examples.push_back(data.examples[order[k]]);
  }
  return {std::move(train), std::move(test)};
}

}  // namespace prestige

#endif  // PRESTIGE_DATA_HPP_
