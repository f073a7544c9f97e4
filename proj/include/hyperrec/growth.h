// Copyright 2026 The hyperrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The hyperrecursive-tree growth process. A tree of hyperedge size theta
// starts with theta originators sharing one hyperedge; each step adds a
// vertex together with a uniformly chosen (theta-1)-subset of the existing
// vertices, and the new vertex and the subset form a new hyperedge.
//
// Vertices are addressed by index. Originators occupy 0..theta-1 and the
// vertex labeled j >= 1 sits at index theta+j-1. Label 0 means the
// originator at index 0.

#ifndef HYPERREC_GROWTH_H_
#define HYPERREC_GROWTH_H_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hyperrec/rational.h"

namespace hyperrec {

class DrawSource;

class TreeState {
 public:
  int theta() const { return theta_; }
  std::uint64_t age() const { return age_; }
  std::uint64_t vertex_count() const { return containment_.size(); }
  std::span<const std::uint64_t> containment() const { return containment_; }
  bool record_edges() const { return record_edges_; }
  const std::vector<std::vector<std::uint64_t>>& edges() const {
    return edges_;
  }

  // Number of vertices at containment level `level` (0 for level 0).
  std::uint64_t level_count(std::uint64_t level) const {
    return level < histogram_.size() ? histogram_[level] : 0;
  }

  static std::uint64_t index_of_label(int theta, std::uint64_t label) {
    return label == 0 ? 0 : static_cast<std::uint64_t>(theta) + label - 1;
  }

 private:
  friend TreeState init_tree(int theta, bool record_edges);
  friend void grow(TreeState& state, DrawSource& draws);

  void bump(std::uint64_t index);

  int theta_ = 0;
  std::uint64_t age_ = 0;
  std::vector<std::uint64_t> containment_;
  std::vector<std::uint64_t> histogram_;
  bool record_edges_ = false;
  std::vector<std::vector<std::uint64_t>> edges_;
  std::vector<std::uint64_t> sample_;
};

// Throws ParameterError when theta < 2.
TreeState init_tree(int theta, bool record_edges = false);

// Source of recruitment subsets: a seeded mt19937_64 stream, or a fixed list
// of subsets consumed one per step.
class DrawSource {
 public:
  static DrawSource seeded(std::uint64_t seed);
  static DrawSource injected(std::vector<std::vector<std::uint64_t>> subsets);

  // Writes `count` distinct indices below `tau` into `out`. Injected
  // subsets are validated here and raise InjectionError when malformed or
  // exhausted.
  void draw(std::uint64_t tau, unsigned count, std::vector<std::uint64_t>& out);

  std::mt19937_64& engine() { return engine_; }

 private:
  DrawSource() = default;

  void draw_rejection(std::uint64_t tau, unsigned count,
                      std::vector<std::uint64_t>& out);
  void draw_partial_shuffle(std::uint64_t tau, unsigned count,
                            std::vector<std::uint64_t>& out);

  bool injected_ = false;
  std::mt19937_64 engine_;
  std::vector<std::vector<std::uint64_t>> subsets_;
  std::size_t next_ = 0;
  std::vector<std::uint64_t> scratch_;
};

// Rejection sampling is used up to this many draws per step; larger subsets
// use a partial Fisher-Yates shuffle.
inline constexpr unsigned kRejectionMaxDraws = 8;

// One growth step.
void grow(TreeState& state, DrawSource& draws);

// Containment level of the vertex labeled k. Throws RangeError for k > age.
std::uint64_t containment_of(const TreeState& state, std::uint64_t k);

struct LevelCounts {
  // counts[i - 1] = X_{n,i} for 1 <= i <= max_level.
  std::vector<std::uint64_t> counts;
  // Vertices above max_level.
  std::uint64_t overflow = 0;

  std::uint64_t level(std::uint64_t i) const { return counts.at(i - 1); }
};

// Throws ParameterError when max_level < 1.
LevelCounts global_profile(const TreeState& state, std::uint64_t max_level);

// (theta-1) / (n-1+theta): chance that a fixed earlier vertex is recruited at
// step n. Throws DomainError for n < 1.
Rational indicator_prob(int theta, std::uint64_t n);

}  // namespace hyperrec

#endif  // HYPERREC_GROWTH_H_
