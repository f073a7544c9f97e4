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

#include "hyperrec/growth.h"

#include <algorithm>
#include <string>
#include <utility>

#include "hyperrec/errors.h"

namespace hyperrec {

void TreeState::bump(std::uint64_t index) {
  const std::uint64_t level = containment_[index]++;
  --histogram_[level];
  if (histogram_.size() <= level + 1) histogram_.resize(level + 2, 0);
  ++histogram_[level + 1];
}

TreeState init_tree(int theta, bool record_edges) {
  if (theta < 2) {
    throw ParameterError("theta must be at least 2, got " +
                         std::to_string(theta));
  }
  TreeState state;
  state.theta_ = theta;
  state.age_ = 0;
  state.containment_.assign(static_cast<std::size_t>(theta), 1);
  state.histogram_ = {0, static_cast<std::uint64_t>(theta)};
  state.record_edges_ = record_edges;
  if (record_edges) {
    std::vector<std::uint64_t> edge(static_cast<std::size_t>(theta));
    for (int v = 0; v < theta; ++v) edge[v] = static_cast<std::uint64_t>(v);
    state.edges_.push_back(std::move(edge));
  }
  return state;
}

DrawSource DrawSource::seeded(std::uint64_t seed) {
  DrawSource source;
  source.engine_.seed(seed);
  return source;
}

DrawSource DrawSource::injected(
    std::vector<std::vector<std::uint64_t>> subsets) {
  DrawSource source;
  source.injected_ = true;
  source.subsets_ = std::move(subsets);
  return source;
}

void DrawSource::draw(std::uint64_t tau, unsigned count,
                      std::vector<std::uint64_t>& out) {
  out.clear();
  if (injected_) {
    if (next_ >= subsets_.size()) {
      throw InjectionError("injected draws exhausted after " +
                           std::to_string(next_) + " steps");
    }
    const auto& subset = subsets_[next_];
    if (subset.size() != count) {
      throw InjectionError("injected subset " + std::to_string(next_) +
                           " has " + std::to_string(subset.size()) +
                           " members, expected " + std::to_string(count));
    }
    for (std::uint64_t v : subset) {
      if (v >= tau) {
        throw InjectionError("injected index " + std::to_string(v) +
                             " not below vertex count " + std::to_string(tau));
      }
      if (std::find(out.begin(), out.end(), v) != out.end()) {
        throw InjectionError("injected subset repeats index " +
                             std::to_string(v));
      }
      out.push_back(v);
    }
    ++next_;
    return;
  }
  if (count > tau) {
    throw InjectionError("cannot draw " + std::to_string(count) +
                         " distinct indices from " + std::to_string(tau));
  }
  if (count <= kRejectionMaxDraws) {
    draw_rejection(tau, count, out);
  } else {
    draw_partial_shuffle(tau, count, out);
  }
}

void DrawSource::draw_rejection(std::uint64_t tau, unsigned count,
                                std::vector<std::uint64_t>& out) {
  std::uniform_int_distribution<std::uint64_t> pick(0, tau - 1);
  while (out.size() < count) {
    const std::uint64_t v = pick(engine_);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
}

void DrawSource::draw_partial_shuffle(std::uint64_t tau, unsigned count,
                                      std::vector<std::uint64_t>& out) {
  // scratch_ holds a permutation of 0..size-1; new indices are appended as
  // the tree grows, and swaps from earlier steps are left in place.
  while (scratch_.size() < tau) scratch_.push_back(scratch_.size());
  for (unsigned i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::uint64_t> pick(i, tau - 1);
    std::swap(scratch_[i], scratch_[pick(engine_)]);
    out.push_back(scratch_[i]);
  }
}

void grow(TreeState& state, DrawSource& draws) {
  const std::uint64_t tau = state.vertex_count();
  const unsigned count = static_cast<unsigned>(state.theta_ - 1);
  draws.draw(tau, count, state.sample_);
  for (std::uint64_t v : state.sample_) state.bump(v);
  state.containment_.push_back(1);
  ++state.histogram_[1];
  ++state.age_;
  if (state.record_edges_) {
    std::vector<std::uint64_t> edge = state.sample_;
    std::sort(edge.begin(), edge.end());
    edge.push_back(tau);
    state.edges_.push_back(std::move(edge));
  }
}

std::uint64_t containment_of(const TreeState& state, std::uint64_t k) {
  if (k > state.age()) {
    throw RangeError("label " + std::to_string(k) + " exceeds age " +
                     std::to_string(state.age()));
  }
  return state.containment()[TreeState::index_of_label(state.theta(), k)];
}

LevelCounts global_profile(const TreeState& state, std::uint64_t max_level) {
  if (max_level < 1) throw ParameterError("max_level must be at least 1");
  LevelCounts out;
  out.counts.resize(max_level, 0);
  std::uint64_t total = 0;
  for (std::uint64_t i = 1; i <= max_level; ++i) {
    out.counts[i - 1] = state.level_count(i);
    total += out.counts[i - 1];
  }
  out.overflow = state.vertex_count() - total;
  return out;
}

Rational indicator_prob(int theta, std::uint64_t n) {
  if (theta < 2) throw ParameterError("theta must be at least 2");
  if (n < 1) throw DomainError("indicator probability needs n >= 1");
  return make_rational(BigInt(theta - 1),
                       BigInt(static_cast<unsigned long>(n - 1 + theta)));
}

}  // namespace hyperrec
