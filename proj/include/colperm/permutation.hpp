// Copyright 2026 the colperm authors
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

#ifndef COLPERM_PERMUTATION_HPP_
#define COLPERM_PERMUTATION_HPP_

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace colperm {

// Column ordering plus its inverse: order[k] is the column placed at stage k,
// pos[c] the stage of column c. Indices are 0-based everywhere in code;
// file formats and reports are 1-based.
struct Permutation {
  std::vector<int> order;
  std::vector<int> pos;

  static Permutation identity(int n) {
    Permutation p;
    p.order.resize(static_cast<std::size_t>(n));
    p.pos.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      p.order[static_cast<std::size_t>(k)] = k;
      p.pos[static_cast<std::size_t>(k)] = k;
    }
    return p;
  }

  // Builds the inverse map and validates that `order` is a bijection.
  static Permutation of_order(std::vector<int> order) {
    const int n = static_cast<int>(order.size());
    Permutation p;
    p.order = std::move(order);
    p.pos.assign(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < n; ++k) {
      const int c = p.order[static_cast<std::size_t>(k)];
      if (c < 0 || c >= n || p.pos[static_cast<std::size_t>(c)] != -1)
        throw std::invalid_argument("permutation order is not a bijection on 0..n-1");
      p.pos[static_cast<std::size_t>(c)] = k;
    }
    return p;
  }

  int size() const { return static_cast<int>(order.size()); }

  void swap_positions(int a, int b) {
    std::swap(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]);
    pos[static_cast<std::size_t>(order[static_cast<std::size_t>(a)])] = a;
    pos[static_cast<std::size_t>(order[static_cast<std::size_t>(b)])] = b;
  }

  void reverse_segment(int a, int b) {
    std::reverse(order.begin() + a, order.begin() + b + 1);
    for (int k = a; k <= b; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  }

  // Remove the column at `from` and reinsert it at `to` (array rotation).
  void move_column(int from, int to) {
    if (from == to) return;
    const int c = order[static_cast<std::size_t>(from)];
    if (from < to)
      std::move(order.begin() + from + 1, order.begin() + to + 1, order.begin() + from);
    else
      std::move_backward(order.begin() + to, order.begin() + from, order.begin() + from + 1);
    order[static_cast<std::size_t>(to)] = c;
    const int lo = std::min(from, to), hi = std::max(from, to);
    for (int k = lo; k <= hi; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  }

  bool valid() const {
    const int n = size();
    if (static_cast<int>(pos.size()) != n) return false;
    for (int k = 0; k < n; ++k) {
      const int c = order[static_cast<std::size_t>(k)];
      if (c < 0 || c >= n || pos[static_cast<std::size_t>(c)] != k) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

}  // namespace colperm

#endif  // COLPERM_PERMUTATION_HPP_
