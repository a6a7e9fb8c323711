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

#ifndef COLPERM_BITWORDS_HPP_
#define COLPERM_BITWORDS_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>

// Word-level helpers for the row bitsets. Sets are plain arrays of 64-bit
// words; all kernels operate on whole words.

namespace colperm {

inline constexpr int kWordBits = 64;

inline std::size_t words_for_bits(int bits) {
  return (static_cast<std::size_t>(bits) + kWordBits - 1) / kWordBits;
}

inline void set_bit(std::uint64_t* words, int i) {
  words[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

inline void clear_bit(std::uint64_t* words, int i) {
  words[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

inline bool test_bit(const std::uint64_t* words, int i) {
  return (words[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
}

inline int popcount_words(const std::uint64_t* words, std::size_t n) {
  int c = 0;
  for (std::size_t k = 0; k < n; ++k) c += std::popcount(words[k]);
  return c;
}

}  // namespace colperm

#endif  // COLPERM_BITWORDS_HPP_
