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

#ifndef COLPERM_INSTANCE_HPP_
#define COLPERM_INSTANCE_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "colperm/bitwords.hpp"

namespace colperm {

// A preprocessed problem instance. Construction classifies the raw 0/1
// matrix rows once:
//   - rows with no nonzero entry are dropped from every solver structure,
//   - rows with exactly one nonzero are kept out of the sweep/bitset
//     machinery and accounted as per-column additive constants
//     (singleton_count), since their 1-block has length 1,
//   - the remaining "active" rows (>= 2 nonzeros) get compact ids
//     0..active_rows-1 and populate col_rows / row_cols.
// Objective values are unchanged by this split: a singleton row adds exactly
// 1 to the stage its column occupies.
//
// The original matrix is retained bit-packed (`dense`) so the complete-matrix
// evaluator can scan it and so rendering reproduces the parsed file exactly.
// Instances are immutable after construction and safe to share across
// threads.
struct Instance {
  int rows = 0;         // row count m of the original matrix
  int cols = 0;         // column count n
  int active_rows = 0;  // rows with >= 2 nonzeros
  std::int64_t nnz = 0; // total nonzeros, singletons included

  std::vector<std::vector<int>> col_rows;  // per column: sorted active row ids
  std::vector<std::vector<int>> row_cols;  // per active row id: sorted columns
  std::vector<int> active_origin;          // active row id -> original row
  std::vector<std::pair<int, int>> singleton_rows;  // (original row, column)
  std::vector<int> singleton_count;                 // per column

  std::size_t row_words = 0;
  std::vector<std::uint64_t> dense;  // rows * row_words, row-major packed

  bool entry(int row, int col) const {
    return test_bit(dense.data() + static_cast<std::size_t>(row) * row_words, col);
  }

  std::int64_t active_nnz() const { return nnz - static_cast<std::int64_t>(singleton_rows.size()); }

  double density() const {
    return rows == 0 || cols == 0
               ? 0.0
               : static_cast<double>(nnz) / (static_cast<double>(rows) * static_cast<double>(cols));
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.rows == b.rows && a.cols == b.cols && a.dense == b.dense;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Classify a raw 0/1 matrix into an Instance. Throws std::invalid_argument
// on ragged rows or values outside {0, 1}.
Instance preprocess(const std::vector<std::vector<int>>& raw);

// Canonical file format: '#' comment lines and blank lines are ignored, a
// header "m n", then m lines with n whitespace-separated 0/1 tokens.
// Throws ParseError naming the offending line.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
Instance parse_instance_file(const std::string& path);

// Writes the canonical format; parse_instance(render_instance(x)) == x.
std::string render_instance(const Instance& inst);

// Each entry is 1 with probability `density`, drawn row-major from
// Rng(seed).uniform01(). Identical arguments produce bit-identical instances.
Instance generate_instance(int m, int n, double density, std::uint64_t seed);

}  // namespace colperm

#endif  // COLPERM_INSTANCE_HPP_
