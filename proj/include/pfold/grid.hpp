#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pfold/letters.hpp"

namespace pfold {

// Rectangular, hole-free array of letters over one alphabet.
// Public indexing is 1-based (row, col) with row 1 at the top; storage is
// row-major 0-based with one byte per cell.
class Grid {
 public:
  Grid(Alphabet alphabet, int rows, int cols, std::uint8_t fill = 0);

  static Grid from_rows(Alphabet alphabet, const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Alphabet alphabet() const { return alphabet_; }

  std::uint8_t at(int r, int c) const {
    check_index(r, c);
    return cells_[idx(r, c)];
  }
  void set(int r, int c, std::uint8_t v) {
    check_index(r, c);
    check_value(v);
    cells_[idx(r, c)] = v;
  }
  char char_at(int r, int c) const { return letter_to_char(alphabet_, at(r, c)); }

  // X[r, c, m x n]: the m x n subgrid whose upper left corner is at (r, c).
  Grid subgrid(int r, int c, int m, int n) const;

  const std::uint8_t* row_ptr(int r) const { return cells_.data() + std::size_t(r - 1) * cols_; }
  std::uint8_t* row_ptr(int r) { return cells_.data() + std::size_t(r - 1) * cols_; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  std::string row_string(int r) const;
  std::string data_string() const;  // row-major, one character per cell

  bool operator==(const Grid&) const = default;

 private:
  std::size_t idx(int r, int c) const { return std::size_t(r - 1) * cols_ + (c - 1); }
  void check_index(int r, int c) const;
  void check_value(std::uint8_t v) const;

  Alphabet alphabet_;
  int rows_;
  int cols_;
  std::vector<std::uint8_t> cells_;
};

// JSON form: {"alphabet":"A16"|"B4","rows":m,"cols":n,"data":"<letters>"}.
// Round trips are bit-exact (fixed key order, no whitespace).
std::string grid_to_json(const Grid& g);
Grid grid_from_json(std::string_view json_text);

// Canonical pattern key: alphabet tag byte, rows byte, cols byte, then the
// row-major cell bytes. Injective for rows, cols <= 255.
std::string pattern_key(const Grid& g);
Grid grid_from_pattern_key(std::string_view key);

}  // namespace pfold
