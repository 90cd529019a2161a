#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfold/grid.hpp"
#include "pfold/substitution.hpp"

namespace pfold {

enum class Fold : std::uint8_t { mountain = 1, valley = 2 };

constexpr Fold flip(Fold f) { return f == Fold::mountain ? Fold::valley : Fold::mountain; }

// Mountain/valley assignment on the unit edges of a rows x cols cell grid.
// Each cell owns its left and bottom edge. Vertical edges are addressed as the
// left edge of cell (r, c) with c in 1..cols+1 (c = cols+1 is the right
// boundary); horizontal edges as the bottom edge of cell (r, c) with r in
// 0..rows (r = 0 is the top boundary). Absent creases are explicit.
class CreaseField {
 public:
  CreaseField(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::optional<Fold> v_edge(int r, int c) const;
  std::optional<Fold> h_edge(int r, int c) const;
  void set_v(int r, int c, std::optional<Fold> f);
  void set_h(int r, int c, std::optional<Fold> f);

  std::size_t crease_count() const;

  bool operator==(const CreaseField&) const = default;

 private:
  std::size_t v_idx(int r, int c) const;
  std::size_t h_idx(int r, int c) const;

  int rows_;
  int cols_;
  std::vector<std::uint8_t> v_;  // rows x (cols+1), 0 = none
  std::vector<std::uint8_t> h_;  // (rows+1) x cols
};

// Crease decoration of a grid over the 4-letter alphabet: each cell gets a
// fold on its left and bottom edge (0 -> mountain/mountain, 1 ->
// mountain/valley, 2 -> valley/mountain, 3 -> valley/valley). The top and
// right outer boundary stays crease-free.
CreaseField decorate(const Grid& s);

// The crease pattern after `level` two-step folds of a square sheet, built by
// the reflection recursion: four quadrant copies of the previous pattern plus
// the two center axes (mountain on the left half of the horizontal axis,
// valley elsewhere). level 0 is the unfolded sheet.
CreaseField fold_structure(int level, int depth_cap = kDefaultDepthCap);

// Mirror about the horizontal (resp. vertical) axis; swaps mountain and
// valley. Involutions, and they commute.
CreaseField reflect_x(const CreaseField& f);
CreaseField reflect_y(const CreaseField& f);

CreaseField rotate180(const CreaseField& f);  // reflect_x then reflect_y; flips cancel

// The upper-right quarter of a 2N x 2N field as a standalone N x N field; the
// center axes become its left and bottom boundary edges.
CreaseField upper_right_quadrant(const CreaseField& f);

struct QuadrantReport {
  int level;
  bool equal;
  std::string first_mismatch;
};

// Compares the decorated substitution structure at `level` with the
// upper-right quadrant of the fold structure one level up, edge by edge.
QuadrantReport quadrant_equivalence(int level, int depth_cap = kDefaultDepthCap,
                                    const SubstitutionSystem& rules = paperfolding_rules());

// JSON form: {"rows":m,"cols":n,"v":"...","h":"..."} with one character per
// edge ('M', 'V', or '.'), row-major in the index ranges above.
std::string crease_to_json(const CreaseField& f);
CreaseField crease_from_json(std::string_view json_text);

}  // namespace pfold
