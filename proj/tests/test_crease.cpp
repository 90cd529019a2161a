#include <doctest.h>

#include <random>

#include "pfold/crease.hpp"
#include "pfold/render.hpp"

using namespace pfold;

namespace {

CreaseField from_strings(const std::vector<std::string>& v_rows,
                         const std::vector<std::string>& h_rows) {
  const int rows = static_cast<int>(v_rows.size());
  const int cols = static_cast<int>(h_rows.front().size());
  CreaseField f(rows, cols);
  auto fold_of = [](char ch) -> std::optional<Fold> {
    if (ch == 'M') return Fold::mountain;
    if (ch == 'V') return Fold::valley;
    return std::nullopt;
  };
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols + 1; ++c) f.set_v(r, c, fold_of(v_rows[r - 1][c - 1]));
  for (int r = 0; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) f.set_h(r, c, fold_of(h_rows[r][c - 1]));
  return f;
}

CreaseField random_field(std::mt19937& rng, int rows, int cols) {
  CreaseField f(rows, cols);
  auto pick = [&]() -> std::optional<Fold> {
    switch (rng() % 3) {
      case 0: return std::nullopt;
      case 1: return Fold::mountain;
      default: return Fold::valley;
    }
  };
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols + 1; ++c) f.set_v(r, c, pick());
  for (int r = 0; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) f.set_h(r, c, pick());
  return f;
}

}  // namespace

TEST_CASE("decoration rule per letter") {
  const CreaseField f0 = decorate(Grid::from_rows(Alphabet::B4, {"0"}));
  CHECK(f0.v_edge(1, 1) == Fold::mountain);
  CHECK(f0.h_edge(1, 1) == Fold::mountain);
  const CreaseField f1 = decorate(Grid::from_rows(Alphabet::B4, {"1"}));
  CHECK(f1.v_edge(1, 1) == Fold::mountain);
  CHECK(f1.h_edge(1, 1) == Fold::valley);
  const CreaseField f2 = decorate(Grid::from_rows(Alphabet::B4, {"2"}));
  CHECK(f2.v_edge(1, 1) == Fold::valley);
  CHECK(f2.h_edge(1, 1) == Fold::mountain);
  const CreaseField f3 = decorate(Grid::from_rows(Alphabet::B4, {"3"}));
  CHECK(f3.v_edge(1, 1) == Fold::valley);
  CHECK(f3.h_edge(1, 1) == Fold::valley);
  // no creases on the top/right outer boundary
  CHECK(f0.v_edge(1, 2) == std::nullopt);
  CHECK(f0.h_edge(0, 1) == std::nullopt);

  CHECK_THROWS_AS(decorate(Grid::from_rows(Alphabet::A16, {"N"})), std::invalid_argument);
}

TEST_CASE("decorated level-1 structure golden") {
  const CreaseField dec = decorate(s_supertile(1));
  const CreaseField want = from_strings({"VV.", "VV."}, {"..", "MV", "VV"});
  CHECK(dec == want);
  CHECK(dec.crease_count() == 8);
}

TEST_CASE("decoration assigns exactly two folds per cell") {
  for (int n = 1; n <= 4; ++n)
    CHECK(decorate(s_supertile(n)).crease_count() == 2u * (1u << (2 * n)));
}

TEST_CASE("fold structure base cases") {
  const CreaseField s0 = fold_structure(0);
  CHECK(s0.crease_count() == 0);

  // one mountain on the negative-x half-axis, valleys on the other three
  const CreaseField s1 = fold_structure(1);
  CHECK(s1 == from_strings({".V.", ".V."}, {"..", "MV", ".."}));

  CHECK_THROWS_AS(fold_structure(-1), std::invalid_argument);
  CHECK_THROWS_AS(fold_structure(9, 8), budget_error);
}

TEST_CASE("fold structure level 2 golden") {
  const CreaseField want = from_strings({".MVV.", ".MVV.", ".VVM.", ".VVM."},
                                        {"....", "MVMV", "MMVV", "VMVM", "...."});
  CHECK(fold_structure(2) == want);
}

TEST_CASE("reflections are fold-swapping involutions") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    const CreaseField f = random_field(rng, 1 + int(rng() % 5), 1 + int(rng() % 5));
    CHECK(reflect_x(reflect_x(f)) == f);
    CHECK(reflect_y(reflect_y(f)) == f);
    CHECK(reflect_x(reflect_y(f)) == reflect_y(reflect_x(f)));
    CHECK(rotate180(rotate180(f)) == f);
  }
  const CreaseField empty(3, 3);
  CHECK(reflect_x(empty) == empty);
  CHECK(reflect_y(empty) == empty);
}

TEST_CASE("reflecting the first fold pattern about the vertical axis") {
  // mirror moves the mountain to the positive-x half, the fold swap turns it
  // into a valley; the two y-halves become mountains
  const CreaseField got = reflect_y(fold_structure(1));
  CHECK(got == from_strings({".M.", ".M."}, {"..", "MV", ".."}));
}

TEST_CASE("quadrant equivalence on small levels") {
  for (int n = 1; n <= 4; ++n) {
    const QuadrantReport rep = quadrant_equivalence(n);
    INFO("level ", n, ": ", rep.first_mismatch);
    CHECK(rep.equal);
  }
}

TEST_CASE("off-axis part of the fold structure is rot-180 invariant") {
  for (int n = 1; n <= 6; ++n) {
    CreaseField f = fold_structure(n);
    const int half = f.rows() / 2;
    for (int r = 1; r <= f.rows(); ++r) f.set_v(r, half + 1, std::nullopt);
    for (int c = 1; c <= f.cols(); ++c) f.set_h(half, c, std::nullopt);
    CHECK(rotate180(f) == f);
  }
  // the full structure is not: the center axes break the symmetry
  CHECK_FALSE(rotate180(fold_structure(2)) == fold_structure(2));
}

TEST_CASE("crease JSON round trip") {
  const CreaseField dec = decorate(s_supertile(2));
  const std::string j = crease_to_json(dec);
  CHECK(crease_from_json(j) == dec);
  CHECK(crease_to_json(crease_from_json(j)) == j);

  const std::string j1 = crease_to_json(fold_structure(1));
  CHECK(j1 == R"({"rows":2,"cols":2,"v":".V..V.","h":"..MV.."})");

  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const CreaseField f = random_field(rng, 1 + int(rng() % 4), 1 + int(rng() % 4));
    CHECK(crease_from_json(crease_to_json(f)) == f);
  }
  CHECK_THROWS(crease_from_json(R"({"rows":1,"cols":1,"v":"x","h":".."})"));
}

TEST_CASE("ascii rendering") {
  CHECK(render_ascii(decorate(s_supertile(1))) == "+-+-+\no o |\n+*+o+\no o |\n+o+o+\n");
  CHECK(render_ascii(fold_structure(1)) == "+-+-+\n| o |\n+*+o+\n| o |\n+-+-+\n");
  CHECK(render_ascii(CreaseField(1, 1)) == "+-+\n| |\n+-+\n");
}

TEST_CASE("svg rendering is deterministic with one marker per crease") {
  const CreaseField dec = decorate(s_supertile(1));
  const std::string svg = render_svg(dec);
  CHECK(svg == render_svg(decorate(s_supertile(1))));
  std::size_t markers = 0;
  for (std::size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1))
    ++markers;
  CHECK(markers == 8);
  CHECK(svg.find("r=\"0.15\"") != std::string::npos);
  CHECK(render_svg(CreaseField(2, 2)).find("<circle") == std::string::npos);
}
