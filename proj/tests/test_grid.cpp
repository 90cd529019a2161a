#include <doctest.h>

#include <random>

#include "pfold/grid.hpp"

using namespace pfold;

TEST_CASE("grid construction and 1-based indexing") {
  Grid g = Grid::from_rows(Alphabet::A16, {"IN", "PL"});
  CHECK(g.rows() == 2);
  CHECK(g.cols() == 2);
  CHECK(g.char_at(1, 1) == 'I');
  CHECK(g.char_at(1, 2) == 'N');
  CHECK(g.char_at(2, 1) == 'P');
  CHECK(g.char_at(2, 2) == 'L');
  CHECK(g.row_string(2) == "PL");
  CHECK(g.data_string() == "INPL");

  CHECK_THROWS_AS((void)g.at(0, 1), std::out_of_range);
  CHECK_THROWS_AS((void)g.at(1, 3), std::out_of_range);
  CHECK_THROWS_AS(Grid::from_rows(Alphabet::A16, {"IN", "P"}), std::invalid_argument);
  CHECK_THROWS_AS(Grid::from_rows(Alphabet::B4, {"04"}), std::invalid_argument);
  CHECK_THROWS_AS(Grid(Alphabet::B4, 0, 3), std::invalid_argument);
}

TEST_CASE("subgrid extraction matches the window convention") {
  Grid g = Grid::from_rows(Alphabet::B4, {"0123", "1230", "2301"});
  Grid w = g.subgrid(2, 3, 2, 2);
  CHECK(w.row_string(1) == "30");
  CHECK(w.row_string(2) == "01");
  CHECK_THROWS_AS(g.subgrid(2, 3, 2, 3), std::out_of_range);
  CHECK_THROWS_AS(g.subgrid(0, 1, 1, 1), std::out_of_range);
  CHECK(g.subgrid(1, 1, 3, 4) == g);
}

TEST_CASE("grid JSON round trip is bit-exact") {
  Grid g = Grid::from_rows(Alphabet::B4, {"23", "33"});
  const std::string j = grid_to_json(g);
  CHECK(j == R"({"alphabet":"B4","rows":2,"cols":2,"data":"2333"})");
  CHECK(grid_from_json(j) == g);
  CHECK(grid_to_json(grid_from_json(j)) == j);

  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Alphabet a = (t % 2) ? Alphabet::A16 : Alphabet::B4;
    const int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
    Grid r(a, rows, cols);
    for (int i = 1; i <= rows; ++i)
      for (int j2 = 1; j2 <= cols; ++j2)
        r.set(i, j2, std::uint8_t(rng() % alphabet_size(a)));
    CHECK(grid_from_json(grid_to_json(r)) == r);
  }

  CHECK_THROWS(grid_from_json(R"({"alphabet":"B4","rows":2,"cols":2,"data":"233"})"));
  CHECK_THROWS(grid_from_json(R"({"alphabet":"X","rows":1,"cols":1,"data":"0"})"));
}

TEST_CASE("canonical pattern keys are injective round trips") {
  Grid g = Grid::from_rows(Alphabet::A16, {"AF", "GC"});
  Grid h = Grid::from_rows(Alphabet::A16, {"AFGC"});
  CHECK(pattern_key(g) != pattern_key(h));  // same cells, different shape
  CHECK(grid_from_pattern_key(pattern_key(g)) == g);
  CHECK(grid_from_pattern_key(pattern_key(h)) == h);
  Grid b = Grid::from_rows(Alphabet::B4, {"01"});
  CHECK(pattern_key(b).size() == 3 + 2);
  CHECK(grid_from_pattern_key(pattern_key(b)) == b);
}
