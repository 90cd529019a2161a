#include <doctest.h>

#include <random>
#include <sstream>

#include "pfold/census.hpp"

using namespace pfold;

TEST_CASE("window enumeration on small grids") {
  const PatternSet s1 = enumerate_subpatterns(s_supertile(1), 1, 1);
  CHECK(s1.size() == 2);  // only the two high digits occur at level 1
  CHECK(s1.contains(Grid::from_rows(Alphabet::B4, {"2"})));
  CHECK(s1.contains(Grid::from_rows(Alphabet::B4, {"3"})));
  CHECK_FALSE(s1.contains(Grid::from_rows(Alphabet::B4, {"0"})));

  CHECK(enumerate_subpatterns(t_supertile(1), 2, 2).size() == 1);
  CHECK(enumerate_subpatterns(s_supertile(2), 1, 1).size() == 4);

  CHECK_THROWS_AS(enumerate_subpatterns(t_supertile(1), 3, 1), std::invalid_argument);
}

TEST_CASE("strided enumeration picks anchors by congruence class") {
  const Grid g = t_supertile(3);
  PatternSet all = enumerate_subpatterns(g, 2, 2);
  PatternSet merged(Alphabet::A16, 2, 2);
  std::size_t total = 0;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      PatternSet part = enumerate_subpatterns_strided(g, 2, 2, i, j, 2);
      total += part.size();
      for (const auto& m : part.members()) merged.insert(m);
    }
  CHECK(merged == all);
  CHECK(total >= all.size());
}

TEST_CASE("stable pattern sets and their plateau levels") {
  const CensusResult r22 = stable_pattern_set(Structure::T, 2, 2);
  CHECK(r22.set.size() == 76);
  CHECK(r22.plateau_level == 5);

  const CensusResult r44 = stable_pattern_set(Structure::T, 4, 4);
  CHECK(r44.set.size() == 316);
  CHECK(r44.plateau_level == 6);

  CHECK(stable_pattern_set(Structure::T, 3, 3).set.size() == 184);
  CHECK(stable_pattern_set(Structure::S, 3, 3).set.size() == 184);

  CensusOptions tight;
  tight.depth_cap = 3;
  CHECK_THROWS_AS(stable_pattern_set(Structure::T, 4, 4, tight), budget_error);

  CensusOptions small_budget;
  small_budget.max_dim = 4;
  CHECK_THROWS_AS(stable_pattern_set(Structure::T, 5, 2, small_budget), budget_error);
}

TEST_CASE("square-pattern counts by enumeration") {
  CHECK(complexity_bruteforce(1) == 4);
  CHECK(complexity_bruteforce(2) == 68);
  CHECK(complexity_bruteforce(3) == 184);
  // the four-way class union equals the full set only from 3x3 upwards
  CHECK(stable_pattern_set(Structure::T, 1, 1).set.size() == 16);
  CHECK(stable_pattern_set(Structure::T, 2, 2).set.size() == 76);
}

TEST_CASE("position-class sets via substitution images") {
  CHECK(pij_set(Structure::T, 3, 3, 2, 1).size() == 76);
  CHECK(pij_set(Structure::T, 4, 4, 1, 1).size() == 76);

  // 1x1 classes partition the letters, four per class
  PatternSet full = stable_pattern_set(Structure::T, 1, 1).set;
  std::size_t total = 0;
  std::vector<PatternSet> classes;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      classes.push_back(pij_set(Structure::T, 1, 1, i, j));
      CHECK(classes.back().size() == 4);
      CHECK(classes.back().subset_of(full));
      total += classes.back().size();
    }
  for (std::size_t p = 0; p < classes.size(); ++p)
    for (std::size_t q = p + 1; q < classes.size(); ++q)
      CHECK(classes[p].disjoint_with(classes[q]));
  CHECK(total == full.size());

  // extended indices reduce mod 2 / mod 4
  CHECK(p_class_index(3) == 1);
  CHECK(p_class_index(6) == 2);
  CHECK(q_class_index(5) == 1);
  CHECK(q_class_index(8) == 4);
  CHECK(pij_set(Structure::T, 2, 2, 3, 4) == pij_set(Structure::T, 2, 2, 1, 2));
}

TEST_CASE("level-2 class sets") {
  // the four level-2 classes partition each level-1 class
  const CensusResult base = stable_pattern_set(Structure::T, 2, 2);
  const PatternSet p11 = pij_from_base(base.set, Structure::T, 1, 1);
  std::size_t total = 0;
  std::vector<PatternSet> parts;
  for (int k : {0, 2})
    for (int l : {0, 2}) {
      parts.push_back(qij_from_base(base.set, 1 + k, 1 + l));
      CHECK(parts.back().subset_of(p11));
      total += parts.back().size();
    }
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t q = p + 1; q < parts.size(); ++q)
      CHECK(parts[p].disjoint_with(parts[q]));
  CHECK(total == p11.size());

  // 1x1 level-2 images collapse onto two letters; the disjoint-partition
  // property starts at m,n >= 2
  const PatternSet q11 = qij_set(1, 1, 1, 1);
  CHECK(q11.size() == 2);
  CHECK(q11.contains(Grid::from_rows(Alphabet::A16, {"A"})));
  CHECK(q11.contains(Grid::from_rows(Alphabet::A16, {"I"})));

  CHECK(qij_set(2, 3, 4, 4).size() == qij_set(2, 3, 4, 4).size());
}

TEST_CASE("class counts reproduce the seed column at n = 1 and n = 3") {
  const ClassCounts c1 = class_counts_bruteforce(1);
  CHECK(c1.at('a', 1, 1) == 4);
  CHECK(c1.at('a', 1, 2) == 4);
  CHECK(c1.at('a', 2, 1) == 4);
  CHECK(c1.at('a', 2, 2) == 4);
  CHECK(c1.at('b', 1, 1) == 8);
  CHECK(c1.at('b', 1, 2) == 8);
  CHECK(c1.at('b', 2, 1) == 8);
  CHECK(c1.at('b', 2, 2) == 16);
  CHECK(c1.at('c', 1, 1) == 8);
  CHECK(c1.at('c', 1, 2) == 8);
  CHECK(c1.at('c', 2, 1) == 12);
  CHECK(c1.at('c', 2, 2) == 8);

  const ClassCounts c3 = class_counts_bruteforce(3);
  CHECK(c3.at('a', 1, 1) + c3.at('a', 1, 2) + c3.at('a', 2, 1) + c3.at('a', 2, 2) == 184);
}

TEST_CASE("partitioned scans are identical to the single-worker scan") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 6; ++t) {
    const int level = 5 + int(rng() % 2);
    const Grid g = t_supertile(level);
    const int m = 1 + int(rng() % 5), n = 1 + int(rng() % 5);
    const PatternSet one = enumerate_subpatterns(g, m, n, 1);
    CHECK(enumerate_subpatterns(g, m, n, 2) == one);
    CHECK(enumerate_subpatterns(g, m, n, 8) == one);
  }
}

TEST_CASE("pattern set text export is sorted and canonical") {
  PatternSet set(Alphabet::B4, 1, 2);
  set.insert(std::string{"\x03\x01", 2});
  set.insert(std::string{"\x00\x02", 2});
  set.insert(std::string{"\x02\x03", 2});
  CHECK(pattern_set_to_text(set) == "1 2 B4 02\n1 2 B4 23\n1 2 B4 31\n");
}
