#include <doctest.h>

#include <algorithm>

#include "blockcheck/rootsys.hpp"

using namespace blockcheck::rootsys;
using blockcheck::Rational;

TEST_CASE("root counts match the classical formulas") {
  struct Row {
    char family;
    int rank;
    std::size_t count;
  };
  const Row rows[] = {
      {'A', 1, 2},   {'A', 5, 30},  {'B', 2, 8},   {'B', 4, 32},
      {'C', 3, 18},  {'C', 6, 72},  {'D', 4, 24},  {'D', 7, 84},
      {'E', 6, 72},  {'E', 7, 126}, {'E', 8, 240}, {'F', 4, 48},
      {'G', 2, 12},
  };
  for (const auto& r : rows) {
    const auto rs = build_root_system(make_lie_type(r.family, r.rank));
    CAPTURE(r.family);
    CAPTURE(r.rank);
    CHECK(rs.roots.size() == r.count);
    CHECK(rs.simple_roots.size() == static_cast<std::size_t>(r.rank));
  }
}

TEST_CASE("cartan matrix has 2 on the diagonal and integral entries") {
  for (char f : {'A', 'B', 'C', 'D', 'F', 'G'}) {
    int rank = (f == 'F') ? 4 : (f == 'G') ? 2 : 5;
    if (f == 'D') rank = 5;
    const auto rs = build_root_system(make_lie_type(f, rank));
    for (int i = 0; i < rank; ++i) {
      CHECK(rs.cartan[i][i] == 2);
      for (int j = 0; j < rank; ++j) {
        if (i == j) continue;
        CHECK(rs.cartan[i][j] <= 0);
        CHECK(rs.cartan[i][j] >= -3);
      }
    }
  }
}

TEST_CASE("cartan_pairing is integral on every pair of roots") {
  const auto rs = build_root_system(make_lie_type('G', 2));
  for (const auto& a : rs.roots)
    for (const auto& b : rs.roots) {
      // throws unless 2(a,b)/(b,b) is an integer
      CHECK_NOTHROW(cartan_pairing(rs, a, b));
    }
}

TEST_CASE("fundamental weights are dual to the simple coroots") {
  for (char f : {'B', 'D', 'E'}) {
    const int rank = (f == 'E') ? 7 : 4;
    const auto rs = build_root_system(make_lie_type(f, rank));
    REQUIRE(rs.fundamental_weights.size() == static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        const long long p =
            cartan_pairing(rs, rs.fundamental_weights[i], rs.simple_roots[j]);
        CHECK(p == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("contains_root distinguishes roots from non-roots") {
  const auto rs = build_root_system(make_lie_type('B', 3));
  for (const auto& a : rs.simple_roots) CHECK(rs.contains_root(a));
  Vec twice = rs.simple_roots[0];
  for (auto& c : twice) c = c * Rational(2);
  CHECK_FALSE(rs.contains_root(twice));
  Vec zero(rs.simple_roots[0].size(), Rational(0));
  CHECK_FALSE(rs.contains_root(zero));
}

TEST_CASE("simple reflections are involutions and permute the roots") {
  const auto rs = build_root_system(make_lie_type('B', 3));
  for (int i = 1; i <= 3; ++i)
    for (const auto& a : rs.roots) {
      const Vec b = reflect_simple(rs, i, a);
      CHECK(rs.contains_root(b));
      CHECK(reflect_simple(rs, i, b) == a);
    }
}

TEST_CASE("rank validation rejects degenerate types") {
  CHECK_THROWS_AS(make_lie_type('A', 0), std::invalid_argument);
  CHECK_THROWS_AS(make_lie_type('B', 1), std::invalid_argument);
  CHECK_THROWS_AS(make_lie_type('C', 2), std::invalid_argument);
  CHECK_THROWS_AS(make_lie_type('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(make_lie_type('E', 5), std::invalid_argument);
  CHECK_THROWS_AS(make_lie_type('E', 9), std::invalid_argument);
  CHECK_THROWS_AS(make_lie_type('F', 3), std::invalid_argument);
  CHECK_THROWS_AS(make_lie_type('G', 3), std::invalid_argument);
  CHECK_THROWS_AS(make_lie_type('H', 3), std::invalid_argument);
  CHECK_THROWS_AS(make_lie_type('A', 13), std::invalid_argument);
  CHECK(family_letter(make_lie_type('a', 4).family) == 'A');
}

TEST_CASE("rank-7 exceptional diagram is the labelled chain with one branch") {
  const auto rs = build_root_system(make_lie_type('E', 7));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (rs.cartan[i][j] != 0) edges.push_back({i + 1, j + 1});
  std::sort(edges.begin(), edges.end());
  const std::vector<std::pair<int, int>> want = {{1, 3}, {2, 5}, {3, 4},
                                                 {4, 5}, {5, 6}, {6, 7}};
  CHECK(edges == want);
}
