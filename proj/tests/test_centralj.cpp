#include <doctest.h>

#include "blockcheck/centralj.hpp"

using namespace blockcheck;
using namespace blockcheck::centralj;

namespace {

rootsys::RootSystem rs(char f, int n) {
  return rootsys::build_root_system(rootsys::make_lie_type(f, n));
}

std::vector<std::vector<int>> lists(const std::vector<SubsetJ>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& s : v) out.push_back(s.indices);
  return out;
}

}  // namespace

TEST_CASE("make_subset rejects duplicates and out-of-range indices") {
  CHECK_NOTHROW(make_subset({2, 1}, 4));
  CHECK(make_subset({2, 1}, 4).indices == std::vector<int>{1, 2});
  CHECK_THROWS_AS(make_subset({1, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_subset({0}, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_subset({5}, 4), std::invalid_argument);
}

TEST_CASE("orthogonality of simple-root subsets") {
  const auto a3 = rs('A', 3);
  CHECK(is_orthogonal(a3, make_subset({1, 3}, 3)));
  CHECK_FALSE(is_orthogonal(a3, make_subset({1, 2}, 3)));
  CHECK(is_orthogonal(a3, make_subset({}, 3)));
  CHECK(is_orthogonal(a3, make_subset({2}, 3)));
}

TEST_CASE("centrality witness pinpoints the first failing simple root") {
  const auto b3 = rs('B', 3);

  const auto good = is_central(b3, make_subset({3}, 3));
  CHECK(good.is_central);
  CHECK_FALSE(good.failing_beta.has_value());

  // <alpha_2, alpha_1^vee> = -1 is odd, so {1} is not central in B_3
  const auto bad = is_central(b3, make_subset({1}, 3));
  CHECK_FALSE(bad.is_central);
  REQUIRE(bad.failing_beta.has_value());
  CHECK(*bad.failing_beta == 2);
}

TEST_CASE("centrality over simple roots agrees with centrality over all roots") {
  for (char f : {'G', 'F'}) {
    const auto sys = rs(f, f == 'G' ? 2 : 4);
    const int n = sys.rank();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) idx.push_back(i + 1);
      const auto j = make_subset(idx, n);
      CHECK(is_central(sys, j).is_central == is_central_all_roots(sys, j));
    }
  }
}

TEST_CASE("classification of central orthogonal subsets, small cases") {
  CHECK(lists(classify_central_orthogonal(rs('A', 7))) ==
        std::vector<std::vector<int>>{{1, 3, 5, 7}});
  CHECK(classify_central_orthogonal(rs('A', 6)).empty());
  CHECK(lists(classify_central_orthogonal(rs('B', 5))) ==
        std::vector<std::vector<int>>{{5}});
  CHECK(lists(classify_central_orthogonal(rs('C', 6))) ==
        std::vector<std::vector<int>>{{1, 3, 5}});
  CHECK(lists(classify_central_orthogonal(rs('D', 5))) ==
        std::vector<std::vector<int>>{{4, 5}});
  CHECK(lists(classify_central_orthogonal(rs('D', 6))) ==
        std::vector<std::vector<int>>{{1, 3, 5}, {1, 3, 6}, {5, 6}});
  CHECK(lists(classify_central_orthogonal(rs('E', 7))) ==
        std::vector<std::vector<int>>{{1, 2, 4}});
  CHECK(classify_central_orthogonal(rs('E', 6)).empty());
  CHECK(classify_central_orthogonal(rs('E', 8)).empty());
  CHECK(classify_central_orthogonal(rs('F', 4)).empty());
  CHECK(classify_central_orthogonal(rs('G', 2)).empty());
}

TEST_CASE("classified subsets are exactly the orthogonal central ones") {
  const auto d4 = rs('D', 4);
  const auto found = classify_central_orthogonal(d4);
  int expected = 0;
  for (int mask = 1; mask < (1 << 4); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) idx.push_back(i + 1);
    const auto j = make_subset(idx, 4);
    if (is_orthogonal(d4, j) && is_central(d4, j).is_central) ++expected;
  }
  CHECK(static_cast<int>(found.size()) == expected);
}
