#include <doctest.h>

#include <algorithm>
#include <set>

#include "blockcheck/weylorb.hpp"

using namespace blockcheck;
using namespace blockcheck::weylorb;

namespace {

rootsys::RootSystem rs(char f, int n) {
  return rootsys::build_root_system(rootsys::make_lie_type(f, n));
}

std::multiset<std::size_t> orbit_sizes(const rootsys::RootSystem& sys) {
  std::vector<RootOrbit> orbits;
  for (const auto& a : sys.roots) {
    bool seen = false;
    for (const auto& o : orbits)
      if (std::binary_search(o.members.begin(), o.members.end(), a)) {
        seen = true;
        break;
      }
    if (!seen) orbits.push_back(weyl_orbit(sys, a));
  }
  std::multiset<std::size_t> sizes;
  for (const auto& o : orbits) sizes.insert(o.members.size());
  return sizes;
}

}  // namespace

TEST_CASE("orbit decomposition sizes per type") {
  CHECK(orbit_sizes(rs('A', 3)) == std::multiset<std::size_t>{12});
  CHECK(orbit_sizes(rs('B', 4)) == std::multiset<std::size_t>{8, 24});
  CHECK(orbit_sizes(rs('C', 4)) == std::multiset<std::size_t>{8, 24});
  CHECK(orbit_sizes(rs('D', 4)) == std::multiset<std::size_t>{24});
  CHECK(orbit_sizes(rs('G', 2)) == std::multiset<std::size_t>{6, 6});
  CHECK(orbit_sizes(rs('F', 4)) == std::multiset<std::size_t>{24, 24});
  CHECK(orbit_sizes(rs('E', 6)) == std::multiset<std::size_t>{72});
}

TEST_CASE("orbits are closed under every simple reflection") {
  const auto b3 = rs('B', 3);
  const auto o = weyl_orbit(b3, b3.simple_roots[2]);  // short root orbit
  CHECK(o.members.size() == 6);
  for (const auto& m : o.members)
    for (int i = 1; i <= 3; ++i) {
      const auto r = rootsys::reflect_simple(b3, i, m);
      CHECK(std::binary_search(o.members.begin(), o.members.end(), r));
    }
}

TEST_CASE("same_orbit is reflexive and symmetric on roots") {
  const auto c3 = rs('C', 3);
  const auto& a = c3.simple_roots[0];
  const auto& b = c3.simple_roots[1];
  const auto& c = c3.simple_roots[2];
  CHECK(same_orbit(c3, a, a));
  CHECK(same_orbit(c3, a, b));
  CHECK(same_orbit(c3, b, a));
  CHECK_FALSE(same_orbit(c3, a, c));
  CHECK_FALSE(same_orbit(c3, c, b));
}

TEST_CASE("odd symplectic rank: the long simple root sits alone") {
  for (int n : {3, 5, 7}) {
    const auto sys = rs('C', n);
    for (int i = 0; i + 1 < n; ++i)
      CHECK_FALSE(same_orbit(sys, sys.simple_roots[n - 1], sys.simple_roots[i]));
  }
}

TEST_CASE("non-root input is rejected") {
  const auto a2 = rs('A', 2);
  rootsys::Vec v(a2.simple_roots[0].size(), Rational(0));
  CHECK_THROWS_AS(weyl_orbit(a2, v), std::invalid_argument);
  CHECK_THROWS_AS(same_orbit(a2, v, a2.simple_roots[0]), std::invalid_argument);
}

TEST_CASE("negation of a root stays in its orbit") {
  const auto d5 = rs('D', 5);
  for (const auto& a : d5.simple_roots) {
    rootsys::Vec neg = a;
    for (auto& c : neg) c = -c;
    CHECK(same_orbit(d5, a, neg));
  }
}
