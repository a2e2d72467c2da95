#include "blockcheck/weylorb.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace blockcheck::weylorb {

RootOrbit weyl_orbit(const rootsys::RootSystem& rs, const rootsys::Vec& root) {
  if (!rs.contains_root(root))
    throw std::invalid_argument("weyl_orbit input is not a root of the system");

  std::set<rootsys::Vec> seen{root};
  std::deque<rootsys::Vec> queue{root};
  while (!queue.empty()) {
    rootsys::Vec v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      rootsys::Vec w = rootsys::reflect_simple(rs, i, v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }

  RootOrbit orbit;
  orbit.representative = root;
  orbit.members.assign(seen.begin(), seen.end());
  return orbit;
}

bool same_orbit(const rootsys::RootSystem& rs, const rootsys::Vec& a,
                const rootsys::Vec& b) {
  if (!rs.contains_root(a) || !rs.contains_root(b))
    throw std::invalid_argument("same_orbit inputs must be roots of the system");
  RootOrbit orbit = weyl_orbit(rs, a);
  return std::binary_search(orbit.members.begin(), orbit.members.end(), b);
}

}  // namespace blockcheck::weylorb
