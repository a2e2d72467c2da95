#pragma once

#include <vector>

#include "blockcheck/rootsys.hpp"

namespace blockcheck::weylorb {

struct RootOrbit {
  rootsys::Vec representative;
  std::vector<rootsys::Vec> members;  // sorted lexicographically
};

// Orbit of a root under the Weyl group, computed by closing under the simple
// reflections only (the group itself is never enumerated). The input must be
// a root of rs.
RootOrbit weyl_orbit(const rootsys::RootSystem& rs, const rootsys::Vec& root);

bool same_orbit(const rootsys::RootSystem& rs, const rootsys::Vec& a,
                const rootsys::Vec& b);

}  // namespace blockcheck::weylorb
