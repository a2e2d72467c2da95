#pragma once

#include <optional>
#include <vector>

#include "blockcheck/rootsys.hpp"

namespace blockcheck::centralj {

// A set of simple-root indices, 1-based, sorted, no duplicates. The empty set
// is a valid input for the predicates (vacuously orthogonal and central) but
// is never produced by the classification.
struct SubsetJ {
  std::vector<int> indices;
};

SubsetJ make_subset(std::vector<int> indices, int rank);

// True iff the alpha_j, j in J, are pairwise orthogonal.
bool is_orthogonal(const rootsys::RootSystem& rs, const SubsetJ& j);

struct CentralityWitness {
  SubsetJ subset;
  bool is_orthogonal = false;
  bool is_central = false;
  // Set iff not central: the smallest simple-root index beta with odd
  // pairing sum against J.
  std::optional<int> failing_beta;
};

// Centrality of the product of the J-indexed torus involutions: for every
// simple root beta, sum_{j in J} <beta, alpha_j^vee> must be even. The sum is
// linear in beta, so checking simple beta suffices; is_central_all_roots runs
// the same parity test over all of Phi as an independent cross-check.
CentralityWitness is_central(const rootsys::RootSystem& rs, const SubsetJ& j);
bool is_central_all_roots(const rootsys::RootSystem& rs, const SubsetJ& j);

// All nonempty orthogonal central subsets, in lexicographic order of their
// index lists.
std::vector<SubsetJ> classify_central_orthogonal(const rootsys::RootSystem& rs);

}  // namespace blockcheck::centralj
