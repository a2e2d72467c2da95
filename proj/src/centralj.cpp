#include "blockcheck/centralj.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockcheck::centralj {

SubsetJ make_subset(std::vector<int> indices, int rank) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw std::invalid_argument("subset indices must be distinct");
  for (int i : indices)
    if (i < 1 || i > rank)
      throw std::invalid_argument("subset index out of range 1..rank");
  return SubsetJ{std::move(indices)};
}

bool is_orthogonal(const rootsys::RootSystem& rs, const SubsetJ& j) {
  for (std::size_t a = 0; a < j.indices.size(); ++a)
    for (std::size_t b = a + 1; b < j.indices.size(); ++b)
      if (rs.cartan[static_cast<std::size_t>(j.indices[a] - 1)]
                   [static_cast<std::size_t>(j.indices[b] - 1)] != 0)
        return false;
  return true;
}

CentralityWitness is_central(const rootsys::RootSystem& rs, const SubsetJ& j) {
  CentralityWitness w;
  w.subset = j;
  w.is_orthogonal = is_orthogonal(rs, j);
  w.is_central = true;
  for (int b = 1; b <= rs.rank(); ++b) {
    long long sum = 0;
    for (int idx : j.indices)
      sum += rs.cartan[static_cast<std::size_t>(b - 1)]
                      [static_cast<std::size_t>(idx - 1)];
    if (sum % 2 != 0) {
      w.is_central = false;
      w.failing_beta = b;
      break;
    }
  }
  return w;
}

bool is_central_all_roots(const rootsys::RootSystem& rs, const SubsetJ& j) {
  for (const rootsys::Vec& beta : rs.roots) {
    long long sum = 0;
    for (int idx : j.indices)
      sum += rootsys::cartan_pairing(
          rs, beta, rs.simple_roots[static_cast<std::size_t>(idx - 1)]);
    if (sum % 2 != 0) return false;
  }
  return true;
}

std::vector<SubsetJ> classify_central_orthogonal(const rootsys::RootSystem& rs) {
  const int n = rs.rank();
  std::vector<SubsetJ> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    SubsetJ j;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) j.indices.push_back(i + 1);
    if (!is_orthogonal(rs, j)) continue;
    CentralityWitness w = is_central(rs, j);
    if (w.is_central) out.push_back(std::move(j));
  }
  std::sort(out.begin(), out.end(), [](const SubsetJ& a, const SubsetJ& b) {
    return a.indices < b.indices;
  });
  return out;
}

}  // namespace blockcheck::centralj
