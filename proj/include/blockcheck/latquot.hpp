#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "blockcheck/centralj.hpp"
#include "blockcheck/rootsys.hpp"

namespace blockcheck::latquot {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

struct SNFResult {
  std::vector<Int> d;  // diagonal of the normal form, length min(rows, cols)
  IntMatrix u;         // rows x rows, |det| = 1
  IntMatrix v;         // cols x cols, |det| = 1
};

// Smith normal form over Z by exact elementary row/column operations with a
// smallest-nonzero-pivot strategy: u * m * v is diagonal with nonnegative
// entries satisfying d[i] | d[i+1].
SNFResult smith_normal_form(const IntMatrix& m);

struct QuotientReport {
  std::vector<Int> invariant_factors;  // the factors > 1
  int free_rank = 0;
  bool torsion_free = false;
};

// The rank x |J| matrix whose column for j lists the pairings
// (<alpha_j, alpha_i^vee>)_i, i.e. alpha_j in the fundamental-weight basis.
// quotient_invariants reduces exactly this matrix.
IntMatrix subset_pairing_matrix(const rootsys::RootSystem& rs,
                                const centralj::SubsetJ& j);

// Invariant factors (> 1 only) computed without elementary operations, as
// successive ratios of the gcds of all k x k minors. Exponential in the
// matrix size; intended as an independent cross-check on small inputs.
std::vector<Int> minor_gcd_invariant_factors(const IntMatrix& m);

// Structure of X(T)/(Z-span of alpha_j, j in J) for the simply connected
// group of the given type: X(T) is the full weight lattice with basis the
// fundamental weights, in which alpha_j has coordinate vector
// (<alpha_j, alpha_i^vee>)_i.
QuotientReport quotient_invariants(const rootsys::RootSystem& rs,
                                   const centralj::SubsetJ& j);

// True iff the quotient is torsion-free (the corresponding central quotient
// subgroup has connected center).
bool center_connected(const rootsys::RootSystem& rs, const centralj::SubsetJ& j);

}  // namespace blockcheck::latquot
