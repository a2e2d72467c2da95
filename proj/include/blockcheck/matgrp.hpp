#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace blockcheck::matgrp {

// Finite field of order q = p^r <= 32, with a fixed irreducible polynomial
// per (p, r). Elements are indices 0..q-1 encoding base-p digit vectors of
// the polynomial representation; operations go through precomputed tables.
class Gf {
 public:
  static const Gf& get(unsigned q);  // cached; throws for unsupported q

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned degree() const { return r_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg_[b]); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const;
  std::uint8_t one() const { return 1; }

  // Base-p digits of the element's polynomial representation, lowest first.
  std::vector<unsigned> digits(std::uint8_t a) const;

 private:
  explicit Gf(unsigned q);
  std::size_t idx(std::uint8_t a, std::uint8_t b) const { return std::size_t(a) * q_ + b; }

  unsigned q_ = 0, p_ = 0, r_ = 0;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

// Square matrix over Gf, degree <= 4, entries stored row-major as field
// indices. Encodes injectively into a uint64 key for set membership.
struct Mat {
  std::uint8_t n = 0;
  unsigned q = 0;
  std::array<std::uint8_t, 16> e{};

  static Mat identity(std::uint8_t n, unsigned q);
  std::uint8_t& at(unsigned r, unsigned c) { return e[r * n + c]; }
  std::uint8_t at(unsigned r, unsigned c) const { return e[r * n + c]; }

  std::uint64_t code() const;
  bool operator==(const Mat& o) const { return n == o.n && q == o.q && e == o.e; }
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_inverse(const Mat& a);  // throws if singular
unsigned mat_order(const Mat& a);

// An explicitly enumerated finite group of invertible matrices.
class MatrixGroup {
 public:
  MatrixGroup(std::uint8_t degree, unsigned q, std::vector<Mat> elements);

  std::uint8_t degree() const { return degree_; }
  unsigned q() const { return q_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Mat>& elements() const { return elems_; }
  bool contains(const Mat& m) const;

 private:
  std::uint8_t degree_;
  unsigned q_;
  std::vector<Mat> elems_;          // sorted by code
  std::vector<std::uint64_t> codes_;
};

// All of SL_2(q), q <= 32 a prime power. |SL_2(q)| = q(q^2-1) is verified
// during construction.
MatrixGroup enumerate_sl2(unsigned q);

// All of GL_n(q) for n <= 4, q <= 4.
MatrixGroup enumerate_gl(unsigned degree, unsigned q);

enum class ShapeLabel {
  trivial,
  cyclic,
  klein_four,
  elementary_abelian,
  homocyclic,
  quaternion,
  dihedral,
  semidihedral,
  other_abelian,
  other_nonabelian,
};

std::string to_string(ShapeLabel label);

// Isomorphism-type summary of a finite 2-group. abelian_type is the exponent
// vector (nonincreasing) when the group is abelian, empty otherwise.
struct TwoGroupShape {
  ShapeLabel label = ShapeLabel::trivial;
  unsigned long long order = 1;
  std::vector<unsigned> abelian_type;
};

std::string to_string(const TwoGroupShape& s);

struct SylowReport {
  std::vector<Mat> elements;
  TwoGroupShape shape;
};

// A Sylow 2-subgroup, grown from a maximal-order 2-element by repeatedly
// adjoining normalizing 2-elements until the full 2-part of |G| is reached.
SylowReport sylow2(const MatrixGroup& g);

// Shape of the image of a Sylow 2-subgroup in g / O_2(Z(g)).
TwoGroupShape central_quotient_sylow2_shape(const MatrixGroup& g);

std::set<unsigned> element_order_spectrum(const MatrixGroup& g);

// Certificate that a cyclic subgroup of order 15 is a maximal odd-order
// subgroup of GL_4(2), by exhaustive computation plus a seeded random
// two-generator probe.
struct C15Certificate {
  std::size_t group_order = 0;
  std::set<unsigned> spectrum;
  std::size_t order15_elements = 0;
  bool centralizers_all_order_15 = false;
  unsigned random_trials = 0;
  bool random_closures_consistent = false;
  bool certified() const {
    return group_order == 20160 && order15_elements > 0 &&
           centralizers_all_order_15 && random_closures_consistent;
  }
};

C15Certificate verify_c15_maximal_odd();

// Rank over GF(2) of the span of {e_i + e_j} in dimension u = #parts, minus
// one for the quotient by the all-ones vector when the parts sum to an even
// n. Models the 2-torsion of a diagonal torus cut out by odd multiplicities.
int diagonal_two_torus_rank(const std::vector<int>& odd_parts,
                            bool quotient_by_minus_identity);

struct PermutationBound {
  boost::multiprecision::cpp_int bound;  // u!
  std::set<unsigned> element_orders;     // all lcms of partitions of u
  bool has_order_divisible_by_15 = false;
};

// Order bound u! for a group permuting u eigenspaces, together with the
// element-order set of S_u.
PermutationBound eigenspace_permutation_bound(unsigned u);

}  // namespace blockcheck::matgrp
