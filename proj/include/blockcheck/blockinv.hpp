#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "blockcheck/abelian2.hpp"
#include "blockcheck/matgrp.hpp"
#include "blockcheck/rootsys.hpp"

namespace blockcheck::blockinv {

using Int = boost::multiprecision::cpp_int;

// Character counts for a block with rank-2 abelian defect group d and
// inertial index e (1 or 3; 3 requires d homocyclic so that an order-3
// automorphism exists).
struct CountPair {
  Int k;                  // irreducible ordinary characters
  Int l;                  // irreducible Brauer characters
  std::optional<Int> k0;  // height-zero characters, when pinned down
};
CountPair rank2_invariants(const abelian2::AbelianTwoGroup& d, unsigned e);

// The elementary abelian order-16 defect with full odd inertial action.
struct Elab16Counts {
  Int group_order;
  Int k;
  Int l;
  Int k0;
};
Elab16Counts elab16_invariants(unsigned e);  // e must be 15

// Orbit count t solving (16 - t*w)*w + t = 8*w for an odd prime w, i.e.
// t = 8w/(w^2 - 1). Integral only for w = 3.
std::optional<long long> clifford_orbit_count(long long w);

// (q^t - 1)/(q - 1), or (q^t + 1)/(q + 1) for the twisted form (odd t only).
Int torus_fixed_order(long long q, unsigned t, bool twisted);

// 2-part of q^t - 1 for odd t and q = +-3 (mod 8); always 2 or 4.
unsigned dn_p0_order(long long q, unsigned t);

// Whether q^r = +-3 (mod 8), equivalently r odd and q = +-3 (mod 8). This is
// the exact condition for SL_2(q^r) to have quaternion Sylow 2-subgroups of
// order 8.
bool sl2_sylow_condition(long long q, unsigned r);

enum class CentralizerLabel {
  unipotent,
  quasi_isolated_nontoral,
  toral_connected,
  toral_disconnected,
};

struct BlockDescriptor {
  rootsys::Family family;
  int rank;
  long long q;  // odd prime power
  bool twisted = false;
  CentralizerLabel label = CentralizerLabel::unipotent;
};

enum class CaseLabel {
  case_i,
  case_ii,
  case_iii,
  case_iv,
  case_v,
  nilpotent_covered,
  excluded,
};

struct CaseReport {
  CaseLabel label;
  std::string reason;
  std::optional<unsigned> t;  // the parameter forced by the family arithmetic
  std::optional<matgrp::TwoGroupShape> defect_shape;
  std::optional<matgrp::TwoGroupShape> central_quotient_shape;
};

// Routes a centralizer description to the case list of the classification,
// with the arithmetic side conditions checked exactly.
CaseReport classify_block_case(const BlockDescriptor& desc);

// Source-algebra classes possible for a rank-2 defect group with inertial
// index e. Throws when (d, e) is arithmetically impossible.
std::vector<std::string> morita_class_rank2(const abelian2::AbelianTwoGroup& d,
                                            unsigned e);

std::string to_string(CaseLabel label);
std::string to_string(CentralizerLabel label);

}  // namespace blockcheck::blockinv
