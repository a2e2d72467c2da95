#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace blockcheck::abelian2 {

using Int = boost::multiprecision::cpp_int;

// C_{2^{m_1}} x ... x C_{2^{m_r}} with exponents stored nonincreasing.
struct AbelianTwoGroup {
  std::vector<unsigned> exponents;

  unsigned rank() const { return static_cast<unsigned>(exponents.size()); }
  unsigned total_exponent_bits() const;
  unsigned long long order() const;  // 2^(sum of exponents)
  bool homocyclic() const;
};

// Validates entries (>= 1), sorts nonincreasing. Total exponent capped at 40.
AbelianTwoGroup make_abelian_two_group(std::vector<unsigned> exponents);

// |Aut| as a product formula over the exponent multiplicities.
Int aut_order_closed_form(const AbelianTwoGroup& d);

// |Aut| by enumerating all endomorphism matrices (entries a_ij carry the
// forced factor 2^(max(m_i - m_j, 0))) and keeping the surjective ones.
// Throws when the candidate space exceeds 2^22.
Int aut_order_enumerated(const AbelianTwoGroup& d);

// |Aut| from a deterministic stabilizer chain for the permutation action of
// a generating set on the group elements. Throws when |d| > 2^12 or when the
// transversal tables would exceed the memory cap.
Int aut_order_stabilizer_chain(const AbelianTwoGroup& d);

struct AutOrderReport {
  Int value;
  Int closed_form;
  std::optional<Int> enumerated;          // present when feasible
  std::optional<Int> chain;               // present when feasible
};

// Runs every feasible computation path and requires exact agreement.
AutOrderReport aut_order(const AbelianTwoGroup& d);

Int odd_part(Int n);

// Whether |Aut(d)| is a power of 2.
bool aut_is_two_group(const AbelianTwoGroup& d);

// Orbit partition of the involutions of a homocyclic rank-2 group under the
// order-3 automorphism (x, y) -> (-y, x - y).
struct InvolutionOrbits {
  unsigned automorphism_order = 0;
  // Each orbit lists elements as residue pairs, orbits sorted by first entry.
  std::vector<std::vector<std::array<unsigned long long, 2>>> orbits;
};
InvolutionOrbits order3_involution_action(const AbelianTwoGroup& d);

// True when every block with this rank-2 defect group is forced nilpotent,
// i.e. the odd part of |Aut(d)| is trivial.
bool rank2_nilpotency_forced(const AbelianTwoGroup& d);

}  // namespace blockcheck::abelian2
