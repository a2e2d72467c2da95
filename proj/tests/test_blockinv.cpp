#include <doctest.h>

#include "blockcheck/blockinv.hpp"

using namespace blockcheck;
using namespace blockcheck::blockinv;

namespace {

abelian2::AbelianTwoGroup grp(std::vector<unsigned> e) {
  return abelian2::make_abelian_two_group(std::move(e));
}

BlockDescriptor desc(char f, int n, long long q, bool twisted,
                     CentralizerLabel label) {
  BlockDescriptor d;
  d.family = rootsys::make_lie_type(f, n).family;
  d.rank = n;
  d.q = q;
  d.twisted = twisted;
  d.label = label;
  return d;
}

}  // namespace

TEST_CASE("rank-2 character counts") {
  // e = 3 needs a homocyclic group: k = (|D| + 8)/3, l = 3
  for (unsigned m = 1; m <= 6; ++m) {
    const auto c = rank2_invariants(grp({m, m}), 3);
    CHECK(c.k == ((Int(1) << (2 * m)) + 8) / 3);
    CHECK(c.l == 3);
    if (m == 1) {
      REQUIRE(c.k0.has_value());
      CHECK(*c.k0 == 4);  // all characters of a klein-four block have height 0
    }
  }
  // e = 1: nilpotent, k = |D|, l = 1
  const auto n = rank2_invariants(grp({2, 1}), 1);
  CHECK(n.k == 8);
  CHECK(n.l == 1);

  CHECK_THROWS_AS(rank2_invariants(grp({2, 1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(rank2_invariants(grp({1, 1, 1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(rank2_invariants(grp({1, 1}), 2), std::invalid_argument);
}

TEST_CASE("order-16 elementary abelian defect with index-15 inertia") {
  const auto c = elab16_invariants(15);
  CHECK(c.group_order == 16);
  CHECK(c.k == 16);
  CHECK(c.l == 15);
  CHECK(c.k0 == 16);
  CHECK(c.k - c.l == 1);
  CHECK_THROWS_AS(elab16_invariants(3), std::invalid_argument);
}

TEST_CASE("clifford orbit count is integral only at w = 3") {
  REQUIRE(clifford_orbit_count(3).has_value());
  CHECK(*clifford_orbit_count(3) == 3);
  // t = 3 satisfies the defining identity (16 - tw)w + t = 8w at w = 3
  CHECK((16 - 3 * 3) * 3 + 3 == 8 * 3);
  for (long long w : {5, 7, 11, 13, 31, 97})
    CHECK_FALSE(clifford_orbit_count(w).has_value());
  CHECK_THROWS_AS(clifford_orbit_count(2), std::invalid_argument);
  CHECK_THROWS_AS(clifford_orbit_count(9), std::invalid_argument);
}

TEST_CASE("fixed-point orders of the Frobenius torus") {
  CHECK(torus_fixed_order(3, 3, false) == 13);
  CHECK(torus_fixed_order(3, 3, true) == 7);
  CHECK(torus_fixed_order(7, 3, false) == 57);
  CHECK(torus_fixed_order(7, 3, true) == 43);
  CHECK(torus_fixed_order(3, 5, false) == 121);
  CHECK(torus_fixed_order(3, 5, true) == 61);
  CHECK(torus_fixed_order(5, 1, false) == 1);

  // odd whenever q is odd and t is odd
  for (long long q : {3, 5, 7, 9, 11})
    for (unsigned t : {1u, 3u, 5u}) {
      CHECK(torus_fixed_order(q, t, false) % 2 == 1);
      CHECK(torus_fixed_order(q, t, true) % 2 == 1);
    }

  CHECK_THROWS_AS(torus_fixed_order(3, 2, true), std::invalid_argument);
  CHECK_THROWS_AS(torus_fixed_order(3, 0, false), std::invalid_argument);
}

TEST_CASE("2-part of q^t - 1 in the +-3 mod 8 regime") {
  CHECK(dn_p0_order(3, 1) == 2);
  CHECK(dn_p0_order(5, 1) == 4);
  CHECK(dn_p0_order(11, 1) == 2);
  CHECK(dn_p0_order(13, 1) == 4);
  CHECK(dn_p0_order(3, 3) == 2);   // 27 - 1 = 26
  CHECK(dn_p0_order(5, 3) == 4);   // 125 - 1 = 124
  CHECK_THROWS_AS(dn_p0_order(7, 1), std::invalid_argument);   // 7 = -1 mod 8
  CHECK_THROWS_AS(dn_p0_order(3, 2), std::invalid_argument);   // even t
}

TEST_CASE("quaternion-8 sylow condition") {
  CHECK(sl2_sylow_condition(3, 1));
  CHECK(sl2_sylow_condition(3, 3));
  CHECK(sl2_sylow_condition(5, 1));
  CHECK(sl2_sylow_condition(11, 1));
  CHECK_FALSE(sl2_sylow_condition(7, 1));   // 7 = -1 mod 8
  CHECK_FALSE(sl2_sylow_condition(9, 1));   // 9 = 1 mod 8
  CHECK_FALSE(sl2_sylow_condition(3, 2));   // even power lands in 1 mod 8
  CHECK_FALSE(sl2_sylow_condition(17, 1));
}

TEST_CASE("case routing for quasi-isolated centralizers") {
  // linear family: rank 2t - 1 with t odd and the sylow condition
  auto r = classify_block_case(desc('A', 5, 3, false, CentralizerLabel::quasi_isolated_nontoral));
  CHECK(r.label == CaseLabel::case_iii);
  REQUIRE(r.t.has_value());
  CHECK(*r.t == 3);
  REQUIRE(r.defect_shape.has_value());
  CHECK(r.defect_shape->label == matgrp::ShapeLabel::quaternion);
  CHECK(r.defect_shape->order == 8);
  CHECK(r.central_quotient_shape->label == matgrp::ShapeLabel::klein_four);

  // t even: excluded
  CHECK(classify_block_case(desc('A', 3, 3, false, CentralizerLabel::quasi_isolated_nontoral)).label ==
        CaseLabel::excluded);
  // sylow condition fails at q = 7
  CHECK(classify_block_case(desc('A', 5, 7, false, CentralizerLabel::quasi_isolated_nontoral)).label ==
        CaseLabel::excluded);

  // orthogonal family at rank 2t, t odd, q = +-3 (mod 8)
  r = classify_block_case(desc('D', 6, 3, false, CentralizerLabel::quasi_isolated_nontoral));
  CHECK(r.label == CaseLabel::case_v);
  CHECK(*r.t == 3);
  CHECK(r.defect_shape->label == matgrp::ShapeLabel::other_nonabelian);
  CHECK(r.defect_shape->order == 16);  // 8 * p0 with p0 = 2 at q = 3
  CHECK(r.central_quotient_shape->label == matgrp::ShapeLabel::elementary_abelian);
  CHECK(r.central_quotient_shape->order == 8);

  r = classify_block_case(desc('D', 6, 5, false, CentralizerLabel::quasi_isolated_nontoral));
  CHECK(r.label == CaseLabel::case_v);
  CHECK(r.defect_shape->order == 32);  // p0 = 4 at q = 5
  CHECK(r.central_quotient_shape->label == matgrp::ShapeLabel::other_abelian);
  CHECK(r.central_quotient_shape->order == 16);
  CHECK(r.central_quotient_shape->abelian_type == std::vector<unsigned>{2, 1, 1});

  CHECK(classify_block_case(desc('D', 6, 7, false, CentralizerLabel::quasi_isolated_nontoral)).label ==
        CaseLabel::excluded);
  CHECK(classify_block_case(desc('D', 6, 3, true, CentralizerLabel::quasi_isolated_nontoral)).label ==
        CaseLabel::excluded);
}

TEST_CASE("case routing for the exceptional families") {
  auto r = classify_block_case(desc('E', 7, 3, false, CentralizerLabel::unipotent));
  CHECK(r.label == CaseLabel::case_ii);
  CHECK(r.defect_shape->label == matgrp::ShapeLabel::dihedral);
  CHECK(r.defect_shape->order == 8);
  CHECK(r.central_quotient_shape->label == matgrp::ShapeLabel::klein_four);

  CHECK(classify_block_case(desc('E', 8, 3, false, CentralizerLabel::quasi_isolated_nontoral)).label ==
        CaseLabel::case_iv);

  for (char f : {'E', 'F', 'G'}) {
    const int n = (f == 'E') ? 6 : (f == 'F') ? 4 : 2;
    r = classify_block_case(desc(f, n, 3, false, CentralizerLabel::unipotent));
    CHECK(r.label == CaseLabel::case_i);
    CHECK(r.defect_shape->label == matgrp::ShapeLabel::trivial);
  }
}

TEST_CASE("toral centralizers and rejected inputs") {
  CHECK(classify_block_case(desc('A', 4, 3, false, CentralizerLabel::toral_connected)).label ==
        CaseLabel::nilpotent_covered);
  CHECK(classify_block_case(desc('E', 6, 3, false, CentralizerLabel::toral_disconnected)).label ==
        CaseLabel::nilpotent_covered);
  CHECK(classify_block_case(desc('B', 3, 3, false, CentralizerLabel::toral_disconnected)).label ==
        CaseLabel::excluded);
  CHECK(classify_block_case(desc('A', 6, 3, false, CentralizerLabel::unipotent)).label ==
        CaseLabel::excluded);

  CHECK_THROWS_AS(classify_block_case(desc('A', 5, 4, false, CentralizerLabel::quasi_isolated_nontoral)),
                  std::invalid_argument);  // q must be an odd prime power
  CHECK_THROWS_AS(classify_block_case(desc('B', 3, 3, true, CentralizerLabel::unipotent)),
                  std::invalid_argument);  // no twisted form in this family
}

TEST_CASE("rank-2 source algebra classes") {
  using S = std::vector<std::string>;
  CHECK(morita_class_rank2(grp({2, 1}), 1) == S{"OD"});
  CHECK(morita_class_rank2(grp({1, 1}), 3) ==
        S{"OD", "OA4", "OA5_principal_block"});
  CHECK(morita_class_rank2(grp({2, 2}), 3) == S{"OD_rtimes_C3"});
  CHECK(morita_class_rank2(grp({4, 4}), 3) == S{"OD_rtimes_C3"});
  CHECK_THROWS_AS(morita_class_rank2(grp({2, 1}), 3), std::invalid_argument);
}
