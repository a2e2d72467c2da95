#include <doctest.h>

#include "blockcheck/matgrp.hpp"

using namespace blockcheck::matgrp;

TEST_CASE("field tables satisfy the field axioms") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u}) {
    const Gf& f = Gf::get(q);
    CAPTURE(q);
    REQUIRE(f.q() == q);
    for (unsigned a = 0; a < q; ++a) {
      const auto x = static_cast<std::uint8_t>(a);
      CHECK(f.add(x, 0) == x);
      CHECK(f.mul(x, 1) == x);
      CHECK(f.add(x, f.neg(x)) == 0);
      if (a != 0) CHECK(f.mul(x, f.inv(x)) == 1);
      for (unsigned b = 0; b < q; ++b) {
        const auto y = static_cast<std::uint8_t>(b);
        CHECK(f.add(x, y) == f.add(y, x));
        CHECK(f.mul(x, y) == f.mul(y, x));
      }
    }
  }
  CHECK_THROWS_AS(Gf::get(6), std::invalid_argument);
  CHECK_THROWS_AS(Gf::get(33), std::invalid_argument);
}

TEST_CASE("matrix inverse round-trips and orders divide the group order") {
  const Gf& f = Gf::get(7);
  (void)f;
  Mat m = Mat::identity(2, 7);
  m.at(0, 1) = 3;
  m.at(1, 0) = 2;
  m.at(1, 1) = 1;  // det = 1 - 6 = 2 mod 7, invertible
  const Mat mi = mat_inverse(m);
  CHECK(mat_mul(m, mi) == Mat::identity(2, 7));
  CHECK(mat_mul(mi, m) == Mat::identity(2, 7));
  CHECK(mat_order(Mat::identity(3, 5)) == 1);

  Mat s = Mat::identity(2, 7);
  s.at(1, 1) = 0;
  s.at(0, 0) = 0;  // zero matrix block: singular
  CHECK_THROWS_AS(mat_inverse(s), std::domain_error);
}

TEST_CASE("special linear group orders and sylow shapes, small fields") {
  const auto g3 = enumerate_sl2(3);
  CHECK(g3.order() == 24);
  CHECK(g3.contains(Mat::identity(2, 3)));
  const auto s3 = sylow2(g3);
  CHECK(s3.shape.label == ShapeLabel::quaternion);
  CHECK(s3.shape.order == 8);
  CHECK(central_quotient_sylow2_shape(g3).label == ShapeLabel::klein_four);

  const auto g2 = enumerate_sl2(2);
  CHECK(g2.order() == 6);
  CHECK(sylow2(g2).shape.label == ShapeLabel::cyclic);
  CHECK(sylow2(g2).shape.order == 2);

  const auto g7 = enumerate_sl2(7);
  CHECK(g7.order() == 336);
  CHECK(sylow2(g7).shape.label == ShapeLabel::quaternion);
  CHECK(sylow2(g7).shape.order == 16);
  CHECK(central_quotient_sylow2_shape(g7).label == ShapeLabel::dihedral);

  const auto g4 = enumerate_sl2(4);
  CHECK(g4.order() == 60);
  CHECK(sylow2(g4).shape.label == ShapeLabel::klein_four);

  CHECK(element_order_spectrum(g3) == std::set<unsigned>{1, 2, 3, 4, 6});
}

TEST_CASE("general linear group enumeration and caps") {
  CHECK(enumerate_gl(2, 2).order() == 6);
  CHECK(enumerate_gl(2, 3).order() == 48);
  CHECK(enumerate_gl(3, 2).order() == 168);
  CHECK_THROWS_AS(enumerate_gl(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_gl(4, 5), std::invalid_argument);
}

TEST_CASE("order-15 maximality certificate in GL_4(2)") {
  const auto cert = verify_c15_maximal_odd();
  CHECK(cert.group_order == 20160);
  CHECK(cert.spectrum == std::set<unsigned>{1, 2, 3, 4, 5, 6, 7, 15});
  CHECK(cert.order15_elements > 0);
  CHECK(cert.centralizers_all_order_15);
  CHECK(cert.random_closures_consistent);
  CHECK(cert.certified());
}

TEST_CASE("two-torus rank from odd multiplicity compositions") {
  CHECK(diagonal_two_torus_rank({1, 1, 1}, false) == 2);   // n = 3 odd
  CHECK(diagonal_two_torus_rank({3}, false) == 0);         // single part
  CHECK(diagonal_two_torus_rank({1, 1}, true) == 0);       // n = 2 even
  CHECK(diagonal_two_torus_rank({1, 1, 1, 1}, true) == 2); // n = 4 even
  CHECK(diagonal_two_torus_rank({5, 1}, true) == 0);
  CHECK(diagonal_two_torus_rank({3, 1, 1}, false) == 2);
  CHECK(diagonal_two_torus_rank({1, 3, 5, 3}, true) == 2);

  CHECK_THROWS_AS(diagonal_two_torus_rank({}, false), std::invalid_argument);
  CHECK_THROWS_AS(diagonal_two_torus_rank({2}, true), std::invalid_argument);
  CHECK_THROWS_AS(diagonal_two_torus_rank({1, 1}, false), std::invalid_argument);
  CHECK_THROWS_AS(diagonal_two_torus_rank({13}, false), std::invalid_argument);
}

TEST_CASE("eigenspace permutation bounds") {
  const auto b5 = eigenspace_permutation_bound(5);
  CHECK(b5.bound == 120);
  CHECK(b5.element_orders == std::set<unsigned>{1, 2, 3, 4, 5, 6});
  CHECK_FALSE(b5.has_order_divisible_by_15);

  const auto b6 = eigenspace_permutation_bound(6);
  CHECK(b6.bound == 720);
  CHECK(b6.element_orders == std::set<unsigned>{1, 2, 3, 4, 5, 6});
  CHECK_FALSE(b6.has_order_divisible_by_15);

  const auto b8 = eigenspace_permutation_bound(8);
  CHECK(b8.bound == 40320);
  CHECK(b8.element_orders.count(15) == 1);
  CHECK(b8.has_order_divisible_by_15);
}
