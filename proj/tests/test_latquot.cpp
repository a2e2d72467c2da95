#include <doctest.h>

#include "blockcheck/latquot.hpp"

using namespace blockcheck;
using namespace blockcheck::latquot;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

bool is_diag_of(const SNFResult& s, const IntMatrix& m) {
  const IntMatrix p = s.u * m * s.v;
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = 0; c < p.cols(); ++c) {
      const Int want = (r == c && r < s.d.size()) ? s.d[r] : Int(0);
      if (p.at(r, c) != want) return false;
    }
  return true;
}

rootsys::RootSystem rs(char f, int n) {
  return rootsys::build_root_system(rootsys::make_lie_type(f, n));
}

}  // namespace

TEST_CASE("determinant on fixed matrices") {
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(determinant(from_rows({{2, -1}, {-1, 2}})) == 3);
  CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(determinant(from_rows({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}})) == -90);
  CHECK_THROWS_AS(determinant(from_rows({{1, 2}})), std::invalid_argument);
}

TEST_CASE("smith normal form: transforms are unimodular, factors divide") {
  const std::vector<IntMatrix> battery = {
      from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}),
      from_rows({{6, 4}, {4, 6}}),
      from_rows({{0, 0}, {0, 0}}),
      from_rows({{1, 0, 0}, {0, 1, 0}}),
      from_rows({{5}, {10}, {15}}),
      from_rows({{-3, 6}, {9, -12}}),
  };
  for (const auto& m : battery) {
    const auto s = smith_normal_form(m);
    REQUIRE(s.d.size() == std::min(m.rows(), m.cols()));
    CHECK(is_diag_of(s, m));
    Int du = determinant(s.u);
    Int dv = determinant(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (std::size_t i = 0; i + 1 < s.d.size(); ++i) {
      CHECK(s.d[i] >= 0);
      if (s.d[i] != 0) CHECK(s.d[i + 1] % s.d[i] == 0);
      if (s.d[i] == 0) CHECK(s.d[i + 1] == 0);
    }
  }
}

TEST_CASE("smith normal form on known inputs") {
  const auto s = smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
  CHECK(s.d == std::vector<Int>{2, 2, 156});
  const auto t = smith_normal_form(from_rows({{6, 4}, {4, 6}}));
  CHECK(t.d == std::vector<Int>{2, 10});
}

TEST_CASE("minor-gcd factors agree with the normal form") {
  const std::vector<IntMatrix> battery = {
      from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}),
      from_rows({{6, 4}, {4, 6}}),
      from_rows({{2, 0}, {0, 2}, {1, 1}}),
      from_rows({{4, 2, 2}, {2, 4, 2}}),
  };
  for (const auto& m : battery) {
    const auto s = smith_normal_form(m);
    std::vector<Int> nontrivial;
    for (const auto& d : s.d)
      if (d > 1) nontrivial.push_back(d);
    CHECK(minor_gcd_invariant_factors(m) == nontrivial);
  }
}

TEST_CASE("subset pairing matrix lists simple roots in the weight basis") {
  const auto c3 = rs('C', 3);
  const auto m = subset_pairing_matrix(c3, centralj::make_subset({1, 3}, 3));
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 2);
  // column j holds <alpha_j, alpha_i^vee> for i = 1..3
  CHECK(m.at(0, 0) == 2);
  CHECK(m.at(1, 0) == -1);
  CHECK(m.at(2, 0) == 0);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(1, 1) == -2);
  CHECK(m.at(2, 1) == 2);
}

TEST_CASE("weight-lattice quotients by distinguished subsets") {
  auto q = quotient_invariants(rs('A', 1), centralj::make_subset({1}, 1));
  CHECK(q.invariant_factors == std::vector<Int>{2});
  CHECK(q.free_rank == 0);

  q = quotient_invariants(rs('A', 3), centralj::make_subset({1, 3}, 3));
  CHECK(q.invariant_factors == std::vector<Int>{2});
  CHECK(q.free_rank == 1);

  q = quotient_invariants(rs('D', 4), centralj::make_subset({3, 4}, 4));
  CHECK(q.invariant_factors == std::vector<Int>{2});
  CHECK(q.free_rank == 2);

  q = quotient_invariants(rs('E', 7), centralj::make_subset({1, 2, 4}, 7));
  CHECK(q.invariant_factors == std::vector<Int>{2});
  CHECK(q.free_rank == 4);

  // B_n with the short-root singleton stays torsion-free
  for (int n = 2; n <= 6; ++n) {
    q = quotient_invariants(rs('B', n), centralj::make_subset({n}, n));
    CHECK(q.torsion_free);
    CHECK(q.free_rank == n - 1);
    CHECK(center_connected(rs('B', n), centralj::make_subset({n}, n)));
  }

  // even symplectic rank, odd-index subset
  q = quotient_invariants(rs('C', 4), centralj::make_subset({1, 3}, 4));
  CHECK(q.torsion_free);
  CHECK(q.free_rank == 2);

  // odd symplectic rank picks up 2-torsion instead
  q = quotient_invariants(rs('C', 3), centralj::make_subset({1, 3}, 3));
  CHECK(q.invariant_factors == std::vector<Int>{2});
  CHECK_FALSE(center_connected(rs('C', 3), centralj::make_subset({1, 3}, 3)));
}

TEST_CASE("quotient by the full simple-root span has the fundamental group order") {
  struct Row {
    char f;
    int n;
    std::vector<Int> factors;
  };
  const Row rows[] = {
      {'A', 4, {5}}, {'A', 7, {8}},    {'B', 5, {2}}, {'C', 5, {2}},
      {'D', 5, {4}}, {'D', 6, {2, 2}}, {'E', 6, {3}}, {'E', 7, {2}},
      {'E', 8, {}},  {'F', 4, {}},     {'G', 2, {}},
  };
  for (const auto& r : rows) {
    std::vector<int> all;
    for (int i = 1; i <= r.n; ++i) all.push_back(i);
    const auto q = quotient_invariants(rs(r.f, r.n), centralj::make_subset(all, r.n));
    CAPTURE(r.f);
    CAPTURE(r.n);
    CHECK(q.invariant_factors == r.factors);
    CHECK(q.free_rank == 0);
  }
}
