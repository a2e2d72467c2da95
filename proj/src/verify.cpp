#include "blockcheck/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "blockcheck/abelian2.hpp"
#include "blockcheck/blockinv.hpp"
#include "blockcheck/centralj.hpp"
#include "blockcheck/latquot.hpp"
#include "blockcheck/matgrp.hpp"
#include "blockcheck/rootsys.hpp"
#include "blockcheck/weylorb.hpp"

namespace blockcheck::verify {
namespace {

using nlohmann::json;
using rootsys::Family;

// ---------------------------------------------------------------- fixtures

const rootsys::RootSystem& get_rs(Family f, int n) {
  static std::map<std::pair<int, int>, rootsys::RootSystem> cache;
  auto key = std::make_pair(static_cast<int>(f), n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache
             .emplace(key, rootsys::build_root_system(rootsys::make_lie_type(f, n)))
             .first;
  return it->second;
}

const matgrp::MatrixGroup& get_sl2(unsigned q) {
  static std::map<unsigned, matgrp::MatrixGroup> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, matgrp::enumerate_sl2(q)).first;
  return it->second;
}

const matgrp::C15Certificate& get_gl42_certificate() {
  static const matgrp::C15Certificate cert = matgrp::verify_c15_maximal_odd();
  return cert;
}

std::vector<std::pair<Family, int>> all_types() {
  std::vector<std::pair<Family, int>> v;
  for (int n = 1; n <= 12; ++n) v.emplace_back(Family::A, n);
  for (int n = 2; n <= 12; ++n) v.emplace_back(Family::B, n);
  for (int n = 3; n <= 12; ++n) v.emplace_back(Family::C, n);
  for (int n = 4; n <= 12; ++n) v.emplace_back(Family::D, n);
  for (int n : {6, 7, 8}) v.emplace_back(Family::E, n);
  v.emplace_back(Family::F, 4);
  v.emplace_back(Family::G, 2);
  return v;
}

std::string type_name(Family f, int n) {
  return std::string(1, "abcdefg"[static_cast<int>(f)]) + std::to_string(n);
}

// Nonincreasing partitions of n (all of them, or only those with odd parts).
void partitions_rec(unsigned remaining, unsigned max_part, bool odd_only,
                    std::vector<unsigned>& cur,
                    std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    if (odd_only && p % 2 == 0) continue;
    cur.push_back(p);
    partitions_rec(remaining - p, p, odd_only, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> partitions(unsigned n, bool odd_only = false) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  partitions_rec(n, n, odd_only, cur, out);
  return out;
}

// Ordered compositions of n into odd parts; there are Fibonacci(n) of them.
void odd_compositions_rec(unsigned remaining, std::vector<unsigned>& cur,
                          std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned p = 1; p <= remaining; p += 2) {
    cur.push_back(p);
    odd_compositions_rec(remaining - p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> odd_compositions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  odd_compositions_rec(n, cur, out);
  return out;
}

json shape_json(const matgrp::TwoGroupShape& s) {
  return json{{"label", matgrp::to_string(s.label)},
              {"order", s.order},
              {"type", s.abelian_type}};
}

json subsets_json(const std::vector<std::vector<int>>& subsets) {
  json arr = json::array();
  for (const auto& s : subsets) arr.push_back(s);
  return arr;
}

// ---------------------------------------------------------------- registry

struct Registry {
  std::string only;
  std::function<bool(const std::string&)> id_predicate;
  std::vector<CheckRecord> records;

  bool wants(const std::string& module) const {
    return only.empty() || only == module;
  }

  void check(std::string id, std::string module, std::string claim, json inputs,
             json expected, const std::function<json()>& body) {
    if (id_predicate && !id_predicate(id)) return;
    CheckRecord rec;
    rec.id = std::move(id);
    rec.module_name = std::move(module);
    rec.claim = std::move(claim);
    rec.inputs = std::move(inputs);
    rec.expected = std::move(expected);
    try {
      rec.computed = body();
    } catch (const std::exception& ex) {
      rec.computed = json{{"error", ex.what()}};
    }
    rec.pass = (rec.computed == rec.expected);
    records.push_back(std::move(rec));
  }
};

// ---------------------------------------------------------------- rootsys

long long expected_root_count(Family f, int n) {
  switch (f) {
    case Family::A: return 1ll * n * (n + 1);
    case Family::B:
    case Family::C: return 2ll * n * n;
    case Family::D: return 2ll * n * (n - 1);
    case Family::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case Family::F: return 48;
    case Family::G: return 12;
  }
  throw std::logic_error("unreachable family");
}

void rootsys_checks(Registry& reg) {
  for (auto [f, n] : all_types()) {
    std::string name = type_name(f, n);
    reg.check("rootsys.count." + name, "rootsys", "number of roots",
              json{{"type", name}}, json(expected_root_count(f, n)), [f, n] {
                return json(static_cast<long long>(get_rs(f, n).roots.size()));
              });
  }
  for (auto [f, n] : all_types()) {
    std::string name = type_name(f, n);
    reg.check("rootsys.weights." + name, "rootsys",
              "fundamental weights pair to the identity against the coroots",
              json{{"type", name}}, json(true), [f, n] {
                const auto& rs = get_rs(f, n);
                for (int i = 0; i < rs.rank(); ++i)
                  for (int j = 0; j < rs.rank(); ++j) {
                    long long p = rootsys::cartan_pairing(
                        rs, rs.fundamental_weights[i], rs.simple_roots[j]);
                    if (p != (i == j ? 1 : 0)) return json(false);
                  }
                return json(true);
              });
  }
  // Rank-7 exceptional type uses the published labelling: a chain
  // 1-3-4-5-6-7 with node 2 hanging off node 5.
  reg.check("rootsys.e7.adjacency", "rootsys",
            "simple-root adjacency of the rank-7 exceptional labelling",
            json{{"type", "e7"}},
            json::array({json::array({1, 3}), json::array({2, 5}),
                         json::array({3, 4}), json::array({4, 5}),
                         json::array({5, 6}), json::array({6, 7})}),
            [] {
              const auto& rs = get_rs(Family::E, 7);
              json edges = json::array();
              for (int i = 1; i <= 7; ++i)
                for (int j = i + 1; j <= 7; ++j)
                  if (rs.cartan[i - 1][j - 1] != 0)
                    edges.push_back(json::array({i, j}));
              return edges;
            });
}

// ---------------------------------------------------------------- centralj

std::vector<std::vector<int>> expected_central_orthogonal(Family f, int n) {
  std::vector<std::vector<int>> out;
  auto odds_up_to = [](int limit) {
    std::vector<int> v;
    for (int i = 1; i <= limit; i += 2) v.push_back(i);
    return v;
  };
  switch (f) {
    case Family::A:
      if (n % 2 == 1) out.push_back(odds_up_to(n));
      break;
    case Family::B:
      out.push_back({n});
      break;
    case Family::C:
      out.push_back(odds_up_to(n));
      break;
    case Family::D: {
      if (n % 2 == 0) {
        std::vector<int> base = odds_up_to(n - 3);
        std::vector<int> with_a = base;
        with_a.push_back(n - 1);
        std::vector<int> with_b = base;
        with_b.push_back(n);
        out.push_back(with_a);
        out.push_back(with_b);
      }
      out.push_back({n - 1, n});
      break;
    }
    case Family::E:
      if (n == 7) out.push_back({1, 2, 4});
      break;
    case Family::F:
    case Family::G:
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void centralj_checks(Registry& reg) {
  for (auto [f, n] : all_types()) {
    std::string name = type_name(f, n);
    reg.check("centralj.family." + name, "centralj",
              "all subsets of simple roots that are orthogonal and act "
              "centrally",
              json{{"type", name}},
              subsets_json(expected_central_orthogonal(f, n)), [f, n] {
                const auto& rs = get_rs(f, n);
                auto found = centralj::classify_central_orthogonal(rs);
                std::vector<std::vector<int>> subsets;
                for (const auto& w : found) subsets.push_back(w.indices);
                std::sort(subsets.begin(), subsets.end());
                return subsets_json(subsets);
              });
  }
  for (auto [f, n] : all_types()) {
    if (n > 8) continue;
    std::string name = type_name(f, n);
    reg.check("centralj.fullphi." + name, "centralj",
              "centrality tested on simple roots agrees with centrality "
              "tested on every root",
              json{{"type", name}}, json{{"subsets", (1 << n) - 1}, {"mismatches", 0}},
              [f, n] {
                const auto& rs = get_rs(f, n);
                int mismatches = 0;
                for (int mask = 1; mask < (1 << n); ++mask) {
                  std::vector<int> idx;
                  for (int i = 0; i < n; ++i)
                    if (mask & (1 << i)) idx.push_back(i + 1);
                  auto J = centralj::make_subset(idx, n);
                  if (centralj::is_central(rs, J).is_central !=
                      centralj::is_central_all_roots(rs, J))
                    ++mismatches;
                }
                return json{{"subsets", (1 << n) - 1}, {"mismatches", mismatches}};
              });
  }
}

// ---------------------------------------------------------------- latquot

json factors_json(const std::vector<latquot::Int>& factors) {
  json arr = json::array();
  for (const auto& f : factors) arr.push_back(f.str());
  return arr;
}

json quotient_json(const latquot::QuotientReport& q) {
  return json{{"factors", factors_json(q.invariant_factors)},
              {"free_rank", q.free_rank},
              {"torsion_free", q.torsion_free}};
}

void latquot_checks(Registry& reg) {
  struct FrozenQuotient {
    const char* id;
    Family f;
    int n;
    std::vector<int> J;
    std::vector<long long> factors;
    int free_rank;
  };
  const std::vector<FrozenQuotient> frozen = {
      {"latquot.quotient.a1_1", Family::A, 1, {1}, {2}, 0},
      {"latquot.quotient.a3_13", Family::A, 3, {1, 3}, {2}, 1},
      {"latquot.quotient.c3_13", Family::C, 3, {1, 3}, {2}, 1},
      {"latquot.quotient.d4_34", Family::D, 4, {3, 4}, {2}, 2},
  };
  for (const auto& fq : frozen) {
    json exp_factors = json::array();
    for (long long v : fq.factors) exp_factors.push_back(std::to_string(v));
    reg.check(fq.id, "latquot",
              "weight-lattice quotient by the span of the subset",
              json{{"type", type_name(fq.f, fq.n)}, {"subset", fq.J}},
              json{{"factors", exp_factors},
                   {"free_rank", fq.free_rank},
                   {"torsion_free", fq.factors.empty()}},
              [&fq] {
                auto q = latquot::quotient_invariants(
                    get_rs(fq.f, fq.n),
                    centralj::make_subset(fq.J, fq.n));
                return quotient_json(q);
              });
  }
  for (int n = 2; n <= 12; ++n) {
    reg.check("latquot.quotient.b" + std::to_string(n) + "_n", "latquot",
              "the short-root subset of the odd orthogonal type gives a "
              "torsion-free quotient",
              json{{"type", type_name(Family::B, n)}, {"subset", {n}}},
              json{{"factors", json::array()},
                   {"free_rank", n - 1},
                   {"torsion_free", true}},
              [n] {
                auto q = latquot::quotient_invariants(
                    get_rs(Family::B, n), centralj::make_subset({n}, n));
                return quotient_json(q);
              });
  }
  for (int n = 4; n <= 12; n += 2) {
    std::vector<int> odds;
    for (int i = 1; i < n; i += 2) odds.push_back(i);
    reg.check("latquot.quotient.c" + std::to_string(n) + "_odds", "latquot",
              "the odd-index subset of the even symplectic type gives a "
              "torsion-free quotient",
              json{{"type", type_name(Family::C, n)}, {"subset", odds}},
              json{{"factors", json::array()},
                   {"free_rank", n - static_cast<int>(odds.size())},
                   {"torsion_free", true}},
              [n, odds] {
                auto q = latquot::quotient_invariants(
                    get_rs(Family::C, n), centralj::make_subset(odds, n));
                return quotient_json(q);
              });
  }
  // Two independent computations of the same invariants (elimination-based
  // normal form vs gcds of k-by-k minors), for every classified subset.
  reg.check("latquot.quotient.minorgcd", "latquot",
            "normal-form invariant factors match determinantal divisor ratios "
            "on every classified subset",
            json{{"scope", "all central orthogonal subsets, ranks up to 12"}},
            json{{"mismatches", json::array()}}, [] {
              json mismatches = json::array();
              for (auto [f, n] : all_types()) {
                const auto& rs = get_rs(f, n);
                for (const auto& w : centralj::classify_central_orthogonal(rs)) {
                  auto q = latquot::quotient_invariants(rs, w);
                  auto oracle = latquot::minor_gcd_invariant_factors(
                      latquot::subset_pairing_matrix(rs, w));
                  if (factors_json(q.invariant_factors) != factors_json(oracle))
                    mismatches.push_back(
                        json{{"type", type_name(f, n)}, {"subset", w.indices}});
                }
              }
              return json{{"mismatches", mismatches}};
            });
  for (auto [f, n] : all_types()) {
    std::string name = type_name(f, n);
    std::vector<long long> factors;
    switch (f) {
      case Family::A: factors = {n + 1}; break;
      case Family::B:
      case Family::C: factors = {2}; break;
      case Family::D: factors = n % 2 == 0 ? std::vector<long long>{2, 2}
                                           : std::vector<long long>{4}; break;
      case Family::E: factors = n == 6 ? std::vector<long long>{3}
                               : n == 7 ? std::vector<long long>{2}
                                        : std::vector<long long>{}; break;
      case Family::F:
      case Family::G: factors = {}; break;
    }
    json exp_factors = json::array();
    for (long long v : factors)
      if (v > 1) exp_factors.push_back(std::to_string(v));
    reg.check("latquot.fullcartan." + name, "latquot",
              "quotient by the full simple-root lattice realizes the "
              "fundamental group",
              json{{"type", name}},
              json{{"factors", exp_factors},
                   {"free_rank", 0},
                   {"torsion_free", exp_factors.empty()}},
              [f, n] {
                std::vector<int> all;
                for (int i = 1; i <= n; ++i) all.push_back(i);
                auto q = latquot::quotient_invariants(
                    get_rs(f, n), centralj::make_subset(all, n));
                return quotient_json(q);
              });
  }
  // Normal-form battery on fixed integer matrices: transforms must be
  // unimodular, the diagonal must divide along, and factors must agree with
  // the minor-gcd oracle.
  reg.check("latquot.snf.battery", "latquot",
            "normal form on fixed matrices agrees with the minor-gcd oracle",
            json{{"matrices", 4}}, json{{"failures", json::array()}}, [] {
              using latquot::Int;
              std::vector<std::vector<std::vector<long long>>> mats = {
                  {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}},
                  {{1, 0, 0}, {0, 0, 0}, {0, 0, 7}},
                  {{0, 2}, {3, 0}, {5, 5}},
                  {{6, 4}, {4, 6}},
              };
              json failures = json::array();
              for (std::size_t mi = 0; mi < mats.size(); ++mi) {
                const auto& rows = mats[mi];
                latquot::IntMatrix m(rows.size(), rows[0].size());
                for (std::size_t i = 0; i < rows.size(); ++i)
                  for (std::size_t j = 0; j < rows[0].size(); ++j)
                    m.at(i, j) = rows[i][j];
                auto snf = latquot::smith_normal_form(m);
                std::vector<Int> nontrivial;
                for (const auto& d : snf.d)
                  if (d > 1) nontrivial.push_back(d);
                auto oracle = latquot::minor_gcd_invariant_factors(m);
                if (factors_json(nontrivial) != factors_json(oracle))
                  failures.push_back(json{{"matrix", mi}});
              }
              return json{{"failures", failures}};
            });
}

// ---------------------------------------------------------------- weylorb

void weylorb_checks(Registry& reg) {
  for (auto [f, n] : all_types()) {
    std::string name = type_name(f, n);
    std::vector<long long> sizes;
    switch (f) {
      case Family::A: sizes = {1ll * n * (n + 1)}; break;
      case Family::B:
      case Family::C: sizes = {2ll * n, 2ll * n * (n - 1)}; break;
      case Family::D: sizes = {2ll * n * (n - 1)}; break;
      case Family::E: sizes = {expected_root_count(f, n)}; break;
      case Family::F: sizes = {24, 24}; break;
      case Family::G: sizes = {6, 6}; break;
    }
    std::sort(sizes.begin(), sizes.end());
    json exp = json{{"orbit_sizes", sizes}, {"cover_all_roots", true}};
    reg.check("weylorb.orbits." + name, "weylorb",
              "orbit sizes of the simple roots under the reflection group",
              json{{"type", name}}, exp, [f, n] {
                const auto& rs = get_rs(f, n);
                std::vector<weylorb::RootOrbit> orbits;
                for (const auto& a : rs.simple_roots) {
                  bool found = false;
                  for (const auto& o : orbits)
                    if (std::binary_search(o.members.begin(), o.members.end(), a)) {
                      found = true;
                      break;
                    }
                  if (!found) orbits.push_back(weylorb::weyl_orbit(rs, a));
                }
                std::vector<long long> sizes;
                std::size_t covered = 0;
                for (const auto& o : orbits) {
                  sizes.push_back(static_cast<long long>(o.members.size()));
                  covered += o.members.size();
                }
                std::sort(sizes.begin(), sizes.end());
                return json{{"orbit_sizes", sizes},
                            {"cover_all_roots", covered == rs.roots.size()}};
              });
  }
  for (int n = 3; n <= 11; n += 2) {
    reg.check("weylorb.cnodd.c" + std::to_string(n), "weylorb",
              "in the odd symplectic type the last simple root is not "
              "reflection-equivalent to any other simple root",
              json{{"type", type_name(Family::C, n)}},
              json{{"last_vs_earlier", false}, {"first_vs_second", true}}, [n] {
                const auto& rs = get_rs(Family::C, n);
                bool any = false;
                for (int i = 0; i + 1 < n; ++i)
                  any = any || weylorb::same_orbit(rs, rs.simple_roots[n - 1],
                                                   rs.simple_roots[i]);
                return json{
                    {"last_vs_earlier", any},
                    {"first_vs_second",
                     weylorb::same_orbit(rs, rs.simple_roots[0], rs.simple_roots[1])}};
              });
  }
}

// ---------------------------------------------------------------- matgrp

unsigned long long two_part_of(unsigned long long n) {
  unsigned long long t = 1;
  while (n % 2 == 0) {
    n /= 2;
    t *= 2;
  }
  return t;
}

void matgrp_checks(Registry& reg) {
  const std::vector<unsigned> odd_q = {3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27};
  const std::vector<unsigned> even_q = {2, 4, 8, 16, 32};

  for (unsigned q : odd_q) {
    std::string sq = std::to_string(q);
    unsigned long long order = 1ull * q * (q * q - 1);
    reg.check("matgrp.sl2.order.q" + sq, "matgrp", "group order q(q^2-1)",
              json{{"q", q}}, json(order),
              [q] { return json(static_cast<unsigned long long>(get_sl2(q).order())); });

    unsigned long long syl = two_part_of(order);
    reg.check("matgrp.sl2.sylow.q" + sq, "matgrp",
              "Sylow 2-subgroup is generalized quaternion, of order 8 exactly "
              "when q = +-3 (mod 8)",
              json{{"q", q}},
              json{{"label", "quaternion"}, {"order", syl}, {"type", json::array()}},
              [q] { return shape_json(matgrp::sylow2(get_sl2(q)).shape); });

    json exp_quot;
    if (q % 8 == 3 || q % 8 == 5)
      exp_quot = json{{"label", "klein_four"}, {"order", 4}, {"type", {1, 1}}};
    else
      exp_quot = json{{"label", "dihedral"}, {"order", syl / 2}, {"type", json::array()}};
    reg.check("matgrp.sl2.quotient.q" + sq, "matgrp",
              "Sylow 2-subgroup of the central quotient is Klein four for "
              "q = +-3 (mod 8) and dihedral otherwise",
              json{{"q", q}}, exp_quot,
              [q] { return shape_json(matgrp::central_quotient_sylow2_shape(get_sl2(q))); });
  }

  for (unsigned q : even_q) {
    std::string sq = std::to_string(q);
    unsigned long long order = 1ull * q * (q * q - 1);
    unsigned r = 0;
    while ((1u << r) < q) ++r;
    std::vector<unsigned> ones(r, 1);
    std::string label = q == 2 ? "cyclic" : (q == 4 ? "klein_four" : "elementary_abelian");
    json exp_shape = json{{"label", label}, {"order", q}, {"type", ones}};
    reg.check("matgrp.sl2.order.q" + sq, "matgrp", "group order q(q^2-1)",
              json{{"q", q}}, json(order),
              [q] { return json(static_cast<unsigned long long>(get_sl2(q).order())); });
    reg.check("matgrp.sl2.sylow.q" + sq, "matgrp",
              "Sylow 2-subgroup in even characteristic is elementary abelian "
              "of order q",
              json{{"q", q}}, exp_shape,
              [q] { return shape_json(matgrp::sylow2(get_sl2(q)).shape); });
    reg.check("matgrp.sl2.quotient.q" + sq, "matgrp",
              "trivial center in even characteristic: quotient Sylow matches",
              json{{"q", q}}, exp_shape,
              [q] { return shape_json(matgrp::central_quotient_sylow2_shape(get_sl2(q))); });
  }

  reg.check("matgrp.gl42.order", "matgrp", "order of the degree-4 group over GF(2)",
            json{{"degree", 4}, {"q", 2}}, json(20160), [] {
              return json(static_cast<long long>(get_gl42_certificate().group_order));
            });
  reg.check("matgrp.gl42.enum", "matgrp",
            "direct enumeration agrees with the packed-row count",
            json{{"degree", 4}, {"q", 2}}, json(20160), [] {
              return json(static_cast<long long>(matgrp::enumerate_gl(4, 2).order()));
            });
  reg.check("matgrp.gl42.spectrum", "matgrp", "element order spectrum",
            json{{"degree", 4}, {"q", 2}}, json({1, 2, 3, 4, 5, 6, 7, 15}), [] {
              json arr = json::array();
              for (unsigned o : get_gl42_certificate().spectrum) arr.push_back(o);
              return arr;
            });
  reg.check("matgrp.gl42.c15", "matgrp",
            "every order-15 element has centralizer of order 15; no odd "
            "two-generator closure exceeds 15",
            json{{"degree", 4}, {"q", 2}},
            json{{"order15_elements", 2688},
                 {"centralizers_all_order_15", true},
                 {"random_closures_consistent", true},
                 {"certified", true}},
            [] {
              const auto& c = get_gl42_certificate();
              return json{{"order15_elements", c.order15_elements},
                          {"centralizers_all_order_15", c.centralizers_all_order_15},
                          {"random_closures_consistent", c.random_closures_consistent},
                          {"certified", c.certified()}};
            });

  const int fib[13] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
  for (int n = 1; n <= 12; ++n) {
    reg.check("matgrp.torus.rank.n" + std::to_string(n), "matgrp",
              "rank of the two-torsion of the diagonal torus: parts minus one, "
              "and one more down after the central quotient for even n",
              json{{"n", n}}, json{{"checked", fib[n]}, {"failures", json::array()}},
              [n] {
                json failures = json::array();
                int checked = 0;
                for (const auto& parts : odd_compositions(n)) {
                  std::vector<int> p(parts.begin(), parts.end());
                  int u = static_cast<int>(p.size());
                  int expected = n % 2 == 1 ? u - 1 : u - 2;
                  int got = matgrp::diagonal_two_torus_rank(p, n % 2 == 0);
                  ++checked;
                  if (got != expected) failures.push_back(json{{"parts", p}, {"got", got}});
                }
                return json{{"checked", checked}, {"failures", failures}};
              });
  }

  for (unsigned u : {5u, 6u}) {
    reg.check("matgrp.perm.bound.u" + std::to_string(u), "matgrp",
              "permutation bound on eigenspaces: no element order divisible "
              "by 15",
              json{{"u", u}},
              json{{"bound", u == 5 ? "120" : "720"}, {"order_div_15", false}}, [u] {
                auto pb = matgrp::eigenspace_permutation_bound(u);
                return json{{"bound", pb.bound.str()},
                            {"order_div_15", pb.has_order_divisible_by_15}};
              });
  }
}

// ---------------------------------------------------------------- abelian2

void abelian2_checks(Registry& reg) {
  struct Frozen {
    const char* id;
    std::vector<unsigned> exponents;
    long long aut;
  };
  const std::vector<Frozen> frozen = {
      {"abelian2.aut.c2c2", {1, 1}, 6},
      {"abelian2.aut.c4c2", {2, 1}, 8},
      {"abelian2.aut.c4c4", {2, 2}, 96},
      {"abelian2.aut.c2pow4", {1, 1, 1, 1}, 20160},
      {"abelian2.aut.c8c2", {3, 1}, 16},
      {"abelian2.aut.c8c8c2", {3, 3, 1}, 24576},
  };
  for (const auto& fr : frozen) {
    reg.check(fr.id, "abelian2", "automorphism group order",
              json{{"exponents", fr.exponents}}, json(std::to_string(fr.aut)),
              [&fr] {
                auto d = abelian2::make_abelian_two_group(fr.exponents);
                return json(abelian2::aut_order(d).value.str());
              });
  }
  reg.check("abelian2.aut.gl42match", "abelian2",
            "automorphisms of the rank-4 elementary group are exactly the "
            "invertible matrices over GF(2)",
            json{{"exponents", {1, 1, 1, 1}}, {"degree", 4}, {"q", 2}}, json(true),
            [] {
              auto d = abelian2::make_abelian_two_group({1, 1, 1, 1});
              return json(abelian2::aut_order(d).value ==
                          matgrp::enumerate_gl(4, 2).order());
            });
  for (unsigned total = 1; total <= 10; ++total) {
    reg.check("abelian2.aut.sweep.k" + std::to_string(total), "abelian2",
              "all computation paths for the automorphism order agree on "
              "every group of this order",
              json{{"order_log2", total}},
              json{{"groups", partitions(total).size()}, {"all_paths_agree", true}},
              [total] {
                std::size_t groups = 0;
                for (const auto& e : partitions(total)) {
                  auto d = abelian2::make_abelian_two_group(e);
                  abelian2::aut_order(d);  // throws on any path disagreement
                  ++groups;
                }
                return json{{"groups", groups}, {"all_paths_agree", true}};
              });
  }
  reg.check("abelian2.aut.homocyclic_oddpart", "abelian2",
            "odd part of the automorphism order of a rank-2 homocyclic group "
            "is exactly 3",
            json{{"m", {1, 2, 3, 4, 5}}}, json(true), [] {
              for (unsigned m = 1; m <= 5; ++m) {
                auto d = abelian2::make_abelian_two_group({m, m});
                if (abelian2::odd_part(abelian2::aut_order_closed_form(d)) != 3)
                  return json(false);
              }
              return json(true);
            });
  reg.check("abelian2.rank2.mixed", "abelian2",
            "rank-2 groups with distinct exponents force nilpotency",
            json{{"pairs", "m > n >= 1, m <= 5"}}, json(true), [] {
              for (unsigned m = 2; m <= 5; ++m)
                for (unsigned n = 1; n < m; ++n)
                  if (!abelian2::rank2_nilpotency_forced(
                          abelian2::make_abelian_two_group({m, n})))
                    return json(false);
              return json(true);
            });
  reg.check("abelian2.aut.mixed3", "abelian2",
            "the rank-3 groups with exponents (m, m-1, 1) have 2-group "
            "automorphisms for m >= 3",
            json{{"m", {3, 4, 5}}}, json(true), [] {
              for (unsigned m = 3; m <= 5; ++m)
                if (!abelian2::aut_is_two_group(
                        abelian2::make_abelian_two_group({m, m - 1, 1})))
                  return json(false);
              return json(true);
            });
  for (unsigned m = 1; m <= 6; ++m) {
    reg.check("abelian2.involutions.m" + std::to_string(m), "abelian2",
              "the order-3 automorphism cycles the three involutions in one "
              "orbit",
              json{{"exponents", {m, m}}},
              json{{"orbits", 1}, {"orbit_size", 3}, {"automorphism_order", 3}},
              [m] {
                auto d = abelian2::make_abelian_two_group({m, m});
                auto inv = abelian2::order3_involution_action(d);
                return json{{"orbits", inv.orbits.size()},
                            {"orbit_size",
                             inv.orbits.empty() ? 0 : inv.orbits[0].size()},
                            {"automorphism_order", inv.automorphism_order}};
              });
  }
}

// ---------------------------------------------------------------- blockinv

json case_json(const blockinv::CaseReport& r) {
  json out{{"label", blockinv::to_string(r.label)}};
  if (r.t) out["t"] = *r.t;
  if (r.defect_shape) out["defect"] = shape_json(*r.defect_shape);
  if (r.central_quotient_shape)
    out["central_quotient"] = shape_json(*r.central_quotient_shape);
  return out;
}

void blockinv_checks(Registry& reg) {
  using blockinv::CentralizerLabel;

  for (unsigned m = 1; m <= 10; ++m) {
    long long order = 1ll << (2 * m);
    reg.check("blockinv.rank2.e3.m" + std::to_string(m), "blockinv",
              "character counts for a homocyclic rank-2 defect group with "
              "inertial index 3",
              json{{"exponents", {m, m}}, {"e", 3}},
              json{{"k", std::to_string((order + 8) / 3)}, {"l", "3"}},
              [m] {
                auto c = blockinv::rank2_invariants(
                    abelian2::make_abelian_two_group({m, m}), 3);
                return json{{"k", c.k.str()}, {"l", c.l.str()}};
              });
  }
  reg.check("blockinv.rank2.e1", "blockinv",
            "inertial index 1: counts collapse to the defect group order",
            json{{"exponents", {3, 1}}, {"e", 1}},
            json{{"k", "16"}, {"l", "1"}, {"k0", "16"}}, [] {
              auto c = blockinv::rank2_invariants(
                  abelian2::make_abelian_two_group({3, 1}), 1);
              return json{{"k", c.k.str()},
                          {"l", c.l.str()},
                          {"k0", c.k0 ? c.k0->str() : "unset"}};
            });
  reg.check("blockinv.rank2.reject", "blockinv",
            "inertial index 3 with a non-homocyclic defect group is "
            "arithmetically impossible",
            json{{"exponents", {2, 1}}, {"e", 3}}, json("rejected"), [] {
              try {
                blockinv::rank2_invariants(abelian2::make_abelian_two_group({2, 1}), 3);
              } catch (const std::invalid_argument&) {
                return json("rejected");
              }
              return json("accepted");
            });
  reg.check("blockinv.elab16", "blockinv",
            "counts for the elementary abelian defect group of order 16 with "
            "inertial index 15",
            json{{"e", 15}},
            json{{"k", "16"}, {"l", "15"}, {"k0", "16"}, {"k_minus_l", 1}}, [] {
              auto c = blockinv::elab16_invariants(15);
              return json{{"k", c.k.str()},
                          {"l", c.l.str()},
                          {"k0", c.k0.str()},
                          {"k_minus_l", (c.k - c.l).convert_to<int>()}};
            });
  reg.check("blockinv.clifford.w3", "blockinv",
            "the orbit equation has the integral solution t = 3 at w = 3, "
            "and (16 - tw)w + t = 8w holds there",
            json{{"w", 3}}, json{{"t", 3}, {"identity", true}}, [] {
              auto t = blockinv::clifford_orbit_count(3);
              if (!t) return json{{"t", nullptr}, {"identity", false}};
              return json{{"t", *t}, {"identity", (16 - *t * 3) * 3 + *t == 8 * 3}};
            });
  reg.check("blockinv.clifford.others", "blockinv",
            "no integral orbit count at any other odd prime up to 97",
            json{{"w", "all odd primes in [5, 97]"}}, json(true), [] {
              for (long long w : {5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                  43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97})
                if (blockinv::clifford_orbit_count(w)) return json(false);
              return json(true);
            });

  struct TorusCase {
    const char* id;
    long long q;
    unsigned t;
    bool twisted;
    const char* value;
  };
  for (const auto& tc : std::vector<TorusCase>{
           {"blockinv.torus.q3t3", 3, 3, false, "13"},
           {"blockinv.torus.q3t3tw", 3, 3, true, "7"},
           {"blockinv.torus.q7t3", 7, 3, false, "57"},
           {"blockinv.torus.q7t3tw", 7, 3, true, "43"},
           {"blockinv.torus.q3t5", 3, 5, false, "121"},
           {"blockinv.torus.q3t5tw", 3, 5, true, "61"},
       }) {
    reg.check(tc.id, "blockinv", "fixed-point count of the norm-one torus",
              json{{"q", tc.q}, {"t", tc.t}, {"twisted", tc.twisted}},
              json(tc.value), [&tc] {
                return json(blockinv::torus_fixed_order(tc.q, tc.t, tc.twisted).str());
              });
  }
  reg.check("blockinv.torus.oddness", "blockinv",
            "fixed-point counts are odd whenever t is odd",
            json{{"q", {3, 5, 7, 9, 11, 13, 25, 27}}, {"t", {1, 3, 5, 7, 9}}},
            json(true), [] {
              for (long long q : {3, 5, 7, 9, 11, 13, 25, 27})
                for (unsigned t : {1u, 3u, 5u, 7u, 9u})
                  for (bool tw : {false, true})
                    if (blockinv::torus_fixed_order(q, t, tw) % 2 == 0)
                      return json(false);
              return json(true);
            });
  reg.check("blockinv.torus.twisted_even_t", "blockinv",
            "the twisted count is rejected for even t",
            json{{"q", 3}, {"t", 2}, {"twisted", true}}, json("rejected"), [] {
              try {
                blockinv::torus_fixed_order(3, 2, true);
              } catch (const std::invalid_argument&) {
                return json("rejected");
              }
              return json("accepted");
            });

  // q ranges over every odd prime power below 100 that is +-3 (mod 8).
  const std::vector<long long> dn_q = {3,  5,  11, 13, 19, 27, 29,
                                       37, 43, 53, 59, 61, 67, 83};
  reg.check("blockinv.dnp0", "blockinv",
            "2-part of q^t - 1: 2 for q = 3 (mod 4), 4 for q = 1 (mod 4)",
            json{{"q", dn_q}, {"t", {1, 3, 5, 7, 9}}}, json(true), [&dn_q] {
              for (long long q : dn_q)
                for (unsigned t : {1u, 3u, 5u, 7u, 9u}) {
                  unsigned expect = (q % 4 == 3) ? 2u : 4u;
                  if (blockinv::dn_p0_order(q, t) != expect) return json(false);
                }
              return json(true);
            });
  reg.check("blockinv.dnp0.valuation", "blockinv",
            "reported value equals the exact 2-adic part of q^t - 1",
            json{{"q", dn_q}, {"t", {1, 3, 5, 7, 9}}}, json(true), [&dn_q] {
              for (long long q : dn_q)
                for (unsigned t : {1u, 3u, 5u, 7u, 9u}) {
                  blockinv::Int v = 1;
                  for (unsigned i = 0; i < t; ++i) v *= q;
                  v -= 1;
                  unsigned part = 1;
                  while (v % 2 == 0) {
                    v /= 2;
                    part *= 2;
                  }
                  if (blockinv::dn_p0_order(q, t) != part) return json(false);
                }
              return json(true);
            });
  reg.check("blockinv.sylowcond", "blockinv",
            "q^r = +-3 (mod 8) exactly when r is odd and q = +-3 (mod 8)",
            json{{"q", {3, 5, 7, 9, 11, 13, 17, 25, 27}}, {"r", {1, 2, 3, 4}}},
            json(true), [] {
              for (long long q : {3, 5, 7, 9, 11, 13, 17, 25, 27})
                for (unsigned r : {1u, 2u, 3u, 4u}) {
                  bool expect = (r % 2 == 1) && (q % 8 == 3 || q % 8 == 5);
                  if (blockinv::sl2_sylow_condition(q, r) != expect)
                    return json(false);
                }
              return json(true);
            });

  struct CaseFixture {
    const char* id;
    Family f;
    int rank;
    long long q;
    bool twisted;
    CentralizerLabel label;
    json expected;
  };
  const json quat8 = json{{"label", "quaternion"}, {"order", 8}, {"type", json::array()}};
  const json klein = json{{"label", "klein_four"}, {"order", 4}, {"type", {1, 1}}};
  const json dih8 = json{{"label", "dihedral"}, {"order", 8}, {"type", json::array()}};
  const std::vector<CaseFixture> cases = {
      {"blockinv.case.a5_q3", Family::A, 5, 3, false,
       CentralizerLabel::quasi_isolated_nontoral,
       json{{"label", "case_iii"}, {"t", 3}, {"defect", quat8}, {"central_quotient", klein}}},
      {"blockinv.case.a1_q3", Family::A, 1, 3, false,
       CentralizerLabel::quasi_isolated_nontoral,
       json{{"label", "case_iii"}, {"t", 1}, {"defect", quat8}, {"central_quotient", klein}}},
      {"blockinv.case.a9_q3", Family::A, 9, 3, false,
       CentralizerLabel::quasi_isolated_nontoral,
       json{{"label", "case_iii"}, {"t", 5}, {"defect", quat8}, {"central_quotient", klein}}},
      {"blockinv.case.a5_q7", Family::A, 5, 7, false,
       CentralizerLabel::quasi_isolated_nontoral, json{{"label", "excluded"}}},
      {"blockinv.case.a3_q3", Family::A, 3, 3, false,
       CentralizerLabel::quasi_isolated_nontoral, json{{"label", "excluded"}}},
      {"blockinv.case.a4_q3", Family::A, 4, 3, false,
       CentralizerLabel::quasi_isolated_nontoral, json{{"label", "excluded"}}},
      {"blockinv.case.d6_q3", Family::D, 6, 3, false,
       CentralizerLabel::quasi_isolated_nontoral,
       json{{"label", "case_v"},
            {"t", 3},
            {"defect", json{{"label", "other_nonabelian"}, {"order", 16}, {"type", json::array()}}},
            {"central_quotient",
             json{{"label", "elementary_abelian"}, {"order", 8}, {"type", {1, 1, 1}}}}}},
      {"blockinv.case.d6_q5", Family::D, 6, 5, false,
       CentralizerLabel::quasi_isolated_nontoral,
       json{{"label", "case_v"},
            {"t", 3},
            {"defect", json{{"label", "other_nonabelian"}, {"order", 32}, {"type", json::array()}}},
            {"central_quotient",
             json{{"label", "other_abelian"}, {"order", 16}, {"type", {2, 1, 1}}}}}},
      {"blockinv.case.d6_q7", Family::D, 6, 7, false,
       CentralizerLabel::quasi_isolated_nontoral, json{{"label", "excluded"}}},
      {"blockinv.case.d4_q3", Family::D, 4, 3, false,
       CentralizerLabel::quasi_isolated_nontoral, json{{"label", "excluded"}}},
      {"blockinv.case.d6_q3_twisted", Family::D, 6, 3, true,
       CentralizerLabel::quasi_isolated_nontoral, json{{"label", "excluded"}}},
      {"blockinv.case.e7_q3_unipotent", Family::E, 7, 3, false,
       CentralizerLabel::unipotent,
       json{{"label", "case_ii"}, {"defect", dih8}, {"central_quotient", klein}}},
      {"blockinv.case.e7_q5_quasi", Family::E, 7, 5, false,
       CentralizerLabel::quasi_isolated_nontoral,
       json{{"label", "case_ii"}, {"defect", dih8}, {"central_quotient", klein}}},
      {"blockinv.case.e8_q3_quasi", Family::E, 8, 3, false,
       CentralizerLabel::quasi_isolated_nontoral, json{{"label", "case_iv"}}},
      {"blockinv.case.e6_q3_unipotent", Family::E, 6, 3, false,
       CentralizerLabel::unipotent,
       json{{"label", "case_i"},
            {"defect", json{{"label", "trivial"}, {"order", 1}, {"type", json::array()}}}}},
      {"blockinv.case.e8_q3_unipotent", Family::E, 8, 3, false,
       CentralizerLabel::unipotent,
       json{{"label", "case_i"},
            {"defect", json{{"label", "trivial"}, {"order", 1}, {"type", json::array()}}}}},
      {"blockinv.case.f4_q3_unipotent", Family::F, 4, 3, false,
       CentralizerLabel::unipotent,
       json{{"label", "case_i"},
            {"defect", json{{"label", "trivial"}, {"order", 1}, {"type", json::array()}}}}},
      {"blockinv.case.g2_q3_unipotent", Family::G, 2, 3, false,
       CentralizerLabel::unipotent,
       json{{"label", "case_i"},
            {"defect", json{{"label", "trivial"}, {"order", 1}, {"type", json::array()}}}}},
      {"blockinv.case.a6_q3_unipotent", Family::A, 6, 3, false,
       CentralizerLabel::unipotent, json{{"label", "excluded"}}},
      {"blockinv.case.b5_q3_quasi", Family::B, 5, 3, false,
       CentralizerLabel::quasi_isolated_nontoral, json{{"label", "excluded"}}},
      {"blockinv.case.c3_q3_quasi", Family::C, 3, 3, false,
       CentralizerLabel::quasi_isolated_nontoral, json{{"label", "excluded"}}},
      {"blockinv.case.a4_q3_toral", Family::A, 4, 3, false,
       CentralizerLabel::toral_connected, json{{"label", "nilpotent_covered"}}},
      {"blockinv.case.e6_q3_toraldisc", Family::E, 6, 3, false,
       CentralizerLabel::toral_disconnected, json{{"label", "nilpotent_covered"}}},
      {"blockinv.case.b3_q3_toraldisc", Family::B, 3, 3, false,
       CentralizerLabel::toral_disconnected, json{{"label", "excluded"}}},
  };
  for (const auto& cf : cases) {
    reg.check(cf.id, "blockinv", "classification of the centralizer datum",
              json{{"type", type_name(cf.f, cf.rank)},
                   {"q", cf.q},
                   {"twisted", cf.twisted},
                   {"centralizer", blockinv::to_string(cf.label)}},
              cf.expected, [&cf] {
                blockinv::BlockDescriptor d{cf.f, cf.rank, cf.q, cf.twisted, cf.label};
                auto r = blockinv::classify_block_case(d);
                json out = case_json(r);
                if (r.label == blockinv::CaseLabel::excluded ||
                    r.label == blockinv::CaseLabel::nilpotent_covered ||
                    r.label == blockinv::CaseLabel::case_iv)
                  out = json{{"label", blockinv::to_string(r.label)}};
                return out;
              });
  }

  reg.check("blockinv.case.sylowlaw", "blockinv",
            "every small-defect case satisfies the mod-8 power condition",
            json{{"families", {"a", "d"}},
                 {"ranks", "all supported"},
                 {"q", {3, 5, 7, 9, 11, 13, 25, 27}}},
            json{{"violations", json::array()}}, [] {
              json violations = json::array();
              for (long long q : {3, 5, 7, 9, 11, 13, 25, 27})
                for (auto [f, lo, hi] :
                     {std::tuple<Family, int, int>{Family::A, 1, 12},
                      std::tuple<Family, int, int>{Family::D, 4, 12}})
                  for (int n = lo; n <= hi; ++n) {
                    blockinv::BlockDescriptor d{
                        f, n, q, false,
                        blockinv::CentralizerLabel::quasi_isolated_nontoral};
                    auto r = blockinv::classify_block_case(d);
                    if ((r.label == blockinv::CaseLabel::case_iii ||
                         r.label == blockinv::CaseLabel::case_v) &&
                        !blockinv::sl2_sylow_condition(q, *r.t))
                      violations.push_back(
                          json{{"type", type_name(f, n)}, {"q", q}});
                  }
              return json{{"violations", violations}};
            });

  // Confirm the quaternion predictions against actual matrix groups for
  // every field size small enough to enumerate.
  reg.check("blockinv.case.sl2confirm", "blockinv",
            "predicted quaternion defect and Klein quotient realized in "
            "SL_2(q^t) whenever q^t <= 27",
            json{{"qt", {3, 5, 11, 13, 19, 27}}},
            json{{"mismatches", json::array()}}, [] {
              json mismatches = json::array();
              for (unsigned qt : {3u, 5u, 11u, 13u, 19u, 27u}) {
                const auto& g = get_sl2(qt);
                auto syl = matgrp::sylow2(g);
                auto quot = matgrp::central_quotient_sylow2_shape(g);
                if (syl.shape.label != matgrp::ShapeLabel::quaternion ||
                    syl.shape.order != 8 ||
                    quot.label != matgrp::ShapeLabel::klein_four)
                  mismatches.push_back(json{{"qt", qt}});
              }
              return json{{"mismatches", mismatches}};
            });

  struct MoritaFixture {
    const char* id;
    std::vector<unsigned> exponents;
    unsigned e;
    json expected;
  };
  const std::vector<MoritaFixture> morita = {
      {"blockinv.morita.klein_e3", {1, 1}, 3, json({"OD", "OA4", "OA5_principal_block"})},
      {"blockinv.morita.homocyclic_m2", {2, 2}, 3, json({"OD_rtimes_C3"})},
      {"blockinv.morita.homocyclic_m3", {3, 3}, 3, json({"OD_rtimes_C3"})},
      {"blockinv.morita.nilpotent", {3, 1}, 1, json({"OD"})},
      {"blockinv.morita.reject", {2, 1}, 3, json("rejected")},
  };
  for (const auto& mf : morita) {
    reg.check(mf.id, "blockinv",
              "basic algebra classes compatible with the defect group and "
              "inertial index",
              json{{"exponents", mf.exponents}, {"e", mf.e}}, mf.expected, [&mf] {
                try {
                  auto classes = blockinv::morita_class_rank2(
                      abelian2::make_abelian_two_group(mf.exponents), mf.e);
                  return json(classes);
                } catch (const std::invalid_argument&) {
                  return json("rejected");
                }
              });
  }
}

}  // namespace

void run_into(Registry& reg) {
  if (reg.wants("rootsys")) rootsys_checks(reg);
  if (reg.wants("centralj")) centralj_checks(reg);
  if (reg.wants("latquot")) latquot_checks(reg);
  if (reg.wants("weylorb")) weylorb_checks(reg);
  if (reg.wants("matgrp")) matgrp_checks(reg);
  if (reg.wants("abelian2")) abelian2_checks(reg);
  if (reg.wants("blockinv")) blockinv_checks(reg);
}

std::vector<CheckRecord> run_checks(const std::string& only_module) {
  Registry reg;
  reg.only = only_module;
  run_into(reg);
  return std::move(reg.records);
}

std::vector<CheckRecord> run_checks_matching(
    const std::function<bool(const std::string&)>& id_predicate) {
  Registry reg;
  reg.id_predicate = id_predicate;
  run_into(reg);
  return std::move(reg.records);
}

std::vector<std::string> module_names() {
  return {"rootsys", "centralj", "latquot", "weylorb",
          "matgrp",  "abelian2", "blockinv"};
}

}  // namespace blockcheck::verify
