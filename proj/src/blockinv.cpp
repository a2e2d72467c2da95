#include "blockcheck/blockinv.hpp"

#include <stdexcept>

namespace blockcheck::blockinv {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(long long n) {
  if (n < 2) return false;
  long long p = n;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  while (n % p == 0) n /= p;
  return n == 1;
}

void require_odd_prime_power(long long q) {
  if (q < 3 || q % 2 == 0 || !is_prime_power(q))
    throw std::invalid_argument("q must be an odd prime power");
}

Int int_pow(long long base, unsigned exp) {
  Int r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

matgrp::TwoGroupShape shape(matgrp::ShapeLabel label, unsigned long long order,
                            std::vector<unsigned> type = {}) {
  matgrp::TwoGroupShape s;
  s.label = label;
  s.order = order;
  s.abelian_type = std::move(type);
  return s;
}

}  // namespace

CountPair rank2_invariants(const abelian2::AbelianTwoGroup& d, unsigned e) {
  if (d.rank() != 2)
    throw std::invalid_argument("defect group must have rank 2");
  if (e != 1 && e != 3)
    throw std::invalid_argument("inertial index must be 1 or 3 in rank 2");
  CountPair c;
  if (e == 1) {
    // Nilpotent: character counts coincide with the defect group.
    c.k = d.order();
    c.l = 1;
    c.k0 = d.order();
    return c;
  }
  if (!d.homocyclic())
    throw std::invalid_argument(
        "inertial index 3 requires a homocyclic rank-2 defect group");
  c.k = (Int(d.order()) + 8) / 3;
  c.l = 3;
  if (d.exponents[0] == 1) c.k0 = 4;  // abelian defect of order 4: all height 0
  return c;
}

Elab16Counts elab16_invariants(unsigned e) {
  if (e != 15)
    throw std::invalid_argument("this count requires inertial index 15");
  Elab16Counts c{16, 16, 15, 16};
  if (c.k - c.l != 1) throw std::logic_error("count identity violated");
  return c;
}

std::optional<long long> clifford_orbit_count(long long w) {
  if (w < 3 || w % 2 == 0 || !is_prime(w))
    throw std::invalid_argument("w must be an odd prime");
  long long denom = w * w - 1;
  if ((8 * w) % denom != 0) return std::nullopt;
  long long t = 8 * w / denom;
  if ((16 - t * w) * w + t != 8 * w)
    throw std::logic_error("orbit count does not satisfy its defining identity");
  return t;
}

Int torus_fixed_order(long long q, unsigned t, bool twisted) {
  if (q < 2 || !is_prime_power(q))
    throw std::invalid_argument("q must be a prime power >= 2");
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (twisted && t % 2 == 0)
    throw std::invalid_argument("twisted fixed-point count requires odd t");
  Int num = int_pow(q, t) + (twisted ? 1 : -1);
  Int den = Int(q) + (twisted ? 1 : -1);
  if (num % den != 0) throw std::logic_error("fixed-point count is not integral");
  Int result = num / den;
  if (t % 2 == 1 && result % 2 == 0)
    throw std::logic_error("fixed-point count must be odd for odd t");
  return result;
}

unsigned dn_p0_order(long long q, unsigned t) {
  require_odd_prime_power(q);
  if (q % 8 != 3 && q % 8 != 5)
    throw std::invalid_argument("q must be +-3 (mod 8)");
  if (t % 2 == 0) throw std::invalid_argument("t must be odd");
  Int n = int_pow(q, t) - 1;
  unsigned v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  unsigned result = 1u << v;
  // q = 3 (mod 4) gives 2-part 2, q = 1 (mod 4) gives 2-part 4, odd t.
  unsigned expected = (q % 4 == 3) ? 2 : 4;
  if (result != expected)
    throw std::logic_error("2-part of q^t - 1 escaped {2, 4}");
  return result;
}

bool sl2_sylow_condition(long long q, unsigned r) {
  require_odd_prime_power(q);
  if (r < 1) throw std::invalid_argument("r must be positive");
  long long m = 1;
  long long base = q % 8;
  for (unsigned i = 0; i < r; ++i) m = (m * base) % 8;
  bool direct = (m == 3 || m == 5);
  bool factored = (r % 2 == 1) && (q % 8 == 3 || q % 8 == 5);
  if (direct != factored)
    throw std::logic_error("mod-8 power condition self-check failed");
  return direct;
}

namespace {

CaseReport excluded(std::string reason) {
  CaseReport r;
  r.label = CaseLabel::excluded;
  r.reason = std::move(reason);
  return r;
}

CaseReport nilpotent_covered(std::string reason) {
  CaseReport r;
  r.label = CaseLabel::nilpotent_covered;
  r.reason = std::move(reason);
  return r;
}

CaseReport e7_case() {
  CaseReport r;
  r.label = CaseLabel::case_ii;
  r.reason =
      "rank-7 exceptional type: defect group dihedral of order 8 containing "
      "the nontrivial center, central quotient Klein four";
  r.defect_shape = shape(matgrp::ShapeLabel::dihedral, 8);
  r.central_quotient_shape = shape(matgrp::ShapeLabel::klein_four, 4, {1, 1});
  return r;
}

}  // namespace

CaseReport classify_block_case(const BlockDescriptor& desc) {
  using rootsys::Family;
  rootsys::make_lie_type(desc.family, desc.rank);  // validates the pair
  require_odd_prime_power(desc.q);
  if (desc.twisted && desc.family != Family::A && desc.family != Family::D &&
      desc.family != Family::E)
    throw std::invalid_argument("twisted form exists only for types A, D, E6");
  if (desc.twisted && desc.family == Family::E && desc.rank != 6)
    throw std::invalid_argument("twisted form exists only for types A, D, E6");

  switch (desc.label) {
    case CentralizerLabel::toral_connected:
      return nilpotent_covered(
          "connected toral centralizer: the covered blocks are nilpotent with "
          "defect inside the torus");

    case CentralizerLabel::toral_disconnected:
      if (desc.family == Family::A ||
          (desc.family == Family::E && desc.rank == 6))
        return nilpotent_covered(
            "disconnected toral centralizer: component group acts freely, "
            "covered blocks stay nilpotent");
      return excluded(
          "disconnected toral centralizers with abelian defect occur only in "
          "types A and E6");

    case CentralizerLabel::unipotent: {
      if (desc.family == Family::E && desc.rank == 7) return e7_case();
      if (desc.family == Family::E || desc.family == Family::F ||
          desc.family == Family::G) {
        CaseReport r;
        r.label = CaseLabel::case_i;
        r.reason =
            "unipotent block of the exceptional group: defect group trivial";
        r.defect_shape = shape(matgrp::ShapeLabel::trivial, 1);
        return r;
      }
      return excluded(
          "unipotent blocks of classical groups have nonabelian defect unless "
          "they are of full defect");
    }

    case CentralizerLabel::quasi_isolated_nontoral:
      switch (desc.family) {
        case Family::A: {
          if ((desc.rank + 1) % 2 != 0)
            return excluded("requires rank n with n + 1 = 2t");
          unsigned t = static_cast<unsigned>((desc.rank + 1) / 2);
          if (t % 2 == 0) return excluded("requires odd t where n + 1 = 2t");
          if (!sl2_sylow_condition(desc.q, t))
            return excluded("requires q^t = +-3 (mod 8)");
          CaseReport r;
          r.label = CaseLabel::case_iii;
          r.reason =
              "linear/unitary type with n + 1 = 2t, t odd, q^t = +-3 (mod 8): "
              "defect group quaternion of order 8";
          r.t = t;
          r.defect_shape = shape(matgrp::ShapeLabel::quaternion, 8);
          r.central_quotient_shape =
              shape(matgrp::ShapeLabel::klein_four, 4, {1, 1});
          return r;
        }
        case Family::B:
        case Family::C:
          return excluded(
              "types B and C admit no quasi-isolated 2-block with abelian "
              "non-toral defect");
        case Family::D: {
          if (desc.twisted)
            return excluded(
                "twisted type D: the relevant subsystem subgroup is not "
                "F-stable");
          if (desc.rank % 2 != 0) return excluded("requires rank n = 2t");
          unsigned t = static_cast<unsigned>(desc.rank / 2);
          if (t % 2 == 0) return excluded("requires odd t where n = 2t");
          if (!sl2_sylow_condition(desc.q, 1))
            return excluded("requires q = +-3 (mod 8)");
          unsigned p0 = dn_p0_order(desc.q, t);
          CaseReport r;
          r.label = CaseLabel::case_v;
          r.reason =
              "type D with n = 2t, t odd, q = +-3 (mod 8): defect group is a "
              "cyclic factor of order " +
              std::to_string(p0) + " times a quaternion group of order 8";
          r.t = t;
          r.defect_shape =
              shape(matgrp::ShapeLabel::other_nonabelian, 8ull * p0);
          if (p0 == 2)
            r.central_quotient_shape =
                shape(matgrp::ShapeLabel::elementary_abelian, 8, {1, 1, 1});
          else
            r.central_quotient_shape =
                shape(matgrp::ShapeLabel::other_abelian, 16, {2, 1, 1});
          return r;
        }
        case Family::E:
          if (desc.rank == 7) return e7_case();
          if (desc.rank == 8) {
            CaseReport r;
            r.label = CaseLabel::case_iv;
            r.reason =
                "rank-8 exceptional type: quasi-isolated datum with defect "
                "group abelian inside a torus";
            return r;
          }
          return excluded(
              "rank-6 exceptional type has no quasi-isolated non-toral datum "
              "with abelian defect");
        case Family::F:
        case Family::G:
          return excluded(
              "types F4 and G2 have no quasi-isolated non-toral datum with "
              "abelian defect");
      }
      throw std::logic_error("unreachable family");
  }
  throw std::logic_error("unreachable centralizer label");
}

std::vector<std::string> morita_class_rank2(const abelian2::AbelianTwoGroup& d,
                                            unsigned e) {
  if (d.rank() != 2)
    throw std::invalid_argument("defect group must have rank 2");
  if (e != 1 && e != 3)
    throw std::invalid_argument("inertial index must be 1 or 3 in rank 2");
  if (e == 1) return {"OD"};
  if (!d.homocyclic())
    throw std::invalid_argument(
        "inertial index 3 requires a homocyclic rank-2 defect group");
  if (d.exponents[0] == 1) return {"OD", "OA4", "OA5_principal_block"};
  return {"OD_rtimes_C3"};
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::case_i: return "case_i";
    case CaseLabel::case_ii: return "case_ii";
    case CaseLabel::case_iii: return "case_iii";
    case CaseLabel::case_iv: return "case_iv";
    case CaseLabel::case_v: return "case_v";
    case CaseLabel::nilpotent_covered: return "nilpotent_covered";
    case CaseLabel::excluded: return "excluded";
  }
  throw std::logic_error("unreachable case label");
}

std::string to_string(CentralizerLabel label) {
  switch (label) {
    case CentralizerLabel::unipotent: return "unipotent";
    case CentralizerLabel::quasi_isolated_nontoral: return "quasi_isolated_nontoral";
    case CentralizerLabel::toral_connected: return "toral_connected";
    case CentralizerLabel::toral_disconnected: return "toral_disconnected";
  }
  throw std::logic_error("unreachable centralizer label");
}

}  // namespace blockcheck::blockinv
