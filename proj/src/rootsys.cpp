#include "blockcheck/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace blockcheck::rootsys {

namespace {

Rational half() { return Rational(1, 2); }

Vec zero_vec(std::size_t dim) { return Vec(dim, Rational(0)); }

Vec unit(std::size_t dim, std::size_t i, long long c = 1) {
  Vec v = zero_vec(dim);
  v[i] = Rational(c);
  return v;
}

// Expected |Phi| per type, used as a construction self-check.
std::size_t expected_root_count(const LieType& t) {
  long long n = t.rank;
  switch (t.family) {
    case Family::A: return static_cast<std::size_t>(n * (n + 1));
    case Family::B:
    case Family::C: return static_cast<std::size_t>(2 * n * n);
    case Family::D: return static_cast<std::size_t>(2 * n * (n - 1));
    case Family::E: return t.rank == 6 ? 72u : (t.rank == 7 ? 126u : 240u);
    case Family::F: return 48u;
    case Family::G: return 12u;
  }
  throw std::logic_error("unreachable family");
}

// Bourbaki simple roots of E_8 in R^8; E_7 and E_6 take prefixes.
std::vector<Vec> e8_bourbaki_simples() {
  std::vector<Vec> s;
  Vec a1 = zero_vec(8);
  a1[0] = half();
  a1[7] = half();
  for (int k = 1; k <= 6; ++k) a1[static_cast<std::size_t>(k)] = -half();
  s.push_back(a1);
  Vec a2 = zero_vec(8);
  a2[0] = Rational(1);
  a2[1] = Rational(1);
  s.push_back(a2);
  for (int k = 1; k <= 6; ++k) {  // a3 = e2-e1, a4 = e3-e2, ..., a8 = e7-e6
    Vec v = zero_vec(8);
    v[static_cast<std::size_t>(k)] = Rational(1);
    v[static_cast<std::size_t>(k - 1)] = Rational(-1);
    s.push_back(v);
  }
  return s;
}

std::vector<Vec> simple_roots_for(const LieType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  std::vector<Vec> s;
  switch (t.family) {
    case Family::A: {
      for (std::size_t i = 0; i < n; ++i) {
        Vec v = zero_vec(n + 1);
        v[i] = Rational(1);
        v[i + 1] = Rational(-1);
        s.push_back(v);
      }
      return s;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Vec v = zero_vec(n);
        v[i] = Rational(1);
        v[i + 1] = Rational(-1);
        s.push_back(v);
      }
      if (t.family == Family::B) {
        s.push_back(unit(n, n - 1));
      } else if (t.family == Family::C) {
        s.push_back(unit(n, n - 1, 2));
      } else {
        Vec v = zero_vec(n);
        v[n - 2] = Rational(1);
        v[n - 1] = Rational(1);
        s.push_back(v);
      }
      return s;
    }
    case Family::E: {
      std::vector<Vec> e8 = e8_bourbaki_simples();
      if (t.rank == 8) return e8;
      if (t.rank == 6) return {e8.begin(), e8.begin() + 6};
      // E_7: reorder the Bourbaki prefix so that dropping alpha_2 leaves the
      // chain 1-3-4-5-6-7 with alpha_2 attached to alpha_5. Table maps the
      // public label to the Bourbaki label.
      static const int to_bourbaki[8] = {0, 7, 2, 6, 5, 4, 3, 1};
      std::vector<Vec> s7;
      for (int lbl = 1; lbl <= 7; ++lbl)
        s7.push_back(e8[static_cast<std::size_t>(to_bourbaki[lbl] - 1)]);
      return s7;
    }
    case Family::F: {
      // Bourbaki: a1 = e2-e3, a2 = e3-e4, a3 = e4, a4 = (e1-e2-e3-e4)/2.
      Vec a1 = zero_vec(4), a2 = zero_vec(4), a3 = zero_vec(4), a4 = zero_vec(4);
      a1[1] = Rational(1);
      a1[2] = Rational(-1);
      a2[2] = Rational(1);
      a2[3] = Rational(-1);
      a3[3] = Rational(1);
      a4[0] = half();
      a4[1] = -half();
      a4[2] = -half();
      a4[3] = -half();
      return {a1, a2, a3, a4};
    }
    case Family::G: {
      // Bourbaki: a1 = e1-e2, a2 = -2e1+e2+e3 in the sum-zero plane of R^3.
      Vec a1 = zero_vec(3), a2 = zero_vec(3);
      a1[0] = Rational(1);
      a1[1] = Rational(-1);
      a2[0] = Rational(-2);
      a2[1] = Rational(1);
      a2[2] = Rational(1);
      return {a1, a2};
    }
  }
  throw std::logic_error("unreachable family");
}

long long pairing_value(const Vec& beta, const Vec& alpha) {
  Rational v = (dot(beta, alpha) * Rational(2)) / dot(alpha, alpha);
  if (!v.is_integer()) throw std::domain_error("non-integral Cartan pairing");
  return v.num();
}

Vec reflect(const Vec& v, const Vec& alpha) {
  Rational c = (dot(v, alpha) * Rational(2)) / dot(alpha, alpha);
  Vec out = v;
  for (std::size_t k = 0; k < v.size(); ++k) out[k] -= c * alpha[k];
  return out;
}

// Solves M x = rhs exactly by Gaussian elimination; M must be square and
// invertible (Cartan matrices are).
std::vector<Rational> solve(std::vector<std::vector<Rational>> m,
                            std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("singular system in weight solve");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational d = m[col][col];
    for (std::size_t j = 0; j < n; ++j) m[col][j] = m[col][j] / d;
    rhs[col] = rhs[col] / d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  throw std::logic_error("unreachable family");
}

LieType make_lie_type(Family family, int rank) {
  auto fail = [&](const char* why) {
    std::ostringstream os;
    os << "inadmissible Lie type " << family_letter(family) << "_" << rank
       << ": " << why;
    throw std::invalid_argument(os.str());
  };
  switch (family) {
    case Family::A:
      if (rank < 1 || rank > 12) fail("A_n needs 1 <= n <= 12");
      break;
    case Family::B:
      if (rank < 2 || rank > 12) fail("B_n needs 2 <= n <= 12");
      break;
    case Family::C:
      if (rank < 3 || rank > 12) fail("C_n needs 3 <= n <= 12");
      break;
    case Family::D:
      if (rank < 4 || rank > 12) fail("D_n needs 4 <= n <= 12");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) fail("E_n needs n in {6,7,8}");
      break;
    case Family::F:
      if (rank != 4) fail("F_n needs n = 4");
      break;
    case Family::G:
      if (rank != 2) fail("G_n needs n = 2");
      break;
  }
  return LieType{family, rank};
}

LieType make_lie_type(char family_letter_in, int rank) {
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(family_letter_in)));
  Family f;
  switch (c) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    case 'F': f = Family::F; break;
    case 'G': f = Family::G; break;
    default:
      throw std::invalid_argument(std::string("unknown family letter '") + family_letter_in + "'");
  }
  return make_lie_type(f, rank);
}

std::string to_string(const LieType& t) {
  return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

bool RootSystem::contains_root(const Vec& v) const {
  return std::binary_search(roots.begin(), roots.end(), v);
}

RootSystem build_root_system(LieType t) {
  t = make_lie_type(t.family, t.rank);
  RootSystem rs;
  rs.type = t;
  rs.simple_roots = simple_roots_for(t);
  rs.ambient_dim = rs.simple_roots.front().size();
  const std::size_t n = rs.simple_roots.size();

  // Close the simple roots under simple reflections. For a reduced system
  // every root is a Weyl image of a simple root, and the Weyl group is
  // generated by the simple reflections, so this reaches all of Phi.
  std::set<Vec> seen(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<Vec> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!queue.empty()) {
    Vec v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Vec w = reflect(v, rs.simple_roots[i]);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  rs.roots.assign(seen.begin(), seen.end());

  if (rs.roots.size() != expected_root_count(t))
    throw std::logic_error("root closure produced wrong count for " + to_string(t));

  std::set<Rational> lengths;
  for (const Vec& r : rs.roots) lengths.insert(dot(r, r));
  if (lengths.empty() || lengths.size() > 2)
    throw std::logic_error("unexpected number of root length classes in " + to_string(t));

  rs.cartan.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rs.cartan[i][j] = pairing_value(rs.simple_roots[i], rs.simple_roots[j]);

  // q_i = sum_k c_k alpha_k with <q_i, alpha_j^vee> = delta_ij; the expansion
  // coefficients solve M^T c = e_i where M[k][j] = <a_k, a_j^vee>.
  std::vector<std::vector<Rational>> mt(n, std::vector<Rational>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      mt[j][k] = Rational(rs.cartan[k][j]);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> rhs(n, Rational(0));
    rhs[i] = Rational(1);
    std::vector<Rational> c = solve(mt, rhs);
    Vec q = zero_vec(rs.ambient_dim);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t d = 0; d < rs.ambient_dim; ++d)
        q[d] += c[k] * rs.simple_roots[k][d];
    rs.fundamental_weights.push_back(q);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pairing_value(rs.fundamental_weights[i], rs.simple_roots[j]) !=
          (i == j ? 1 : 0))
        throw std::logic_error("fundamental weight duality failed for " + to_string(t));

  return rs;
}

long long cartan_pairing(const RootSystem& rs, const Vec& beta, const Vec& alpha) {
  if (beta.size() != rs.ambient_dim || alpha.size() != rs.ambient_dim)
    throw std::invalid_argument("vector dimension does not match ambient space");
  if (!rs.contains_root(alpha))
    throw std::invalid_argument("alpha is not a root of " + to_string(rs.type));
  return pairing_value(beta, alpha);
}

Vec reflect_simple(const RootSystem& rs, int i, const Vec& v) {
  if (i < 1 || i > rs.rank())
    throw std::invalid_argument("simple root index out of range");
  if (v.size() != rs.ambient_dim)
    throw std::invalid_argument("vector dimension does not match ambient space");
  return reflect(v, rs.simple_roots[static_cast<std::size_t>(i - 1)]);
}

}  // namespace blockcheck::rootsys
