#include "blockcheck/abelian2.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace blockcheck::abelian2 {

unsigned AbelianTwoGroup::total_exponent_bits() const {
  unsigned s = 0;
  for (unsigned m : exponents) s += m;
  return s;
}

unsigned long long AbelianTwoGroup::order() const {
  return 1ull << total_exponent_bits();
}

bool AbelianTwoGroup::homocyclic() const {
  return !exponents.empty() &&
         std::all_of(exponents.begin(), exponents.end(),
                     [&](unsigned m) { return m == exponents.front(); });
}

AbelianTwoGroup make_abelian_two_group(std::vector<unsigned> exponents) {
  if (exponents.empty())
    throw std::invalid_argument("exponent list must be nonempty");
  for (unsigned m : exponents)
    if (m < 1 || m > 40)
      throw std::invalid_argument("exponents must lie in 1..40");
  std::sort(exponents.rbegin(), exponents.rend());
  AbelianTwoGroup d{std::move(exponents)};
  if (d.total_exponent_bits() > 40)
    throw std::invalid_argument("total exponent capped at 40");
  return d;
}

Int aut_order_closed_form(const AbelianTwoGroup& d) {
  // Product formula over exponent multiplicities, stated for e_1 <= ... <= e_n:
  //   prod_k (2^{d_k} - 2^{k-1}) * prod_j (2^{e_j})^{n-d_j}
  //                              * prod_i (2^{e_i - 1})^{n-c_i+1}
  // with c_k/d_k the first/last index sharing the value e_k.
  std::vector<unsigned> e(d.exponents.rbegin(), d.exponents.rend());
  const std::size_t n = e.size();
  std::vector<std::size_t> c(n), dd(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t lo = k, hi = k;
    while (lo > 0 && e[lo - 1] == e[k]) --lo;
    while (hi + 1 < n && e[hi + 1] == e[k]) ++hi;
    c[k] = lo + 1;   // 1-based
    dd[k] = hi + 1;  // 1-based
  }
  auto pow2 = [](unsigned long long x) { return Int(1) << x; };
  Int result = 1;
  for (std::size_t k = 1; k <= n; ++k) result *= pow2(dd[k - 1]) - pow2(k - 1);
  for (std::size_t j = 1; j <= n; ++j) result *= pow2(e[j - 1] * (n - dd[j - 1]));
  for (std::size_t i = 1; i <= n; ++i)
    result *= pow2((e[i - 1] - 1) * (n - c[i - 1] + 1));
  return result;
}

namespace {

// Component layout for bit-packed elements: residue i occupies exponents[i]
// bits starting at offset[i].
struct Layout {
  std::vector<unsigned> exp;
  std::vector<unsigned> offset;
  std::vector<std::uint32_t> mask;  // already shifted to the component position
  std::uint32_t size = 0;           // number of elements

  explicit Layout(const AbelianTwoGroup& d) : exp(d.exponents) {
    unsigned off = 0;
    for (unsigned m : exp) {
      offset.push_back(off);
      mask.push_back(((1u << m) - 1u) << off);
      off += m;
    }
    size = 1u << off;
  }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < exp.size(); ++i)
      r |= ((x & mask[i]) + (y & mask[i])) & mask[i];
    return r;
  }

  std::uint32_t component(std::uint32_t x, std::size_t i) const {
    return (x & mask[i]) >> offset[i];
  }

  std::uint32_t with_component(std::uint32_t x, std::size_t i,
                               std::uint32_t v) const {
    return (x & ~mask[i]) | ((v << offset[i]) & mask[i]);
  }
};

}  // namespace

Int aut_order_enumerated(const AbelianTwoGroup& d) {
  const std::vector<unsigned>& m = d.exponents;
  const std::size_t r = m.size();
  unsigned bits = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) bits += std::min(m[i], m[j]);
  if (bits > 22)
    throw std::invalid_argument(
        "enumeration cap exceeded: candidate space needs " +
        std::to_string(bits) + " bits (> 22)");

  struct Entry {
    std::size_t i, j;
    unsigned off, width, shift;  // a_ij = v * 2^shift, v in [0, 2^width)
  };
  std::vector<Entry> entries;
  unsigned off = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      unsigned width = std::min(m[i], m[j]);
      unsigned shift = m[i] > m[j] ? m[i] - m[j] : 0;
      entries.push_back({i, j, off, width, shift});
      off += width;
    }

  const Layout layout(d);
  const bool cross_check_closure = layout.size <= 32;

  Int count = 0;
  std::vector<std::uint32_t> cols(r);
  std::vector<std::uint32_t> closure_mark(cross_check_closure ? layout.size : 0);
  std::uint32_t epoch = 0;
  std::vector<std::uint32_t> stack;

  for (std::uint32_t code = 0; code < (1u << bits); ++code) {
    // Surjectivity is equivalent to the mod-2 reduction of the matrix being
    // invertible: surjective maps stay surjective on d/2d, and if det is odd
    // the integer adjugate provides preimages for every target.
    unsigned rows[12] = {};
    for (const Entry& en : entries) {
      std::uint32_t v = (code >> en.off) & ((1u << en.width) - 1u);
      if (en.shift == 0 && (v & 1u)) rows[en.i] |= 1u << en.j;
    }
    unsigned rank = 0;
    unsigned work[12];
    for (std::size_t i = 0; i < r; ++i) work[i] = rows[i];
    for (unsigned c = 0; c < r; ++c) {
      unsigned piv = r;
      for (unsigned i = rank; i < r; ++i)
        if (work[i] & (1u << c)) {
          piv = i;
          break;
        }
      if (piv == r) continue;
      std::swap(work[rank], work[piv]);
      for (unsigned i = 0; i < r; ++i)
        if (i != rank && (work[i] & (1u << c))) work[i] ^= work[rank];
      ++rank;
    }
    const bool surjective = rank == r;

    if (cross_check_closure) {
      // Independent check on tiny groups: generate the image subgroup.
      for (std::size_t j = 0; j < r; ++j) {
        std::uint32_t col = 0;
        for (const Entry& en : entries) {
          if (en.j != j) continue;
          std::uint32_t v = (code >> en.off) & ((1u << en.width) - 1u);
          col = layout.with_component(col, en.i, v << en.shift);
        }
        cols[j] = col;
      }
      ++epoch;
      stack.clear();
      stack.push_back(0);
      closure_mark[0] = epoch;
      std::size_t reached = 1;
      for (std::size_t k = 0; k < stack.size(); ++k)
        for (std::size_t j = 0; j < r; ++j) {
          std::uint32_t t = layout.add(stack[k], cols[j]);
          if (closure_mark[t] != epoch) {
            closure_mark[t] = epoch;
            stack.push_back(t);
            ++reached;
          }
        }
      if ((reached == layout.size) != surjective)
        throw std::logic_error("surjectivity tests disagree");
    }

    if (surjective) ++count;
  }
  return count;
}

namespace {

using Perm = std::vector<std::uint16_t>;

Perm compose(const Perm& a, const Perm& b) {  // apply b, then a
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm invert(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint16_t>(i);
  return r;
}

bool is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

struct ChainLevel {
  int base = -1;
  std::vector<Perm> gens, gen_invs;
  std::set<Perm> gen_set;
  std::vector<int> orbit;
  std::vector<int> pos;  // point -> orbit index, -1 outside
  std::vector<Perm> trans, trans_inv;  // trans[k] maps base to orbit[k]
  std::vector<std::pair<std::size_t, std::size_t>> todo;  // (orbit idx, gen idx)
};

struct Chain {
  std::size_t n = 0;
  std::vector<int> prescribed;  // preferred base points, in order
  std::vector<ChainLevel> levels;

  void add_generator(std::size_t l, const Perm& g) {
    if (is_identity(g)) return;
    if (l == levels.size()) {
      ChainLevel level;
      for (int p : prescribed) {
        bool used = false;
        for (const ChainLevel& prev : levels)
          if (prev.base == p) used = true;
        if (!used && g[p] != p) {
          level.base = p;
          break;
        }
      }
      if (level.base < 0) {
        // Fallback: first moved point.
        for (std::size_t i = 0; i < n; ++i)
          if (g[i] != i) {
            level.base = static_cast<int>(i);
            break;
          }
      }
      level.pos.assign(n, -1);
      level.orbit.push_back(level.base);
      level.pos[level.base] = 0;
      Perm id(n);
      for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint16_t>(i);
      level.trans.push_back(id);
      level.trans_inv.push_back(id);
      levels.push_back(std::move(level));
    }
    ChainLevel& level = levels[l];
    if (!level.gen_set.insert(g).second) return;
    level.gens.push_back(g);
    level.gen_invs.push_back(invert(g));
    const std::size_t gi = level.gens.size() - 1;
    for (std::size_t k = 0; k < level.orbit.size(); ++k) level.todo.push_back({k, gi});
    extend_orbit(l);
    process(l);
  }

  void extend_orbit(std::size_t l) {
    ChainLevel& level = levels[l];
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      int x = level.orbit[k];
      for (std::size_t m = 0; m < level.gens.size(); ++m) {
        int y = level.gens[m][x];
        if (level.pos[y] >= 0) continue;
        level.pos[y] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(y);
        level.trans.push_back(compose(level.gens[m], level.trans[k]));
        level.trans_inv.push_back(invert(level.trans.back()));
        for (std::size_t mm = 0; mm < level.gens.size(); ++mm)
          level.todo.push_back({level.orbit.size() - 1, mm});
      }
    }
  }

  void process(std::size_t l) {
    // levels[l] is re-fetched each round: sift_in may push new levels and
    // reallocate the vector.
    while (!levels[l].todo.empty()) {
      auto [k, m] = levels[l].todo.back();
      levels[l].todo.pop_back();
      const ChainLevel& level = levels[l];
      int x = level.orbit[k];
      int y = level.gens[m][x];
      Perm schreier =
          compose(level.trans_inv[level.pos[y]], compose(level.gens[m], level.trans[k]));
      sift_in(l + 1, std::move(schreier));
    }
  }

  // Strips r through levels >= start; a surviving residue becomes a new
  // generator AT level start (not at the level where it got stuck), keeping
  // the level groups nested -- the orbit product formula depends on that.
  void sift_in(std::size_t start, Perm r) {
    for (std::size_t j = start;; ++j) {
      if (is_identity(r)) return;
      if (j == levels.size()) {
        add_generator(start, std::move(r));
        return;
      }
      ChainLevel& level = levels[j];
      int y = r[level.base];
      if (level.pos[y] < 0) {
        add_generator(start, std::move(r));
        return;
      }
      r = compose(level.trans_inv[level.pos[y]], r);
    }
  }

  Int order() const {
    Int result = 1;
    for (const ChainLevel& level : levels) result *= level.orbit.size();
    return result;
  }
};

// Generating set for Aut(d): coordinate swaps within equal-exponent runs,
// unit scalings of single coordinates (units of Z/2^m are generated by -1
// and 3), and adjacent shears g_j -> g_j + 2^max(m_t - m_j, 0) g_t. Shears
// between distant coordinates arise as commutators of adjacent ones, with
// coefficients multiplying up exactly because the exponents are sorted.
std::vector<Perm> automorphism_generators(const AbelianTwoGroup& d,
                                          const Layout& layout) {
  const std::vector<unsigned>& m = d.exponents;
  const std::size_t r = m.size();
  const std::uint32_t n = layout.size;
  std::vector<Perm> gens;

  auto add_linear = [&](auto&& image_of) {
    Perm p(n);
    for (std::uint32_t x = 0; x < n; ++x) p[x] = static_cast<std::uint16_t>(image_of(x));
    // Automorphism sanity: the map is linear by construction, so bijectivity
    // is the only thing to verify.
    std::vector<bool> hit(n, false);
    for (std::uint32_t x = 0; x < n; ++x) {
      if (hit[p[x]]) throw std::logic_error("generator is not a bijection");
      hit[p[x]] = true;
    }
    gens.push_back(std::move(p));
  };

  for (std::size_t i = 0; i + 1 < r; ++i) {
    if (m[i] != m[i + 1]) continue;
    add_linear([&](std::uint32_t x) {
      std::uint32_t a = layout.component(x, i), b = layout.component(x, i + 1);
      return layout.with_component(layout.with_component(x, i, b), i + 1, a);
    });
  }

  for (std::size_t i = 0; i < r; ++i) {
    if (m[i] < 2) continue;
    std::vector<std::uint32_t> units{(1u << m[i]) - 1u};  // -1
    if (m[i] >= 3) units.push_back(3u);  // -1 and 3 generate the units
    for (std::uint32_t unit : units)
      add_linear([&](std::uint32_t x) {
        std::uint32_t v = (layout.component(x, i) * unit) & ((1u << m[i]) - 1u);
        return layout.with_component(x, i, v);
      });
  }

  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t t : {j ? j - 1 : j, j + 1}) {
      if (t == j || t >= r) continue;
      unsigned shift = m[t] > m[j] ? m[t] - m[j] : 0;
      add_linear([&](std::uint32_t x) {
        std::uint32_t add = (layout.component(x, j) << shift) & ((1u << m[t]) - 1u);
        std::uint32_t v = (layout.component(x, t) + add) & ((1u << m[t]) - 1u);
        return layout.with_component(x, t, v);
      });
    }

  return gens;
}

}  // namespace

Int aut_order_stabilizer_chain(const AbelianTwoGroup& d) {
  if (d.total_exponent_bits() > 12)
    throw std::invalid_argument("stabilizer chain capped at |d| <= 2^12");
  const Layout layout(d);
  const std::size_t n = layout.size;
  // Transversal tables cost about rank * n^2 * 4 bytes in the worst case.
  if (double(d.rank() + 1) * double(n) * double(n) * 4.0 > 256.0 * 1024 * 1024)
    throw std::invalid_argument("stabilizer chain memory cap exceeded");

  Chain chain;
  chain.n = n;
  for (std::size_t i = 0; i < d.rank(); ++i)
    chain.prescribed.push_back(static_cast<int>(1u << layout.offset[i]));

  for (Perm& g : automorphism_generators(d, layout)) chain.add_generator(0, g);
  return chain.order();
}

AutOrderReport aut_order(const AbelianTwoGroup& d) {
  AutOrderReport rep;
  rep.closed_form = aut_order_closed_form(d);
  rep.value = rep.closed_form;

  unsigned bits = 0;
  for (unsigned mi : d.exponents)
    for (unsigned mj : d.exponents) bits += std::min(mi, mj);
  if (bits <= 22) rep.enumerated = aut_order_enumerated(d);

  if (d.total_exponent_bits() <= 12) {
    const std::size_t n = std::size_t(1) << d.total_exponent_bits();
    if (double(d.rank() + 1) * double(n) * double(n) * 4.0 <= 256.0 * 1024 * 1024)
      rep.chain = aut_order_stabilizer_chain(d);
  }

  if (rep.enumerated && *rep.enumerated != rep.closed_form)
    throw std::logic_error("automorphism order mismatch: enumeration vs closed form");
  if (rep.chain && *rep.chain != rep.closed_form)
    throw std::logic_error("automorphism order mismatch: stabilizer chain vs closed form");
  return rep;
}

Int odd_part(Int n) {
  if (n <= 0) throw std::invalid_argument("odd part needs a positive integer");
  while (n % 2 == 0) n /= 2;
  return n;
}

bool aut_is_two_group(const AbelianTwoGroup& d) {
  return odd_part(aut_order(d).value) == 1;
}

InvolutionOrbits order3_involution_action(const AbelianTwoGroup& d) {
  if (d.rank() != 2 || !d.homocyclic())
    throw std::invalid_argument("requires a homocyclic group of rank 2");
  const unsigned m = d.exponents[0];
  const unsigned long long mod = 1ull << m;
  const unsigned long long h = mod >> 1;  // the order-2 residue

  // theta(x, y) = (-y, x - y); as an integer matrix its cube is the identity,
  // so it has order 3 modulo every 2^m (it moves (1,0)).
  auto theta = [&](std::array<unsigned long long, 2> v) {
    return std::array<unsigned long long, 2>{(mod - v[1]) % mod,
                                             (v[0] + mod - v[1]) % mod};
  };

  std::vector<std::array<unsigned long long, 2>> involutions = {
      {h, 0}, {0, h}, {h, h}};
  std::sort(involutions.begin(), involutions.end());

  InvolutionOrbits result;
  result.automorphism_order = 3;
  std::set<std::array<unsigned long long, 2>> seen;
  for (const auto& start : involutions) {
    if (seen.count(start)) continue;
    std::vector<std::array<unsigned long long, 2>> orbit;
    auto cur = start;
    do {
      orbit.push_back(cur);
      seen.insert(cur);
      cur = theta(cur);
      if ((cur[0] * 2) % mod != 0 || (cur[1] * 2) % mod != 0 ||
          (cur[0] == 0 && cur[1] == 0))
        throw std::logic_error("order-3 action left the involution set");
    } while (cur != start);
    std::sort(orbit.begin(), orbit.end());
    result.orbits.push_back(std::move(orbit));
  }
  std::sort(result.orbits.begin(), result.orbits.end());
  return result;
}

bool rank2_nilpotency_forced(const AbelianTwoGroup& d) {
  if (d.rank() != 2)
    throw std::invalid_argument("requires a group of rank 2");
  return odd_part(aut_order_closed_form(d)) == 1;
}

}  // namespace blockcheck::abelian2
