#include "blockcheck/latquot.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace blockcheck::latquot {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

struct Worker {
  IntMatrix a, u, v;

  explicit Worker(const IntMatrix& m)
      : a(m),
        u(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(r1, j), u.at(r2, j));
  }
  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, c1), v.at(i, c2));
  }
  // row r1 += f * row r2
  void add_row(std::size_t r1, std::size_t r2, const Int& f) {
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(r1, j) += f * a.at(r2, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(r1, j) += f * u.at(r2, j);
  }
  // col c1 += f * col c2
  void add_col(std::size_t c1, std::size_t c2, const Int& f) {
    for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, c1) += f * a.at(i, c2);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, c1) += f * v.at(i, c2);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
  }

  // Smallest nonzero |entry| in the trailing block, or nothing.
  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a.at(i, j) == 0) continue;
        Int mag = abs(a.at(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pr = i;
          pc = j;
        }
      }
    return found;
  }
};

Int floordiv(const Int& x, const Int& y) {
  Int q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  Worker w(m);
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pr = t, pc = t;
    if (!w.find_pivot(t, pr, pc)) break;  // trailing block is zero
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    for (;;) {
      // Clear the pivot column and row; a nonzero remainder becomes the new
      // (smaller) pivot, so this terminates.
      bool dirty = false;
      for (std::size_t i = t + 1; i < w.a.rows(); ++i) {
        if (w.a.at(i, t) == 0) continue;
        Int q = floordiv(w.a.at(i, t), w.a.at(t, t));
        w.add_row(i, t, -q);
        if (w.a.at(i, t) != 0) {
          w.swap_rows(t, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
        if (w.a.at(t, j) == 0) continue;
        Int q = floordiv(w.a.at(t, j), w.a.at(t, t));
        w.add_col(j, t, -q);
        if (w.a.at(t, j) != 0) {
          w.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Divisibility fix-up: the pivot must divide every trailing entry.
      bool fixed = true;
      for (std::size_t i = t + 1; i < w.a.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < w.a.cols() && fixed; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.add_row(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (w.a.at(t, t) < 0) w.negate_row(t);
  }

  SNFResult res;
  res.u = w.u;
  res.v = w.v;
  for (std::size_t i = 0; i < steps; ++i) res.d.push_back(w.a.at(i, i));

  // Internal guarantees: reconstruction, unimodularity, divisibility chain.
  IntMatrix check = w.u * m * w.v;
  for (std::size_t i = 0; i < check.rows(); ++i)
    for (std::size_t j = 0; j < check.cols(); ++j)
      if (check.at(i, j) != (i == j && i < steps ? res.d[i] : Int(0)))
        throw std::logic_error("SNF reconstruction mismatch");
  if (abs(determinant(res.u)) != 1 || abs(determinant(res.v)) != 1)
    throw std::logic_error("SNF transform not unimodular");
  for (std::size_t i = 0; i + 1 < res.d.size(); ++i)
    if (res.d[i + 1] != 0 && (res.d[i] == 0 || res.d[i + 1] % res.d[i] != 0))
      throw std::logic_error("SNF divisibility chain violated");
  return res;
}

IntMatrix subset_pairing_matrix(const rootsys::RootSystem& rs,
                                const centralj::SubsetJ& j) {
  const std::size_t n = static_cast<std::size_t>(rs.rank());
  for (int idx : j.indices)
    if (idx < 1 || idx > rs.rank())
      throw std::invalid_argument("subset index out of range 1..rank");

  // Column for each j in J: alpha_j written in the fundamental-weight basis,
  // i.e. (<alpha_j, alpha_i^vee>)_i.
  IntMatrix m(n, j.indices.size());
  for (std::size_t col = 0; col < j.indices.size(); ++col) {
    std::size_t jj = static_cast<std::size_t>(j.indices[col] - 1);
    for (std::size_t i = 0; i < n; ++i) m.at(i, col) = rs.cartan[jj][i];
  }
  return m;
}

namespace {

// idx is a strictly increasing k-subset of {0, ..., limit-1}; steps to the
// next one in lexicographic order, or returns false after the last.
bool next_combination(std::vector<std::size_t>& idx, std::size_t limit) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < limit) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Int> minor_gcd_invariant_factors(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Int> divisors;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    Int g = 0;
    std::vector<std::size_t> ri(k);
    std::iota(ri.begin(), ri.end(), 0);
    do {
      std::vector<std::size_t> ci(k);
      std::iota(ci.begin(), ci.end(), 0);
      do {
        IntMatrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub.at(a, b) = m.at(ri[a], ci[b]);
        Int d = determinant(sub);
        g = boost::multiprecision::gcd(g, d < 0 ? Int(-d) : d);
      } while (next_combination(ci, c));
    } while (next_combination(ri, r));
    divisors.push_back(g);
    if (g == 0) break;  // every larger minor vanishes too
  }
  std::vector<Int> factors;
  Int prev = 1;
  for (const Int& dk : divisors) {
    if (dk == 0) break;
    Int f = dk / prev;
    if (f > 1) factors.push_back(f);
    prev = dk;
  }
  return factors;
}

QuotientReport quotient_invariants(const rootsys::RootSystem& rs,
                                   const centralj::SubsetJ& j) {
  const std::size_t n = static_cast<std::size_t>(rs.rank());
  IntMatrix m = subset_pairing_matrix(rs, j);
  SNFResult snf = smith_normal_form(m);
  QuotientReport rep;
  int nonzero = 0;
  for (const Int& d : snf.d) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) rep.invariant_factors.push_back(d);
  }
  rep.free_rank = static_cast<int>(n) - nonzero;
  rep.torsion_free = rep.invariant_factors.empty();
  return rep;
}

bool center_connected(const rootsys::RootSystem& rs, const centralj::SubsetJ& j) {
  return quotient_invariants(rs, j).torsion_free;
}

}  // namespace blockcheck::latquot
