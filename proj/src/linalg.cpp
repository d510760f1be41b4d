#include "toriq/linalg.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace toriq {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not an exact rational: '" + s + "'");
  Rational q;
  q.get_num() = Integer(num, 10);
  q.get_den() = Integer(den, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::domain_error("integer overflow");
  return static_cast<std::int64_t>(z.get_si());
}

std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1) throw std::domain_error("not an integer: " + q.get_str());
  return to_int64(q.get_num());
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r;
  r.reserve(m.size());
  for (const auto& row : m) {
    RatVec rr;
    rr.reserve(row.size());
    for (auto v : row) rr.push_back(make_rational(v));
    r.push_back(std::move(rr));
  }
  return r;
}

namespace {

// Reduced row echelon form in place, pivoting only in the first cols
// columns; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const std::size_t width = m[row].size();
    Rational inv = 1 / m[row][c];
    for (std::size_t j = c; j < width; ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = c; j < width; ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

std::size_t rank(RatMatrix m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug, n);
  if (piv.size() < n) return std::nullopt;
  RatMatrix inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<RatVec> solve_square(const RatMatrix& a, const RatVec& b) {
  const std::size_t n = a.size();
  RatMatrix aug(n, RatVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  auto piv = rref(aug, n);
  if (piv.size() < n) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::vector<RatVec> kernel(const RatMatrix& a, std::size_t cols) {
  RatMatrix m = a;
  auto piv = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Calls f on every k-subset of {0..n-1}, stopping if f returns false.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool feasible(const RatMatrix& a, const RatVec& b, const RatVec& x) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += a[r][j] * x[j];
    if (s < b[r]) return false;
  }
  return true;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

std::vector<RatVec> polytope_vertices(const RatMatrix& a, const RatVec& b) {
  std::vector<RatVec> out;
  if (a.empty()) return out;
  const std::size_t d = a[0].size();
  if (d == 0) {
    if (feasible(a, b, {})) out.push_back({});
    return out;
  }
  for_each_subset(a.size(), d, [&](const std::vector<std::size_t>& rows) {
    RatMatrix sub;
    RatVec rhs;
    for (auto r : rows) {
      sub.push_back(a[r]);
      rhs.push_back(b[r]);
    }
    auto x = solve_square(sub, rhs);
    if (x && feasible(a, b, *x)) out.push_back(std::move(*x));
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IntVec> polytope_lattice_points(const RatMatrix& a, const RatVec& b) {
  std::vector<IntVec> out;
  auto verts = polytope_vertices(a, b);
  if (verts.empty()) return out;
  const std::size_t d = verts[0].size();
  IntVec lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rational mn = verts[0][j], mx = verts[0][j];
    for (const auto& v : verts) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = to_int64(ceil_q(mn));
    hi[j] = to_int64(floor_q(mx));
    if (lo[j] > hi[j]) return out;
  }
  IntVec x = lo;
  while (true) {
    RatVec xq;
    for (auto v : x) xq.push_back(make_rational(v));
    if (feasible(a, b, xq)) out.push_back(x);
    std::size_t j = 0;
    while (j < d && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == d) break;
    ++x[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntVec primitive_integer(const RatVec& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> z;
  Integer g = 0;
  for (const auto& q : v) {
    Integer t = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
    z.push_back(t);
  }
  IntVec out;
  for (auto& t : z) out.push_back(to_int64(g == 0 ? t : Integer(t / g)));
  return out;
}

std::vector<IntVec> cone_extreme_rays(const IntMatrix& a, std::size_t cols) {
  std::vector<IntVec> out;
  if (cols == 0) return out;
  if (cols == 1) {
    for (int s : {1, -1}) {
      bool ok = std::all_of(a.begin(), a.end(), [&](const IntVec& r) { return r[0] * s >= 0; });
      if (ok) out.push_back({s});
    }
    return out;
  }
  RatMatrix aq = to_rational(a);
  for_each_subset(a.size(), cols - 1, [&](const std::vector<std::size_t>& rows) {
    RatMatrix sub;
    for (auto r : rows) sub.push_back(aq[r]);
    auto ker = kernel(sub, cols);
    if (ker.size() != 1) return true;
    for (int s : {1, -1}) {
      RatVec k = ker[0];
      for (auto& q : k) q *= s;
      bool ok = true;
      for (const auto& row : aq) {
        Rational t = 0;
        for (std::size_t j = 0; j < cols; ++j) t += row[j] * k[j];
        if (t < 0) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(primitive_integer(k));
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Integer> smith_invariants(const IntMatrix& m0) {
  std::vector<std::vector<Integer>> m;
  for (const auto& row : m0) {
    std::vector<Integer> r;
    for (auto v : row) r.emplace_back(static_cast<long>(v));
    m.push_back(std::move(r));
  }
  std::vector<Integer> inv;
  if (m.empty()) return inv;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pick smallest nonzero entry in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Integer q = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Integer q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // the pivot must divide the rest of the block
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    inv.push_back(abs(m[t][t]));
    ++t;
  }
  return inv;
}

}  // namespace toriq
