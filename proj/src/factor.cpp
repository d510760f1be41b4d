// Factorization over Q: squarefree split, then Zassenhaus on each part
// (Cantor-Zassenhaus mod p, linear Hensel lifting, subset recombination).

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

#include "toriq/poly.hpp"

namespace toriq {
namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // low degree first, trimmed
using ZPoly = std::vector<Integer>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

ModPoly sub(ModPoly a, const ModPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

ModPoly add(ModPoly a, const ModPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

void divrem(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& q, ModPoly& r) {
  r = a;
  q.clear();
  if (deg(a) < deg(b)) return;
  q.assign(a.size() - b.size() + 1, 0);
  u64 inv = invmod(b.back(), p);
  for (int i = deg(a) - deg(b); i >= 0; --i) {
    u64 c = r[static_cast<std::size_t>(i + deg(b))] * inv % p;
    q[static_cast<std::size_t>(i)] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto k = static_cast<std::size_t>(i) + j;
      r[k] = (r[k] + p - c * b[j] % p) % p;
    }
  }
  trim(q);
  trim(r);
}

ModPoly rem(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly q, r;
  divrem(a, b, p, q, r);
  return r;
}

ModPoly make_monic(ModPoly a, u64 p) {
  if (a.empty()) return a;
  u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
void ext_gcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    ModPoly q, r;
    divrem(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw std::logic_error("ext_gcd: inputs not coprime");
  u64 inv = invmod(r0[0], p);
  s = s0;
  t = t0;
  for (auto& c : s) c = c * inv % p;
  for (auto& c : t) c = c * inv % p;
}

ModPoly powmod_poly(ModPoly base, const Integer& e, const ModPoly& f, u64 p) {
  ModPoly r = {1};
  base = rem(base, f, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), f, p);
  }
  return r;
}

ModPoly derivative(const ModPoly& a, u64 p) {
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
  trim(d);
  return d;
}

void equal_degree_split(const ModPoly& f, int d, u64 p, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  while (true) {
    ModPoly a(static_cast<std::size_t>(deg(f)));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = sub(powmod_poly(a, e, f, p), {1}, p);
    ModPoly g = gcd(f, b, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      ModPoly q, r;
      divrem(f, g, p, q, r);
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(make_monic(q, p), d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial mod p.
std::vector<ModPoly> factor_mod_p(ModPoly f, u64 p, std::mt19937_64& rng) {
  std::vector<ModPoly> out;
  ModPoly x = {0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod_poly(h, Integer(static_cast<unsigned long>(p)), f, p);
    ModPoly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      ModPoly q, r;
      divrem(f, g, p, q, r);
      f = q;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back(make_monic(f, p));
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModPoly reduce(const ZPoly& f, u64 p) {
  ModPoly r;
  Integer pz(static_cast<unsigned long>(p));
  for (const auto& c : f) {
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
    r.push_back(m.get_ui());
  }
  trim(r);
  return r;
}

ZPoly lift(const ModPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zmod_sym(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

// Exact division by a monic divisor; nullopt if it does not divide.
std::optional<ZPoly> zdiv_monic(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer c = r[i + b.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
  }
  for (const auto& c : r)
    if (c != 0) return std::nullopt;
  ztrim(q);
  return q;
}

// Lift f = g*h mod p to mod p^k, g and h monic.
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, u64 p, int k) {
  ModPoly gp = reduce(g, p), hp = reduce(h, p), s, t;
  ext_gcd(gp, hp, p, s, t);
  Integer pz(static_cast<unsigned long>(p));
  Integer pj = pz;
  for (int j = 1; j < k; ++j) {
    ZPoly diff = f;
    ZPoly gh = zmul(g, h);
    if (gh.size() > diff.size()) diff.resize(gh.size(), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    ztrim(diff);
    for (auto& c : diff) c /= pj;  // exact
    ModPoly e = reduce(diff, p);
    ModPoly q, dg;
    divrem(mul(t, e, p), gp, p, q, dg);
    ModPoly dh = add(mul(s, e, p), mul(q, hp, p), p);
    ZPoly dgz = lift(dg), dhz = lift(dh);
    if (dgz.size() > g.size()) g.resize(dgz.size(), Integer(0));
    for (std::size_t i = 0; i < dgz.size(); ++i) g[i] += pj * dgz[i];
    if (dhz.size() > h.size()) h.resize(dhz.size(), Integer(0));
    for (std::size_t i = 0; i < dhz.size(); ++i) h[i] += pj * dhz[i];
    pj *= pz;
    g = zmod(g, pj);
    h = zmod(h, pj);
  }
}

// Irreducible factors over Z of a monic squarefree integer polynomial.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  std::mt19937_64 rng(0x70726971ULL);

  // choose the good prime with the fewest modular factors among a few
  std::vector<ModPoly> best;
  u64 best_p = 0;
  int tried = 0;
  for (u64 p = 10007; tried < 5; p += 2) {
    if (!is_prime(p)) continue;
    ModPoly fp = reduce(f, p);
    if (deg(fp) != n) continue;
    if (deg(gcd(fp, derivative(fp, p), p)) != 0) continue;
    ++tried;
    auto fac = factor_mod_p(fp, p, rng);
    if (best_p == 0 || fac.size() < best.size()) {
      best = std::move(fac);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};
  const u64 p = best_p;

  // coefficient bound for factors: 2^n * ||f||_1
  Integer bound = 0;
  for (const auto& c : f) bound += abs(c);
  bound <<= static_cast<unsigned long>(n);
  bound = 2 * bound + 1;
  int k = 1;
  Integer pk(static_cast<unsigned long>(p));
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }

  std::vector<ZPoly> lifted;
  ZPoly rest = f;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    ModPoly hp = {1};
    for (std::size_t j = i + 1; j < best.size(); ++j) hp = mul(hp, best[j], p);
    ZPoly g = lift(best[i]), h = lift(hp);
    hensel_pair(rest, g, h, p, k);
    lifted.push_back(g);
    rest = h;
  }
  lifted.push_back(rest);

  std::vector<ZPoly> out;
  ZPoly cur = f;
  std::vector<ZPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly g = {Integer(1)};
      for (auto i : idx) g = zmod_sym(zmul(g, pool[i]), pk);
      auto q = zdiv_monic(cur, g);
      if (q) {
        out.push_back(g);
        cur = *q;
        std::vector<ZPoly> next;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
        pool = std::move(next);
        found = true;
        break;
      }
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == pool.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (cur.size() > 1) out.push_back(cur);
  return out;
}

// Irreducible monic factors over Q of a squarefree polynomial.
std::vector<Poly> factor_squarefree(const Poly& p) {
  if (p.degree() <= 1) return {p.monic()};
  // clear denominators, take primitive part
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly F;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    F.push_back(v);
  }
  for (auto& c : F) c /= g;
  const int n = static_cast<int>(F.size()) - 1;
  const Integer a = F.back();
  // monic transform: a^(n-1) F(x/a)
  ZPoly M(F.size());
  Integer apow = 1;
  for (int i = n - 1; i >= 0; --i) {
    M[static_cast<std::size_t>(i)] = F[static_cast<std::size_t>(i)] * apow;
    apow *= a;
  }
  M[static_cast<std::size_t>(n)] = 1;
  std::vector<Poly> out;
  for (const auto& m : zassenhaus(M)) {
    // undo: factor of F is m(a x) up to content
    RatVec c;
    Integer ai = 1;
    for (const auto& v : m) {
      c.emplace_back(v * ai);
      ai *= a;
    }
    out.push_back(Poly(std::move(c)).monic());
  }
  return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  for (const auto& [sf, mult] : squarefree_decomposition(p))
    for (auto& f : factor_squarefree(sf)) out.emplace_back(std::move(f), mult);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  auto f = factor(p);
  return f.size() == 1 && f[0].second == 1;
}

}  // namespace toriq
