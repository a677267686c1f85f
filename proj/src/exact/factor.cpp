// Copyright 2026 The ruledsym Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ruledsym/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace ruledsym {
namespace detail {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

// ---------------------------------------------------------------- primes

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Primes below 2^31, descending; used by the modular gcd.
const std::vector<u64>& large_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> v;
    for (u64 n = (1ull << 31) - 1; v.size() < 4096; n -= 2)
      if (is_probable_prime(n)) v.push_back(n);
    return v;
  }();
  return primes;
}

// ------------------------------------------------------------- mod p polys

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 reduce(const Integer& c, u64 p) {
  return static_cast<u64>(mpz_fdiv_ui(c.get_mpz_t(), p));
}

ModPoly to_mod(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = reduce(a[i], p);
  trim(r);
  return r;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

ModPoly mp_add(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
      if (acc[i + j] >> 120) acc[i + j] %= p;
    }
  }
  ModPoly r(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u64>(acc[i] % p);
  trim(r);
  return r;
}

ModPoly mp_scale(const ModPoly& a, u64 s, u64 p) {
  ModPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], s, p);
  trim(r);
  return r;
}

// Quotient and remainder; b nonzero.
std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.size() < b.size()) return {{}, a};
  ModPoly r = a;
  ModPoly q(a.size() - b.size() + 1, 0);
  u64 inv = invmod(b.back(), p);
  size_t db = b.size() - 1;
  for (size_t i = a.size(); i-- > db;) {
    if (!r[i]) continue;
    u64 f = mulmod(r[i], inv, p);
    q[i - db] = f;
    for (size_t j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - mulmod(f, b[j], p)) % p;
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

ModPoly mp_rem(const ModPoly& a, const ModPoly& b, u64 p) { return mp_divmod(a, b, p).second; }

ModPoly mp_monic(const ModPoly& a, u64 p) {
  if (a.empty()) return a;
  return mp_scale(a, invmod(a.back(), p), p);
}

ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

// Returns (g, s, t) with s a + t b = g, g monic.
void mp_ext_gcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& g, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(r0, r1, p);
    ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = invmod(r0.back(), p);
  g = mp_scale(r0, inv, p);
  s = mp_scale(s0, inv, p);
  t = mp_scale(t0, inv, p);
}

ModPoly mp_derivative(const ModPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  trim(r);
  return r;
}

ModPoly mp_powmod(ModPoly base, const Integer& e, const ModPoly& m, u64 p) {
  ModPoly result{1};
  base = mp_rem(base, m, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = mp_rem(mp_mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mp_rem(mp_mul(result, base, p), m, p);
  }
  return result;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f, u64 p) {
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly x{0, 1};
  ModPoly h = x;
  int i = 1;
  while (static_cast<int>(f.size()) - 1 >= 2 * i) {
    h = mp_powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    ModPoly g = mp_gcd(mp_sub(h, x, p), f, p);
    if (g.size() > 1) {
      out.emplace_back(g, i);
      f = mp_divmod(f, g, p).first;
      h = mp_rem(h, f, p);
    }
    ++i;
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

void equal_degree(const ModPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  Integer e = (pd - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    ModPoly a(static_cast<size_t>(n));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (a.size() <= 1) continue;
    ModPoly b = mp_powmod(a, e, g, p);
    b = mp_sub(b, ModPoly{1}, p);
    ModPoly u = mp_gcd(b, g, p);
    if (u.size() > 1 && u.size() < g.size()) {
      equal_degree(u, d, p, rng, out);
      equal_degree(mp_divmod(g, u, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(const ModPoly& monic_f, u64 p) {
  std::mt19937_64 rng(0x5eed5eedULL ^ p);
  std::vector<ModPoly> out;
  for (auto& [g, d] : distinct_degree(monic_f, p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------- Z[x] mod M

void z_trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  z_trim(r);
  return r;
}

ZPoly z_mod(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  z_trim(a);
  return a;
}

ZPoly z_symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  z_trim(a);
  return a;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

ZPoly z_primitive(ZPoly a) {
  z_trim(a);
  if (a.empty()) return a;
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(a.back()) < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// Exact division a / b in Z[x]; returns false if b does not divide a.
bool z_divides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) return false;
  if (a.size() < b.size()) return a.empty();
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  size_t db = b.size() - 1;
  for (size_t i = a.size(); i-- > db;) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer f;
    mpz_divexact(f.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
    q[i - db] = f;
    for (size_t j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
  }
  for (size_t i = 0; i < db; ++i)
    if (sgn(r[i]) != 0) return false;
  z_trim(q);
  quotient = std::move(q);
  return true;
}

// Lifts f = g h (mod p) to f = G H (mod p^k), with g monic.
void hensel_pair(const ZPoly& f, const ModPoly& g0, const ModPoly& h0, u64 p, unsigned k, const Integer& modulus,
                 ZPoly& g_out, ZPoly& h_out) {
  ModPoly gg, s, t;
  mp_ext_gcd(g0, h0, p, gg, s, t);
  if (gg.size() != 1) throw std::logic_error("hensel: factors not coprime");
  ZPoly g = from_mod(g0), h = from_mod(h0);
  Integer pj = static_cast<unsigned long>(p);
  for (unsigned j = 1; j < k; ++j) {
    ZPoly e = z_mod(f, modulus);
    ZPoly gh = z_mul(g, h);
    e.resize(std::max(e.size(), gh.size()), Integer(0));
    for (size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    z_trim(e);
    ModPoly ep(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      mpz_fdiv_r(e[i].get_mpz_t(), e[i].get_mpz_t(), modulus.get_mpz_t());
      Integer c;
      mpz_divexact(c.get_mpz_t(), e[i].get_mpz_t(), pj.get_mpz_t());
      ep[i] = reduce(c, p);
    }
    trim(ep);
    if (!ep.empty()) {
      auto [q, r] = mp_divmod(mp_mul(t, ep, p), g0, p);
      ModPoly dh = mp_add(mp_mul(s, ep, p), mp_mul(q, h0, p), p);
      const ModPoly& dg = r;
      if (g.size() < dg.size()) g.resize(dg.size(), Integer(0));
      for (size_t i = 0; i < dg.size(); ++i) g[i] += pj * Integer(static_cast<unsigned long>(dg[i]));
      if (h.size() < dh.size()) h.resize(dh.size(), Integer(0));
      for (size_t i = 0; i < dh.size(); ++i) h[i] += pj * Integer(static_cast<unsigned long>(dh[i]));
    }
    pj *= static_cast<unsigned long>(p);
  }
  g_out = z_mod(g, modulus);
  h_out = z_mod(h, modulus);
}

// Lifts f = lc(f) * prod(factors) (mod p) to monic factors mod p^k.
void hensel_multi(const ZPoly& f, const std::vector<ModPoly>& factors, u64 p, unsigned k, const Integer& modulus,
                  std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly g = f;
    for (auto& c : g) c *= inv;
    out.push_back(z_mod(g, modulus));
    return;
  }
  size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  ModPoly g0{1}, h0{reduce(f.back(), p)};
  for (const auto& a : left) g0 = mp_mul(g0, a, p);
  for (const auto& a : right) h0 = mp_mul(h0, a, p);
  ZPoly g, h;
  hensel_pair(f, g0, h0, p, k, modulus, g, h);
  hensel_multi(g, left, p, k, modulus, out);
  hensel_multi(h, right, p, k, modulus, out);
}

Integer factor_bound(const ZPoly& f) {
  Integer sq = 0;
  for (const auto& c : f) sq += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
  root += 1;
  Integer b = root * abs(f.back());
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(f.size()));
  return b;
}

bool next_combination(std::vector<size_t>& idx, size_t n) {
  size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_probable_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ZPoly to_zpoly(const UniPoly& primitive) {
  ZPoly z;
  z.reserve(primitive.coeffs().size());
  for (const auto& c : primitive.coeffs()) {
    if (c.get_den() != 1) throw std::logic_error("to_zpoly: non-integer coefficient");
    z.push_back(c.get_num());
  }
  return z;
}

UniPoly from_zpoly(const ZPoly& z) {
  std::vector<Rational> c;
  c.reserve(z.size());
  for (const auto& v : z) c.emplace_back(v);
  return UniPoly(std::move(c));
}

ZPoly modular_gcd(const ZPoly& a_in, const ZPoly& b_in) {
  ZPoly a = z_primitive(a_in), b = z_primitive(b_in);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() == 1 || b.size() == 1) return {Integer(1)};
  Integer lcg;
  mpz_gcd(lcg.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
  size_t best_deg = std::min(a.size(), b.size());  // degree + 1 bound
  ZPoly acc;
  Integer modulus = 0;
  ZPoly previous;
  for (u64 p : large_primes()) {
    if (mpz_divisible_ui_p(a.back().get_mpz_t(), p) || mpz_divisible_ui_p(b.back().get_mpz_t(), p)) continue;
    ModPoly gp = mp_gcd(to_mod(a, p), to_mod(b, p), p);
    if (gp.size() == 1) return {Integer(1)};
    if (gp.size() > best_deg) continue;
    gp = mp_scale(gp, reduce(lcg, p), p);
    gp.resize(gp.size(), 0);
    if (gp.size() < best_deg || sgn(modulus) == 0) {
      best_deg = gp.size();
      acc = from_mod(gp);
      modulus = static_cast<unsigned long>(p);
      previous.clear();
    } else {
      // Chinese remaindering, coefficientwise.
      Integer inv;
      Integer pz = static_cast<unsigned long>(p);
      mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      acc.resize(best_deg, Integer(0));
      for (size_t i = 0; i < best_deg; ++i) {
        u64 gi = i < gp.size() ? gp[i] : 0;
        Integer diff = Integer(static_cast<unsigned long>(gi)) - acc[i];
        diff = diff * inv;
        mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), pz.get_mpz_t());
        acc[i] += modulus * diff;
      }
      modulus *= pz;
    }
    ZPoly candidate = z_primitive(z_symmetric(acc, modulus));
    if (candidate == previous) {
      ZPoly q;
      if (z_divides(a, candidate, q) && z_divides(b, candidate, q)) return candidate;
    }
    previous = std::move(candidate);
  }
  throw std::runtime_error("modular gcd: ran out of primes");
}

std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const size_t n = f.size() - 1;
  if (n <= 1) return {f};

  // Prime choice: fewest modular factors among a handful of good primes.
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int good = 0;
  for (u64 p = 10007; good < 6; p += 2) {
    if (!is_probable_prime(p)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    ModPoly fp = to_mod(f, p);
    ModPoly g = mp_gcd(fp, mp_derivative(fp, p), p);
    if (g.size() != 1) continue;
    ++good;
    auto facs = factor_mod_p(mp_monic(fp, p), p);
    if (facs.size() == 1) return {f};
    if (best.empty() || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
  }
  const u64 p = best_p;

  Integer bound = 2 * factor_bound(f) * abs(f.back());
  Integer modulus = static_cast<unsigned long>(p);
  unsigned k = 1;
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(p);
    ++k;
  }
  std::vector<ZPoly> lifted;
  hensel_multi(z_mod(f, modulus), best, p, k, modulus, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<size_t> remaining(lifted.size());
  for (size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly g{rest.back()};
      for (size_t i : idx) g = z_mod(z_mul(g, lifted[remaining[i]]), modulus);
      g = z_primitive(z_symmetric(g, modulus));
      if (sgn(rest.front()) != 0 && sgn(g.front()) != 0 &&
          !mpz_divisible_p(rest.front().get_mpz_t(), g.front().get_mpz_t()))
        continue;
      ZPoly q;
      if (z_divides(rest, g, q)) {
        result.push_back(g);
        rest = z_primitive(q);
        std::vector<size_t> keep;
        for (size_t i = 0; i < remaining.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        found = true;
        break;
      }
    } while (next_combination(idx, remaining.size()));
    if (!found) ++s;
  }
  if (rest.size() > 1) result.push_back(rest);
  return result;
}

}  // namespace detail

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p_in) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p_in.degree() <= 0) return out;
  UniPoly p = p_in.monic();
  UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = exact_quotient(p, a);
  UniPoly c = exact_quotient(dp, a);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const Rational& x = a.coeffs()[static_cast<size_t>(i)];
    const Rational& y = b.coeffs()[static_cast<size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

std::vector<UniPoly> factor_squarefree(const UniPoly& sqf) {
  std::vector<UniPoly> out;
  UniPoly p = sqf;
  // Split off x first; everything else goes through Zassenhaus.
  if (p.degree() >= 1 && is_zero(p.coeff(0))) {
    out.push_back(UniPoly::variable());
    p = exact_quotient(p, UniPoly::variable());
  }
  if (p.degree() == 1) {
    out.push_back(p.monic());
  } else if (p.degree() > 1) {
    for (const auto& z : detail::zassenhaus(detail::to_zpoly(primitive_part(p))))
      out.push_back(detail::from_zpoly(z).monic());
  }
  return out;
}

}  // namespace

std::vector<std::pair<UniPoly, int>> factor(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  for (const auto& [sqf, mult] : squarefree_decomposition(p))
    for (auto& f : factor_squarefree(sqf)) out.emplace_back(std::move(f), mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

std::vector<UniPoly> irreducible_factors(const UniPoly& p) {
  std::vector<UniPoly> out;
  if (p.degree() <= 0) return out;
  out = factor_squarefree(squarefree_part(p));
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

}  // namespace ruledsym
