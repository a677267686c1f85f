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


#include "ruledsym/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

#include "ruledsym/factor.hpp"

namespace ruledsym {

using detail::ZPoly;

namespace {

struct ScopedDefaults {
  bool active = false;
  Rational budget;
  bool exact_fallback = true;
};

thread_local ScopedDefaults scoped_defaults;

}  // namespace

Rational PrecisionPolicy::default_budget() {
  if (scoped_defaults.active) return scoped_defaults.budget;
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, 60);
  return Rational(Integer(1), d);
}

bool PrecisionPolicy::default_exact_fallback() {
  return scoped_defaults.active ? scoped_defaults.exact_fallback : true;
}

PrecisionScope::PrecisionScope(const PrecisionPolicy& policy)
    : saved_budget_(scoped_defaults.budget),
      saved_fallback_(scoped_defaults.exact_fallback),
      saved_active_(scoped_defaults.active) {
  scoped_defaults = {true, policy.budget, policy.exact_fallback};
}

PrecisionScope::~PrecisionScope() { scoped_defaults = {saved_active_, saved_budget_, saved_fallback_}; }

PrecisionPolicy PrecisionPolicy::from_bits(unsigned bits) {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, bits);
  PrecisionPolicy p;
  p.budget = Rational(Integer(1), d);
  return p;
}

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval inverse(const Interval& x) {
  if (x.contains_zero()) throw std::domain_error("interval inverse across zero");
  return {1 / x.hi, 1 / x.lo};
}

Interval eval_interval(const UniPoly& p, const Interval& x) {
  Interval acc(Rational(0));
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

Rational dyadic(long exponent) {
  Rational r(1);
  if (exponent >= 0)
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
  else
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  return r;
}

// Sign of p(x) for an integer polynomial, evaluated without fractions.
int zsign_at(const ZPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = p.back();
  Integer bp = 1;
  for (size_t i = p.size() - 1; i-- > 0;) {
    bp *= b;
    acc = acc * a + p[i] * bp;
  }
  return sgn(acc);
}

int variations(const ZPoly& p) {
  int count = 0, last = 0;
  for (const auto& c : p) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void taylor_shift_one(ZPoly& a) {
  const size_t n = a.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j-- > i;) a[j] += a[j + 1];
}

// Descartes bound on the number of roots of P in (0, 1).
int descartes01(const ZPoly& P) {
  ZPoly r(P.rbegin(), P.rend());
  taylor_shift_one(r);
  return variations(r);
}

void remove_content(ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Roots of P in (0,1) scaled to the cell (c/2^k, (c+1)/2^k). P(0), P(1) and
// P at every dyadic midpoint are nonzero (no rational roots).
void isolate01(const ZPoly& P, const Integer& c, unsigned k, std::vector<std::pair<Integer, unsigned>>& out) {
  int v = descartes01(P);
  if (v == 0) return;
  if (v == 1) {
    out.emplace_back(c, k);
    return;
  }
  const size_t d = P.size() - 1;
  ZPoly left(P.size());
  for (size_t i = 0; i <= d; ++i) {
    left[i] = P[i];
    mpz_mul_2exp(left[i].get_mpz_t(), left[i].get_mpz_t(), static_cast<mp_bitcnt_t>(d - i));
  }
  remove_content(left);
  ZPoly right = left;
  taylor_shift_one(right);
  isolate01(left, 2 * c, k + 1, out);
  isolate01(right, 2 * c + 1, k + 1, out);
}

// Isolating open intervals for the real roots of an irreducible integer
// polynomial of degree at least two, increasing order.
std::vector<Interval> isolate_irreducible(const ZPoly& p) {
  Rational bound = pow2_bound(root_bound(detail::from_zpoly(p)));
  long e = 0;
  for (Rational b = bound; b > 1; b /= 2) ++e;
  const size_t d = p.size() - 1;
  std::vector<Interval> result;
  for (int side : {-1, 1}) {
    // P(x) = p(side * 2^e * x) for x in (0,1).
    ZPoly P(p.size());
    for (size_t i = 0; i <= d; ++i) {
      P[i] = p[i];
      mpz_mul_2exp(P[i].get_mpz_t(), P[i].get_mpz_t(), static_cast<mp_bitcnt_t>(static_cast<long>(i) * e));
      if (side < 0 && (i % 2 == 1)) P[i] = -P[i];
    }
    remove_content(P);
    std::vector<std::pair<Integer, unsigned>> cells;
    isolate01(P, 0, 0, cells);
    for (auto& [c, k] : cells) {
      Rational lo = Rational(c) * dyadic(e - static_cast<long>(k));
      Rational hi = Rational(c + 1) * dyadic(e - static_cast<long>(k));
      lo.canonicalize();
      hi.canonicalize();
      if (side < 0)
        result.emplace_back(-hi, -lo);
      else
        result.emplace_back(lo, hi);
    }
  }
  std::sort(result.begin(), result.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return result;
}

// Rejects non-positive widths.
Rational clamp_width(const Rational& w) {
  if (sgn(w) <= 0) throw std::invalid_argument("refinement width must be positive");
  return w;
}

// Bounds l <= sqrt(q) <= u for q >= 0 with u - l about 2^-bits.
Interval sqrt_bounds(const Rational& q, unsigned bits) {
  if (sgn(q) <= 0) return {Rational(0), Rational(0)};
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, 2 * bits);
  Integer lo_n, hi_n;
  Integer num_floor, num_ceil;
  mpz_fdiv_q(num_floor.get_mpz_t(), Integer(q.get_num() * scale).get_mpz_t(), q.get_den_mpz_t());
  mpz_cdiv_q(num_ceil.get_mpz_t(), Integer(q.get_num() * scale).get_mpz_t(), q.get_den_mpz_t());
  mpz_sqrt(lo_n.get_mpz_t(), num_floor.get_mpz_t());
  mpz_sqrt(hi_n.get_mpz_t(), num_ceil.get_mpz_t());
  if (hi_n * hi_n < num_ceil) hi_n += 1;
  Rational d = dyadic(static_cast<long>(bits));
  return {Rational(lo_n) / d, Rational(hi_n) / d};
}

// Number of halvings of 1 needed to reach `width`.
unsigned bits_for(const Rational& width) {
  unsigned bits = 0;
  Rational w = 1;
  while (w > width) {
    w /= 2;
    ++bits;
  }
  return bits;
}

}  // namespace

// ---------------------------------------------------------- AlgebraicNumber

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}

AlgebraicNumber::AlgebraicNumber(const Rational& value) : lo_(value), hi_(value) {
  auto d = std::make_shared<Data>();
  d->minpoly = UniPoly(std::vector<Rational>{-value, Rational(1)});
  d->integer_poly = detail::to_zpoly(primitive_part(d->minpoly));
  data_ = std::move(d);
}

AlgebraicNumber AlgebraicNumber::from_isolated_root(const UniPoly& irreducible, const Rational& lo,
                                                    const Rational& hi) {
  if (irreducible.degree() < 1) throw std::invalid_argument("minimal polynomial must be non-constant");
  if (irreducible.degree() == 1) {
    UniPoly m = irreducible.monic();
    return AlgebraicNumber(Rational(-m.coeff(0)));
  }
  auto d = std::make_shared<Data>();
  d->minpoly = irreducible.monic();
  d->integer_poly = detail::to_zpoly(primitive_part(d->minpoly));
  return AlgebraicNumber(std::move(d), lo, hi);
}

const Rational& AlgebraicNumber::rational() const {
  if (!is_rational()) throw std::domain_error("algebraic number is irrational");
  return lo_;
}

int AlgebraicNumber::sign_at(const Rational& x) const { return zsign_at(data_->integer_poly, x); }

AlgebraicNumber AlgebraicNumber::refined(const Rational& width) const {
  clamp_width(width);
  if (is_rational() || hi_ - lo_ <= width) return *this;
  Rational lo = lo_, hi = hi_;
  const int slo = sign_at(lo);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (sign_at(mid) == slo)
      lo = mid;
    else
      hi = mid;
  }
  return AlgebraicNumber(data_, lo, hi);
}

AlgebraicNumber refine(const AlgebraicNumber& x, const Rational& width) { return x.refined(width); }

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.lo_, b.lo_);
  if (a.data_ == b.data_ || a.minimal_poly() == b.minimal_poly()) {
    // Same polynomial: equal iff the intersection of the isolating intervals
    // contains a root.
    Rational lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
    if (lo < hi && a.sign_at(lo) * a.sign_at(hi) < 0) return 0;
  }
  AlgebraicNumber x = a, y = b;
  Rational w = std::max(x.hi_ - x.lo_, y.hi_ - y.lo_);
  for (;;) {
    if (x.hi_ < y.lo_) return -1;
    if (y.hi_ < x.lo_) return 1;
    w /= 4;
    x = x.refined(w);
    y = y.refined(w);
  }
}

int AlgebraicNumber::sign() const {
  if (is_rational()) return sgn(lo_);
  return compare(*this, AlgebraicNumber(0));
}

std::string AlgebraicNumber::to_decimal(int digits) const {
  if (is_rational()) return ruledsym::to_decimal(lo_, digits);
  Integer ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(digits) + 2);
  AlgebraicNumber r = refined(Rational(1, ten));
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::string a = ruledsym::to_decimal(r.lo_, digits), b = ruledsym::to_decimal(r.hi_, digits);
    if (a == b) return a;
    r = r.refined((r.hi_ - r.lo_) / 1024);
  }
  return ruledsym::to_decimal(r.lo_, digits);
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  if (is_rational()) return AlgebraicNumber(Rational(-lo_));
  UniPoly m = minimal_poly().negated_variable();
  return from_isolated_root(m, -hi_, -lo_);
}

namespace {

AlgebraicNumber shift_by(const AlgebraicNumber& a, const Rational& r) {
  // Root of m(x - r).
  UniPoly m = a.minimal_poly().compose(UniPoly(std::vector<Rational>{-r, Rational(1)}));
  Interval iv = a.interval();
  return AlgebraicNumber::from_isolated_root(m, iv.lo + r, iv.hi + r);
}

AlgebraicNumber scale_by(const AlgebraicNumber& a, const Rational& r) {
  // Root of m(x / r).
  UniPoly m = a.minimal_poly().compose(UniPoly(std::vector<Rational>{Rational(0), Rational(1 / r)}));
  Interval iv = a.interval() * r;
  return AlgebraicNumber::from_isolated_root(m, iv.lo, iv.hi);
}

}  // namespace

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicNumber(Rational(a.lo_ + b.lo_));
  if (b.is_rational()) return shift_by(a, b.lo_);
  if (a.is_rational()) return shift_by(b, a.lo_);
  const UniPoly& f = a.minimal_poly();
  const UniPoly& g = b.minimal_poly();
  // Res_y(f(y), g(x - y)).
  UniPoly P = interpolated_resultant(
      f, [&g](const Rational& x0) { return g.compose(UniPoly(std::vector<Rational>{x0, Rational(-1)})); },
      f.degree() * g.degree());
  return select_root(P, [&](const Rational& w) { return a.enclosure(w) + b.enclosure(w); });
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicNumber(Rational(a.lo_ * b.lo_));
  if (a.is_rational() && sgn(a.lo_) == 0) return a;
  if (b.is_rational() && sgn(b.lo_) == 0) return b;
  if (b.is_rational()) return scale_by(a, b.lo_);
  if (a.is_rational()) return scale_by(b, a.lo_);
  const UniPoly& f = a.minimal_poly();
  const UniPoly& g = b.minimal_poly();
  const int n = g.degree();
  // Res_y(f(y), y^n g(x / y)).
  UniPoly P = interpolated_resultant(
      f,
      [&g, n](const Rational& x0) {
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        Rational pw = 1;
        for (int i = 0; i <= n; ++i) {
          c[static_cast<size_t>(n - i)] = g.coeff(i) * pw;
          pw *= x0;
        }
        return UniPoly(std::move(c));
      },
      f.degree() * g.degree());
  return select_root(P, [&](const Rational& w) { return a.enclosure(w) * b.enclosure(w); });
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (b.is_rational()) {
    if (sgn(b.lo_) == 0) throw std::domain_error("division by zero");
    return a * AlgebraicNumber(Rational(1 / b.lo_));
  }
  // 1/b is a root of the reversed minimal polynomial.
  AlgebraicNumber x = b;
  while (x.interval().contains_zero()) x = x.refined(x.interval().width() / 4);
  Interval inv = inverse(x.interval());
  AlgebraicNumber binv = AlgebraicNumber::from_isolated_root(b.minimal_poly().reversed(), inv.lo, inv.hi);
  return a * binv;
}

AlgebraicNumber sqrt(const AlgebraicNumber& x) {
  const int s = x.sign();
  if (s < 0) throw std::domain_error("square root of a negative number");
  if (s == 0) return x;
  if (x.is_rational()) {
    const Rational& q = x.rational();
    if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
      Integer n, d;
      mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
      mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
      return AlgebraicNumber(Rational(n, d));
    }
  }
  // Roots of m(y^2).
  UniPoly P = x.minimal_poly().compose(UniPoly::monomial(Rational(1), 2));
  return select_root(P, [&](const Rational& w) {
    Interval iv = x.enclosure(w);
    unsigned bits = bits_for(w) + 2;
    Rational lo = sgn(iv.lo) > 0 ? sqrt_bounds(iv.lo, bits).lo : Rational(0);
    return Interval(lo, sqrt_bounds(iv.hi, bits).hi);
  });
}

// ------------------------------------------------------------- isolation

std::vector<AlgebraicNumber> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<AlgebraicNumber> roots;
  for (const auto& f : irreducible_factors(p)) {
    if (f.degree() == 1) {
      roots.emplace_back(Rational(-f.coeff(0)));
      continue;
    }
    ZPoly z = detail::to_zpoly(primitive_part(f));
    for (const auto& iv : isolate_irreducible(z)) roots.push_back(AlgebraicNumber::from_isolated_root(f, iv.lo, iv.hi));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int sturm_root_count(const UniPoly& p) {
  if (p.degree() <= 0) return 0;
  std::vector<UniPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UniPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  std::vector<int> at_neg, at_pos;
  for (const auto& s : seq) {
    int lc = sgn(s.lc());
    at_pos.push_back(lc);
    at_neg.push_back(s.degree() % 2 == 0 ? lc : -lc);
  }
  return sign_variations(at_neg) - sign_variations(at_pos);
}

AlgebraicNumber select_root(const UniPoly& p, const std::function<Interval(const Rational& width)>& enclose) {
  std::vector<AlgebraicNumber> candidates = isolate_real_roots(p);
  Rational w(1, 16);
  for (int round = 0; round < 4096; ++round) {
    Interval target = enclose(w);
    std::vector<AlgebraicNumber> keep;
    for (const auto& c : candidates) {
      AlgebraicNumber r = c.refined(w);
      if (r.interval().intersects(target)) keep.push_back(std::move(r));
    }
    candidates = std::move(keep);
    if (candidates.size() == 1) return candidates.front();
    if (candidates.empty()) break;
    w /= 256;
  }
  throw std::logic_error("select_root: no root matches the enclosure");
}

UniPoly interpolated_resultant(const UniPoly& a, const std::function<UniPoly(const Rational&)>& b_at, int degree) {
  // Newton interpolation through x = 0, 1, ..., degree.
  const size_t n = static_cast<size_t>(degree) + 1;
  std::vector<Rational> xs(n), coef(n);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = Rational(static_cast<long>(i));
    coef[i] = resultant(a, b_at(xs[i]));
  }
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  UniPoly result;
  for (size_t i = n; i-- > 0;) {
    result = result * UniPoly(std::vector<Rational>{-xs[i], Rational(1)}) + UniPoly::constant(coef[i]);
  }
  return result;
}

}  // namespace ruledsym
