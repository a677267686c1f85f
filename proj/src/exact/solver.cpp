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


#include "ruledsym/solver.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "ruledsym/errors.hpp"

namespace ruledsym {

// ------------------------------------------------------------ evaluation

CertifiedValue eval_interval(const MultiPoly<Rational>& p, const std::vector<AlgebraicNumber>& point,
                             const PrecisionPolicy& policy) {
  if (static_cast<int>(point.size()) != p.arity()) throw std::invalid_argument("eval_interval: arity mismatch");
  bool rational = std::all_of(point.begin(), point.end(), [](const AlgebraicNumber& a) { return a.is_rational(); });
  if (rational) {
    std::vector<Rational> q;
    for (const auto& a : point) q.push_back(a.rational());
    Rational v = p.evaluate(q);
    return {Interval(v), sgn(v)};
  }
  // Single irrational coordinate: exact zero test by minimal-polynomial divisibility.
  std::vector<int> irrational;
  for (int i = 0; i < p.arity(); ++i)
    if (p.uses(i) && !point[static_cast<size_t>(i)].is_rational()) irrational.push_back(i);
  if (irrational.size() == 1) {
    const int var = irrational[0];
    MultiPoly<Rational> q = p;
    for (int i = 0; i < p.arity(); ++i)
      if (i != var && p.uses(i)) q = q.substitute(i, point[static_cast<size_t>(i)].rational());
    UniPoly u = q.to_univariate(var);
    if (rem(u, point[static_cast<size_t>(var)].minimal_poly()).is_zero()) return {Interval(Rational(0)), 0};
  }
  Rational w(1, 1024);
  for (;;) {
    std::vector<Interval> boxes;
    for (const auto& a : point) boxes.push_back(a.enclosure(w));
    Interval v = p.evaluate_with(boxes, Interval(Rational(0)), [](const Rational& c) { return Interval(c); });
    if (int s = v.certain_sign()) return {v, s};
    if (w < policy.budget) {
      if (!policy.exact_fallback) throw PrecisionBudgetExceeded("zero test undecided within the precision budget");
      AlgebraicNumber exact = p.evaluate_with(point, AlgebraicNumber(0), [](const Rational& c) { return AlgebraicNumber(c); });
      return {v, exact.sign()};
    }
    w /= 1u << 16;
  }
}

MultiPoly<FieldElem> to_field_multipoly(const MultiPoly<Rational>& p) {
  return p.map_coefficients<FieldElem>([](const Rational& c) { return FieldElem(c); });
}

namespace {

FieldElem lift(const Rational& c, const FieldElem&) { return FieldElem(c); }
FieldElem lift(const FieldElem& c, const FieldElem& base_embedding) {
  return c.is_rational() ? c : c.mapped(base_embedding);
}

template <class K>
FieldElem evaluate_mapped(const MultiPoly<K>& p, const std::vector<FieldElem>& point, const FieldElem& emb) {
  FieldElem acc;
  for (const auto& [e, c] : p.terms()) {
    FieldElem term = lift(c, emb);
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * point[i];
    acc += term;
  }
  return acc;
}

}  // namespace

FieldElem evaluate_at(const MultiPoly<FieldElem>& p, const std::vector<FieldElem>& point) {
  return evaluate_mapped(p, point, FieldElem());
}
FieldElem evaluate_at(const MultiPoly<Rational>& p, const std::vector<FieldElem>& point) {
  return evaluate_mapped(p, point, FieldElem());
}

namespace {

template <class K>
using System = std::vector<MultiPoly<K>>;

struct Partial {
  std::vector<std::optional<FieldElem>> values;
  FieldElem base_embedding;
};

FieldPtr field_of(const Partial& p) {
  std::vector<FieldElem> xs;
  if (!p.base_embedding.is_zero()) xs.push_back(p.base_embedding);
  for (const auto& v : p.values)
    if (v) xs.push_back(*v);
  return common_field(xs);
}

Partial mapped(const Partial& p, const FieldElem& embedding, const FieldPtr& old_field) {
  if (!old_field) return p;
  Partial q;
  for (const auto& v : p.values) q.values.push_back(v ? std::optional<FieldElem>(v->mapped(embedding)) : std::nullopt);
  q.base_embedding = p.base_embedding.is_zero() ? p.base_embedding : p.base_embedding.mapped(embedding);
  return q;
}

// Univariate polynomial in `var` after substituting the known coordinates.
template <class K>
Poly<FieldElem> specialize(const MultiPoly<K>& p, const Partial& part, int var) {
  std::vector<FieldElem> c(static_cast<size_t>(std::max(p.degree_in(var), 0)) + 1);
  for (const auto& [e, coef] : p.terms()) {
    FieldElem term = lift(coef, part.base_embedding);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0 || static_cast<int>(i) == var) continue;
      const auto& v = part.values[i];
      if (!v) throw std::logic_error("specialize: unknown coordinate");
      for (int k = 0; k < e[i]; ++k) term = term * *v;
    }
    c[static_cast<size_t>(e[static_cast<size_t>(var)])] += term;
  }
  return Poly<FieldElem>(std::move(c));
}

template <class K>
MultiPoly<FieldElem> substitute_known(const MultiPoly<K>& p, const Partial& part) {
  MultiPoly<FieldElem> out(p.arity());
  for (const auto& [e, coef] : p.terms()) {
    FieldElem term = lift(coef, part.base_embedding);
    Exponents f = e;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!part.values[i] || e[i] == 0) continue;
      for (int k = 0; k < e[i]; ++k) term = term * *part.values[i];
      f[i] = 0;
    }
    out.add_term(f, term);
  }
  return out;
}

template <class K>
void add_unique(System<K>& s, const MultiPoly<K>& p) {
  if (p.is_zero()) return;
  MultiPoly<K> m = p.monic();
  for (const auto& q : s)
    if (q == m) return;
  s.push_back(std::move(m));
}

template <class K>
bool has_nonzero_constant(const System<K>& s) {
  return std::any_of(s.begin(), s.end(), [](const MultiPoly<K>& p) { return p.is_constant() && !p.is_zero(); });
}

// gcd with respect to `var` of the coefficients of a bivariate polynomial,
// as a polynomial in `other`.
template <class K>
MultiPoly<K> content_in(const MultiPoly<K>& p, int var, int other) {
  Poly<K> g;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c.to_univariate(other));
    if (g.degree() == 0) break;
  }
  return MultiPoly<K>::from_univariate(p.arity(), other, g);
}

struct ProjectionFailed {};

// One elimination step. Every common zero of `s` projects to a common zero
// of the result.
template <class K>
System<K> project(const System<K>& s, int var, const std::vector<int>& remaining) {
  System<K> with, out;
  for (const auto& p : s) {
    if (p.uses(var))
      with.push_back(p);
    else
      add_unique(out, p);
  }
  if (with.size() <= 1) return out;
  const bool bivariate = remaining.size() == 1;
  std::vector<MultiPoly<K>> contents(with.size()), parts(with.size());
  for (size_t i = 0; i < with.size(); ++i) {
    if (bivariate) {
      contents[i] = content_in(with[i], var, remaining[0]);
      parts[i] = exact_divide(with[i], contents[i]);
    } else {
      contents[i] = MultiPoly<K>::constant(with[i].arity(), K(1));
      parts[i] = with[i];
    }
  }
  std::vector<size_t> idx(with.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    int da = parts[a].degree_in(var), db = parts[b].degree_in(var);
    if (da != db) return da < db;
    // Prefer pivots that keep the next variable to eliminate low.
    da = parts[a].degree_in(remaining[0]);
    db = parts[b].degree_in(remaining[0]);
    if (da != db) return da < db;
    da = parts[a].total_degree();
    db = parts[b].total_degree();
    if (da != db) return da < db;
    return parts[a].terms().size() < parts[b].terms().size();
  });
  // Running gcd for the final univariate step lets us stop early.
  for (size_t pick = 0; pick < std::min<size_t>(idx.size(), 4); ++pick) {
    const size_t a = idx[pick];
    if (parts[a].degree_in(var) <= 0) continue;
    System<K> result = out;
    Poly<K> running;
    bool have_running = false;
    int stable = 0;
    if (bivariate)
      for (const auto& p : out) {
        running = have_running ? gcd(running, p.to_univariate(remaining[0])) : p.to_univariate(remaining[0]);
        have_running = true;
      }
    size_t nonzero = 0;
    for (size_t bi = 0; bi < idx.size(); ++bi) {
      const size_t b = idx[bi];
      if (b == a) continue;
      if (parts[b].degree_in(var) <= 0) {
        add_unique(result, with[b]);
        ++nonzero;
        continue;
      }
      MultiPoly<K> r = resultant(parts[a], parts[b], var);
      if (r.is_zero()) continue;
      r = r * contents[a] * contents[b];
      ++nonzero;
      if (bivariate) {
        Poly<K> u = r.to_univariate(remaining[0]);
        if (!have_running) {
          running = u;
          have_running = true;
        } else {
          Poly<K> g = gcd(running, u);
          stable = g.degree() == running.degree() ? stable + 1 : 0;
          running = g;
        }
        if (running.degree() == 0 || stable >= 2) break;
      } else {
        add_unique(result, r);
      }
    }
    if (nonzero == 0) continue;
    if (bivariate) {
      System<K> single;
      add_unique(single, MultiPoly<K>::from_univariate(with[0].arity(), remaining[0], running));
      if (running.degree() == 0) single = {MultiPoly<K>::constant(with[0].arity(), K(1))};
      return single;
    }
    return result;
  }
  throw ProjectionFailed{};
}

template <class K>
std::vector<SolutionPoint> solve_impl(const System<K>& eqs, const std::vector<int>& order, int depth,
                                      const FieldPtr& base);

template <class K>
std::optional<std::vector<SolutionPoint>> solve_with_order(const System<K>& eqs, const std::vector<int>& order,
                                                           int depth, FieldPtr base) {
  const size_t m = order.size();
  std::vector<System<K>> levels{eqs};
  try {
    for (size_t j = 0; j + 1 < m; ++j) {
      std::vector<int> remaining(order.begin() + static_cast<long>(j) + 1, order.end());
      levels.push_back(project(levels.back(), order[j], remaining));
      if (has_nonzero_constant(levels.back())) return std::vector<SolutionPoint>{};
    }
  } catch (const ProjectionFailed&) {
    return std::nullopt;
  }
  const int last = order.back();
  Poly<K> U;
  for (const auto& p : levels.back()) {
    if (p.is_zero()) continue;
    U = gcd(U, p.to_univariate(last));
  }
  if (U.is_zero()) return std::nullopt;
  if (U.degree() == 0) return std::vector<SolutionPoint>{};

  const int arity = eqs.front().arity();
  std::vector<Partial> partials;
  {
    Poly<FieldElem> u;
    if constexpr (std::is_same_v<K, Rational>) {
      std::vector<FieldElem> c(U.coeffs().begin(), U.coeffs().end());
      u = Poly<FieldElem>(c);
    } else {
      u = U;
    }
    for (const auto& root : real_roots_over(u, base)) {
      Partial p;
      p.values.assign(static_cast<size_t>(arity), std::nullopt);
      p.values[static_cast<size_t>(last)] = root.value;
      p.base_embedding = base ? root.embedding : FieldElem();
      partials.push_back(std::move(p));
    }
  }
  for (size_t jj = m - 1; jj-- > 0;) {
    const int var = order[jj];
    std::vector<Partial> next;
    for (const auto& part : partials) {
      if (part.values[static_cast<size_t>(var)]) {
        next.push_back(part);
        continue;
      }
      FieldPtr F = field_of(part);
      Poly<FieldElem> g;
      for (const auto& p : levels[jj]) {
        Poly<FieldElem> u = specialize(p, part, var);
        if (u.is_zero()) continue;
        g = g.is_zero() ? u : gcd(g, u);
        if (g.degree() == 0) break;
      }
      if (g.is_zero()) {
        // The projected equations lost this fibre; solve the original system
        // over the field of the partial point.
        System<FieldElem> sub;
        for (const auto& p : eqs) add_unique(sub, substitute_known(p, part));
        std::vector<int> sub_order(order.begin(), order.begin() + static_cast<long>(jj) + 1);
        for (const auto& pt : solve_impl(sub, sub_order, depth + 1, F)) {
          Partial q = mapped(part, pt.base_embedding, F);
          for (int v : sub_order) q.values[static_cast<size_t>(v)] = pt.values[static_cast<size_t>(v)];
          next.push_back(std::move(q));
        }
        continue;
      }
      if (g.degree() == 0) continue;
      FieldPtr roots_base = F;
      for (const auto& root : real_roots_over(g, roots_base)) {
        Partial q = mapped(part, root.embedding, roots_base);
        q.values[static_cast<size_t>(var)] = root.value;
        next.push_back(std::move(q));
      }
    }
    partials = std::move(next);
  }
  std::vector<SolutionPoint> out;
  for (const auto& part : partials) {
    SolutionPoint pt;
    for (int i = 0; i < arity; ++i) pt.values.push_back(part.values[static_cast<size_t>(i)].value_or(FieldElem()));
    pt.base_embedding = part.base_embedding;
    bool ok = true;
    for (const auto& e : eqs)
      if (!evaluate_mapped(e, pt.values, pt.base_embedding).is_zero()) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(pt));
  }
  return out;
}

std::vector<AlgebraicNumber> key_of(const SolutionPoint& p) {
  std::vector<AlgebraicNumber> k;
  for (const auto& v : p.values) k.push_back(v.to_algebraic());
  return k;
}

bool key_less(const std::vector<AlgebraicNumber>& a, const std::vector<AlgebraicNumber>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

template <class K>
FieldPtr base_field_of(const System<K>& eqs) {
  if constexpr (std::is_same_v<K, Rational>) {
    return nullptr;
  } else {
    std::vector<FieldElem> cs;
    for (const auto& p : eqs)
      for (const auto& [e, c] : p.terms()) cs.push_back(c);
    return common_field(cs);
  }
}

template <class K>
std::vector<SolutionPoint> solve_impl(const System<K>& eqs_in, const std::vector<int>& order, int depth,
                                      const FieldPtr& base_in) {
  if (depth > 6) throw PositiveDimensional("solver recursion limit reached");
  System<K> eqs;
  for (const auto& p : eqs_in) add_unique(eqs, p);
  if (has_nonzero_constant(eqs)) return {};
  if (order.empty()) return {};
  if (eqs.empty()) throw PositiveDimensional("no equations constrain the unknowns");
  for (int v : order) {
    bool used = std::any_of(eqs.begin(), eqs.end(), [v](const MultiPoly<K>& p) { return p.uses(v); });
    if (!used) throw PositiveDimensional("an unknown does not occur in the system");
  }
  FieldPtr base = base_in ? base_in : base_field_of(eqs);
  std::vector<int> perm = order;
  std::optional<std::vector<SolutionPoint>> found;
  // The requested order first, then every other permutation.
  std::vector<std::vector<int>> orders{order};
  std::sort(perm.begin(), perm.end());
  do {
    if (perm != order) orders.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& o : orders) {
    try {
      found = solve_with_order(eqs, o, depth, base);
    } catch (const PositiveDimensional&) {
      found.reset();
    }
    if (found) break;
  }
  if (!found) throw PositiveDimensional("elimination produced no finite triangular decomposition");
  // Canonical order, duplicates merged.
  std::vector<std::pair<std::vector<AlgebraicNumber>, SolutionPoint>> keyed;
  for (auto& p : *found) keyed.emplace_back(key_of(p), std::move(p));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return key_less(a.first, b.first); });
  std::vector<SolutionPoint> out;
  for (size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && !key_less(keyed[i - 1].first, keyed[i].first)) continue;
    out.push_back(std::move(keyed[i].second));
  }
  return out;
}

}  // namespace

std::vector<SolutionPoint> solve_zero_dimensional(const std::vector<MultiPoly<Rational>>& equations,
                                                  const std::vector<int>& order) {
  return solve_impl(equations, order, 0, nullptr);
}

std::vector<SolutionPoint> solve_zero_dimensional(const std::vector<MultiPoly<FieldElem>>& equations,
                                                  const std::vector<int>& order) {
  return solve_impl(equations, order, 0, nullptr);
}

}  // namespace ruledsym
