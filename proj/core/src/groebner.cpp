#include "tfp/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "tfp/errors.hpp"

namespace tfp {

namespace {

struct ActiveLess {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->compare(a, b) == Ordering::LT;
  }
};

using WorkPoly = std::map<Monomial, Rational, ActiveLess>;

struct Reducer {
  const Polynomial* poly;
  Monomial lm;
  Rational lc;
  unsigned long long mask = 0;  // support of lm, for a cheap divisibility filter
};

Term leading_term(const Polynomial& f, const TermOrder& order) {
  const auto& terms = f.terms();
  size_t best = 0;
  for (size_t i = 1; i < terms.size(); ++i)
    if (order.compare(terms[i].mon, terms[best].mon) == Ordering::GT) best = i;
  return terms[best];
}

Reducer make_reducer(const Polynomial& f, const TermOrder& order) {
  Term lt = leading_term(f, order);
  unsigned long long mask = lt.mon.support_mask();
  return {&f, std::move(lt.mon), std::move(lt.coeff), mask};
}

WorkPoly to_work(const Polynomial& f, const TermOrder& order) {
  WorkPoly w(ActiveLess{&order});
  for (const Term& t : f.terms()) w.emplace(t.mon, t.coeff);
  return w;
}

Polynomial from_work(const WorkPoly& w, const RingSpec& ring) {
  std::vector<Term> terms;
  terms.reserve(w.size());
  for (const auto& [m, c] : w) terms.push_back({m, c});
  return Polynomial::from_terms(ring, std::move(terms));
}

void work_sub_mul(WorkPoly& w, const Rational& c, const Monomial& m, const Polynomial& g) {
  // w -= c * m * g
  for (const Term& t : g.terms()) {
    Monomial key = t.mon * m;
    auto it = w.find(key);
    if (it == w.end()) {
      w.emplace(std::move(key), -(c * t.coeff));
    } else {
      it->second -= c * t.coeff;
      if (is_zero(it->second)) w.erase(it);
    }
  }
}

/// Core division loop. `quotients` may be null when only the remainder is
/// wanted. Always reduces by the earliest divisor.
Polynomial reduce_full(const Polynomial& f, std::span<const Reducer> G,
                       const TermOrder& order, std::vector<WorkPoly>* quotients) {
  WorkPoly p = to_work(f, order);
  WorkPoly r(ActiveLess{&order});
  while (!p.empty()) {
    auto lead = std::prev(p.end());
    unsigned long long lead_mask = lead->first.support_mask();
    bool reduced = false;
    for (size_t gi = 0; gi < G.size(); ++gi) {
      if (G[gi].mask & ~lead_mask) continue;
      if (!G[gi].lm.divides(lead->first)) continue;
      Monomial m = lead->first / G[gi].lm;
      Rational c = lead->second / G[gi].lc;
      if (quotients) {
        auto it = (*quotients)[gi].find(m);
        if (it == (*quotients)[gi].end())
          (*quotients)[gi].emplace(m, c);
        else {
          it->second += c;
          if (is_zero(it->second)) (*quotients)[gi].erase(it);
        }
      }
      work_sub_mul(p, c, m, *G[gi].poly);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.emplace(lead->first, lead->second);
      p.erase(lead);
    }
  }
  return from_work(r, f.ring());
}

std::vector<Reducer> make_reducers(std::span<const Polynomial> G, const TermOrder& order) {
  std::vector<Reducer> red;
  red.reserve(G.size());
  for (const Polynomial& g : G) {
    if (g.is_zero()) throw ZeroPolynomial("zero divisor in reduction set");
    red.push_back(make_reducer(g, order));
  }
  return red;
}

void require_global(const TermOrder& order) {
  if (!order.is_global())
    throw Error("order has negative weights and is not a term order");
}

Polynomial make_monic(const Polynomial& f, const TermOrder& order) {
  Term lt = leading_term(f, order);
  return f.mul_scalar(Rational(1) / lt.coeff);
}

Polynomial spoly(const Polynomial& fi, const Reducer& ri, const Polynomial& fj,
                 const Reducer& rj) {
  Monomial l = lcm(ri.lm, rj.lm);
  return fi.mul_term(l / ri.lm, Rational(1) / ri.lc) -
         fj.mul_term(l / rj.lm, Rational(1) / rj.lc);
}

/// Pending S-pairs keyed for the normal selection strategy: minimal lcm
/// degree first, then lexicographic pair index.
using PairSet = std::set<std::tuple<long long, int, int>>;

/// Gebauer-Moller organization of Buchberger's coprimality and chain
/// criteria, applied when the pairs of a new basis element are created:
///   - drop (i,m) when another lcm(j,m) strictly divides lcm(i,m);
///   - among equal-lcm pairs drop the whole class if one of them is coprime,
///     otherwise keep the smallest index;
///   - drop an older pending (i,j) once lm_m divides its lcm and both new
///     lcms differ from it.
void update_pairs(PairSet& pairs, const std::vector<Reducer>& reducers, int m) {
  const Monomial& tau = reducers[m].lm;
  const unsigned long long tau_mask = reducers[m].mask;
  std::vector<Monomial> L;
  L.reserve(m);
  std::vector<long long> Ldeg(m);
  std::vector<unsigned long long> Lmask(m);
  for (int i = 0; i < m; ++i) {
    L.push_back(lcm(reducers[i].lm, tau));
    Ldeg[i] = L.back().total_degree();
    Lmask[i] = reducers[i].mask | tau_mask;
  }

  // Support masks and degrees reject almost every candidate before the
  // exponentwise divisibility test runs.
  std::vector<char> alive(m, 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m && alive[i]; ++j) {
      if (j == i || Ldeg[j] >= Ldeg[i] || (Lmask[j] & ~Lmask[i])) continue;
      if (L[j].divides(L[i])) alive[i] = 0;
    }

  // Equal-lcm classes: coprimality kills the class, otherwise one survives.
  for (int i = 0; i < m; ++i) {
    if (!alive[i]) continue;
    bool coprime_class = reducers[i].lm.coprime(tau);
    for (int j = i + 1; j < m; ++j) {
      if (!alive[j] || Ldeg[j] != Ldeg[i] || Lmask[j] != Lmask[i] || L[j] != L[i])
        continue;
      alive[j] = 0;
      if (reducers[j].lm.coprime(tau)) coprime_class = true;
    }
    if (coprime_class) alive[i] = 0;
  }

  for (auto it = pairs.begin(); it != pairs.end();) {
    auto [deg, i, j] = *it;
    if (tau_mask & ~(reducers[i].mask | reducers[j].mask)) {
      ++it;
      continue;
    }
    Monomial lij = lcm(reducers[i].lm, reducers[j].lm);
    if (tau.divides(lij) && lcm(reducers[i].lm, tau) != lij &&
        lcm(reducers[j].lm, tau) != lij)
      it = pairs.erase(it);
    else
      ++it;
  }

  for (int i = 0; i < m; ++i)
    if (alive[i]) pairs.insert({L[i].total_degree(), i, m});
}

/// Shared driver for buchberger() and is_groebner(). When `extend` is false
/// the basis is left untouched and the first nonzero remainder aborts.
/// A deque keeps references into the basis stable while it grows.
bool buchberger_loop(std::deque<Polynomial>& basis, std::vector<Reducer>& reducers,
                     const TermOrder& order, const ComputeLimits& limits, bool extend,
                     long long& reductions) {
  PairSet pairs;
  for (int m = 1; m < static_cast<int>(basis.size()); ++m)
    update_pairs(pairs, reducers, m);

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (limits.max_degree && deg > *limits.max_degree)
      throw LimitExceeded("max_degree", {basis.begin(), basis.end()}, reductions);

    ++reductions;
    if (limits.max_pair_reductions && reductions > *limits.max_pair_reductions)
      throw LimitExceeded("max_pair_reductions", {basis.begin(), basis.end()}, reductions);

    Polynomial h = reduce_full(spoly(basis[i], reducers[i], basis[j], reducers[j]),
                               reducers, order, nullptr);
    if (h.is_zero()) continue;
    if (!extend) return false;

    basis.push_back(make_monic(h, order));
    reducers.push_back(make_reducer(basis.back(), order));
    if (limits.max_basis_size &&
        static_cast<long long>(basis.size()) > *limits.max_basis_size)
      throw LimitExceeded("max_basis_size", {basis.begin(), basis.end()}, reductions);
    update_pairs(pairs, reducers, static_cast<int>(basis.size()) - 1);
  }
  return true;
}

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> G,
                      const TermOrder& order) {
  require_global(order);
  for (const Polynomial& g : G)
    if (!g.ring().same_ring(f.ring())) throw RingMismatch("divide");
  std::vector<Reducer> red = make_reducers(G, order);
  std::vector<WorkPoly> quots(G.size(), WorkPoly(ActiveLess{&order}));
  DivisionResult res;
  res.remainder = reduce_full(f, red, order, &quots);
  res.quotients.reserve(G.size());
  for (const auto& q : quots) res.quotients.push_back(from_work(q, f.ring()));
  return res;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       const TermOrder& order) {
  require_global(order);
  for (const Polynomial& g : G)
    if (!g.ring().same_ring(f.ring())) throw RingMismatch("normal_form");
  std::vector<Reducer> red = make_reducers(G, order);
  return reduce_full(f, red, order, nullptr);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                         const ComputeLimits& limits) {
  require_global(order);
  RingSpec ring;
  for (const Polynomial& g : gens) {
    ring = g.ring();
    break;
  }
  if (!ring) throw Error("buchberger: no generators, ring unknown");

  long long reductions = 0;

  // Deterministic input pre-reduction; shrinks the pair set without changing
  // the ideal (the reduced basis is unique either way).
  std::deque<Polynomial> basis;
  std::vector<Reducer> reducers;
  for (const Polynomial& g : gens) {
    if (!g.ring().same_ring(ring)) throw RingMismatch("buchberger");
    if (g.is_zero()) continue;
    Polynomial h = reduce_full(g, reducers, order, nullptr);
    if (h.is_zero()) continue;
    basis.push_back(make_monic(h, order));
    reducers.push_back(make_reducer(basis.back(), order));
  }
  if (basis.empty()) return {ring, {}, order, true};

  buchberger_loop(basis, reducers, order, limits, /*extend=*/true, reductions);

  // Minimalize: drop generators whose leading monomial is divisible by
  // another's. Process by ascending leading monomial.
  std::vector<int> idx(basis.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    Ordering c = order.compare(reducers[a].lm, reducers[b].lm);
    if (c != Ordering::EQ) return c == Ordering::LT;
    return a < b;
  });
  std::vector<int> kept;
  for (int i : idx) {
    bool divisible = false;
    for (int k : kept)
      if (reducers[k].lm.divides(reducers[i].lm)) {
        divisible = true;
        break;
      }
    if (!divisible) kept.push_back(i);
  }

  // Inter-reduce tails in place; leading monomials never change, so one
  // sequential pass reaches the reduced basis.
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (int i : kept) out.push_back(basis[i]);
  for (size_t i = 0; i < out.size(); ++i) {
    std::vector<Reducer> others;
    others.reserve(out.size() - 1);
    for (size_t j = 0; j < out.size(); ++j)
      if (j != i) others.push_back(make_reducer(out[j], order));
    out[i] = make_monic(reduce_full(out[i], others, order, nullptr), order);
  }
  return {ring, std::move(out), order, true};
}

bool is_groebner(std::span<const Polynomial> G, const TermOrder& order) {
  require_global(order);
  if (G.empty()) throw Error("is_groebner: empty generator set");
  std::deque<Polynomial> basis(G.begin(), G.end());
  for (const Polynomial& g : basis) {
    if (g.is_zero()) throw ZeroPolynomial("is_groebner: zero generator");
    if (!g.ring().same_ring(basis[0].ring())) throw RingMismatch("is_groebner");
  }
  std::vector<Reducer> reducers;
  reducers.reserve(basis.size());
  for (const Polynomial& g : basis) reducers.push_back(make_reducer(g, order));
  long long reductions = 0;
  return buchberger_loop(basis, reducers, order, ComputeLimits::unbounded(),
                         /*extend=*/false, reductions);
}

Polynomial initial_form(const Polynomial& f, const WeightStack& w) {
  if (f.is_zero()) return f;
  // Scale each stage to integers once; comparisons are then exact in int64.
  std::vector<std::vector<long long>> scaled;
  for (const auto& stage : w) {
    if (static_cast<int>(stage.size()) != f.ring().size())
      throw RingMismatch("initial_form: weight width");
    Integer den(1);
    for (const Rational& q : stage) den = lcm(den, q.get_den());
    std::vector<long long> row(stage.size());
    for (size_t i = 0; i < stage.size(); ++i) {
      Rational v = stage[i] * Rational(den);
      row[i] = v.get_num().get_si();
    }
    scaled.push_back(std::move(row));
  }
  auto weight_tuple = [&](const Monomial& m) {
    std::vector<long long> t(scaled.size(), 0);
    for (size_t s = 0; s < scaled.size(); ++s)
      for (int v = 0; v < m.nvars(); ++v)
        if (m.exp(v)) t[s] += scaled[s][v] * m.exp(v);
    return t;
  };
  std::vector<long long> best;
  bool first = true;
  for (const Term& t : f.terms()) {
    auto wt = weight_tuple(t.mon);
    if (first || wt > best) {
      best = std::move(wt);
      first = false;
    }
  }
  std::vector<Term> keep;
  for (const Term& t : f.terms())
    if (weight_tuple(t.mon) == best) keep.push_back(t);
  return Polynomial::from_terms(f.ring(), std::move(keep));
}

std::vector<Polynomial> initial_forms(std::span<const Polynomial> G, const WeightStack& w) {
  std::vector<Polynomial> out;
  out.reserve(G.size());
  for (const Polynomial& g : G) out.push_back(initial_form(g, w));
  return out;
}

bool ideal_equal(std::span<const Polynomial> A, std::span<const Polynomial> B,
                 const TermOrder& order, const ComputeLimits& limits) {
  auto all_zero = [](std::span<const Polynomial> G) {
    for (const Polynomial& g : G)
      if (!g.is_zero()) return false;
    return true;
  };
  bool az = all_zero(A), bz = all_zero(B);
  if (az || bz) return az == bz;
  GroebnerBasis ga = buchberger(A, order, limits);
  GroebnerBasis gb = buchberger(B, order, limits);
  for (const Polynomial& a : A)
    if (!a.is_zero() && !normal_form(a, gb.generators, order).is_zero()) return false;
  for (const Polynomial& b : B)
    if (!b.is_zero() && !normal_form(b, ga.generators, order).is_zero()) return false;
  return true;
}

HilbertTable standard_monomial_table(const GroebnerBasis& G, const MultiGrading& g,
                                     int bound) {
  if (!g.omega())
    throw MissingCertificate("standard_monomial_table needs an omega certificate");
  RingSpec ring = G.ring;
  if (!ring) throw Error("standard_monomial_table: basis carries no ring");
  if (ring.size() != g.nvars()) throw RingMismatch("standard_monomial_table");

  std::vector<Monomial> lms;
  for (const Polynomial& p : G.generators)
    if (!p.is_zero()) lms.push_back(leading_term(p, G.order).mon);

  // With the certificate, omega^T u equals total degree, so the bound is a
  // straight total-degree cap on the enumeration.
  HilbertTable table;
  int n = ring.size();
  Monomial m(n);
  auto standard = [&](const Monomial& mon) {
    for (const Monomial& lm : lms)
      if (lm.divides(mon)) return false;
    return true;
  };
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == n) {
      if (standard(m)) table[g.monomial_degree(m)] += 1;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      m.exp(var) = e;
      rec(var + 1, remaining - e);
    }
    m.exp(var) = 0;
  };
  rec(0, bound);
  return table;
}

}  // namespace tfp
