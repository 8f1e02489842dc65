#include "tfp/oracle.hpp"

#include <numeric>

#include "tfp/errors.hpp"

namespace tfp {

PolynomialMap PolynomialMap::create(RingSpec source, RingSpec target,
                                    std::vector<Polynomial> images) {
  if (static_cast<int>(images.size()) != source.size())
    throw RingMismatch("one image per source variable required");
  bool monomial = true;
  for (const Polynomial& f : images) {
    if (!f.ring().same_ring(target)) throw RingMismatch("image outside target ring");
    if (!(f.is_monomial() && is_one(f.terms()[0].coeff))) monomial = false;
  }
  return {std::move(source), std::move(target), std::move(images), monomial};
}

Polynomial PolynomialMap::apply(const Polynomial& f) const {
  if (!f.ring().same_ring(source)) throw RingMismatch("apply: polynomial not in source ring");
  Polynomial out = Polynomial::zero(target);
  for (const Term& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (int v = 0; v < t.mon.nvars(); ++v) {
      int e = t.mon.exp(v);
      if (e > 0) prod = prod * images[v].pow(e);
    }
    out = out + prod;
  }
  return out;
}

namespace {

/// Elimination of the target block from the given joint-ring ideal. The joint
/// ring is [target vars, source vars]; stage-1 weight is the indicator of the
/// target block, refined by grevlex, so the restriction of the order to the
/// source block is plain grevlex on the source ring.
GroebnerBasis eliminate_to_source(const PolynomialMap& map,
                                  std::span<const Polynomial> extra_target_gens,
                                  const ComputeLimits& limits) {
  const RingSpec& S = map.source;
  const RingSpec& T = map.target;
  RingSpec joint = concat_rings(T, S);

  std::vector<int> t_to_joint(T.size()), s_to_joint(S.size());
  std::iota(t_to_joint.begin(), t_to_joint.end(), 0);
  std::iota(s_to_joint.begin(), s_to_joint.end(), T.size());

  std::vector<Polynomial> gens;
  for (const Polynomial& f : extra_target_gens)
    gens.push_back(reindex(f, joint, t_to_joint));
  for (int v = 0; v < S.size(); ++v) {
    Polynomial graph = Polynomial::variable(joint, T.size() + v) -
                       reindex(map.images[v], joint, t_to_joint);
    gens.push_back(std::move(graph));
  }
  if (gens.empty()) gens.push_back(Polynomial::zero(joint));

  std::vector<Rational> block(joint.size(), Rational(0));
  for (int v = 0; v < T.size(); ++v) block[v] = 1;
  TermOrder elim = TermOrder::grevlex(joint).with_weights({block});

  GroebnerBasis gb = buchberger(gens, elim, limits);

  std::vector<int> joint_to_s(joint.size(), -1);
  for (int v = 0; v < S.size(); ++v) joint_to_s[T.size() + v] = v;
  std::vector<Polynomial> projected;
  for (const Polynomial& g : gb.generators) {
    bool pure = true;
    for (const Term& t : g.terms())
      for (int v = 0; v < T.size() && pure; ++v)
        if (t.mon.exp(v) > 0) pure = false;
    if (pure) projected.push_back(reindex(g, S, joint_to_s));
  }
  return {S, std::move(projected), TermOrder::grevlex(S), true};
}

}  // namespace

GroebnerBasis kernel(const PolynomialMap& map, const ComputeLimits& limits) {
  return eliminate_to_source(map, {}, limits);
}

GroebnerBasis contract(const PolynomialMap& map, std::span<const Polynomial> target_ideal,
                       const ComputeLimits& limits) {
  for (const Polynomial& f : target_ideal)
    if (!f.ring().same_ring(map.target))
      throw RingMismatch("contract: ideal generators must live in the target ring");
  return eliminate_to_source(map, target_ideal, limits);
}

std::vector<Rational> pullback_weight(std::span<const Rational> w, const PolynomialMap& map) {
  if (!map.monomial_map) throw NotMonomialMap("pullback_weight");
  if (static_cast<int>(w.size()) != map.target.size())
    throw RingMismatch("pullback_weight: weight width != target ring size");
  std::vector<Rational> out(map.source.size(), Rational(0));
  for (int v = 0; v < map.source.size(); ++v) {
    const Monomial& m = map.images[v].terms()[0].mon;
    Rational acc(0);
    for (int t = 0; t < m.nvars(); ++t)
      if (m.exp(t)) acc += w[t] * Rational(m.exp(t));
    out[v] = acc;
  }
  return out;
}

}  // namespace tfp
