#include "tfp/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "tfp/errors.hpp"

namespace tfp {

namespace {

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return cmp_grevlex(a.mon, b.mon) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mon == t.mon) {
      out.back().coeff += t.coeff;
      if (is_zero(out.back().coeff)) out.pop_back();
    } else if (!is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  terms = std::move(out);
}

}  // namespace

Polynomial Polynomial::zero(const RingSpec& ring) {
  Polynomial f;
  f.ring_ = ring;
  return f;
}

Polynomial Polynomial::constant(const RingSpec& ring, const Rational& c) {
  Polynomial f = zero(ring);
  if (!tfp::is_zero(c)) f.terms_.push_back({Monomial::unit(ring.size()), c});
  return f;
}

Polynomial Polynomial::variable(const RingSpec& ring, int idx) {
  return monomial(ring, Monomial::variable(ring.size(), idx));
}

Polynomial Polynomial::monomial(const RingSpec& ring, const Monomial& m, const Rational& c) {
  Polynomial f = zero(ring);
  if (!tfp::is_zero(c)) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::from_terms(const RingSpec& ring, std::vector<Term> terms) {
  for (const Term& t : terms)
    if (t.mon.nvars() != ring.size()) throw RingMismatch("term width != ring size");
  Polynomial f = zero(ring);
  canonicalize(terms);
  f.terms_ = std::move(terms);
  return f;
}

const Term& Polynomial::canonical_leading() const {
  if (terms_.empty()) throw ZeroPolynomial("no leading term");
  return terms_[0];
}

long long Polynomial::total_degree() const {
  long long d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mon.total_degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!ring_.same_ring(o.ring_)) throw RingMismatch("polynomial addition");
  // Merge two canonically sorted term lists.
  Polynomial out = zero(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = cmp_grevlex(terms_[i].mon, o.terms_[j].mon);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (!tfp::is_zero(s)) out.terms_.push_back({terms_[i].mon, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial out = zero(ring_);
  if (tfp::is_zero(c)) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.mon * m, t.coeff * c});
  // Multiplying by a fixed monomial preserves the grevlex order of terms.
  return out;
}

Polynomial Polynomial::mul_scalar(const Rational& c) const {
  return mul_term(Monomial::unit(ring_.size()), c);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!ring_.same_ring(o.ring_)) throw RingMismatch("polynomial multiplication");
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) acc.push_back({a.mon * b.mon, a.coeff * b.coeff});
  return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::pow(int k) const {
  assert(k >= 0);
  Polynomial out = constant(ring_, 1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_.same_ring(o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mon != o.terms_[i].mon || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

int Polynomial::cmp(const Polynomial& a, const Polynomial& b) {
  long long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = cmp_grevlex(a.terms_[i].mon, b.terms_[i].mon);
    if (c != 0) return c;
    if (a.terms_[i].coeff != b.terms_[i].coeff)
      return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

size_t Polynomial::hash() const {
  size_t h = 0;
  for (const Term& t : terms_) {
    h = h * 1000003 + t.mon.hash();
    h = h * 1000003 + std::hash<std::string>{}(rational_to_string(t.coeff));
  }
  return h;
}

Polynomial reindex(const Polynomial& f, const RingSpec& target,
                   std::span<const int> var_map) {
  if (static_cast<int>(var_map.size()) != f.ring().size())
    throw RingMismatch("reindex: map width != source ring size");
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    Monomial m(target.size());
    for (int i = 0; i < t.mon.nvars(); ++i) {
      if (t.mon.exp(i) == 0) continue;
      int j = var_map[i];
      if (j < 0 || j >= target.size())
        throw RingMismatch("reindex: variable maps outside target ring");
      m.exp(j) += t.mon.exp(i);
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

std::vector<Polynomial> sorted_unique(std::vector<Polynomial> polys) {
  std::sort(polys.begin(), polys.end(),
            [](const Polynomial& a, const Polynomial& b) { return Polynomial::cmp(a, b) < 0; });
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
  return polys;
}

}  // namespace tfp
