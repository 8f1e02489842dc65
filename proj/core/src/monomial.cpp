#include "tfp/monomial.hpp"

#include <cassert>

namespace tfp {

bool Monomial::is_unit() const {
  for (int x : e_)
    if (x != 0) return false;
  return true;
}

long long Monomial::total_degree() const {
  long long d = 0;
  for (int x : e_) d += x;
  return d;
}

unsigned long long Monomial::support_mask() const {
  unsigned long long m = 0;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0) m |= 1ull << (i < 63 ? i : 63);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  assert(e_.size() == o.e_.size());
  Monomial m(*this);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  assert(e_.size() == o.e_.size());
  Monomial m(*this);
  for (size_t i = 0; i < e_.size(); ++i) {
    m.e_[i] -= o.e_[i];
    assert(m.e_[i] >= 0);
  }
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  assert(e_.size() == o.e_.size());
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  assert(e_.size() == o.e_.size());
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

Monomial Monomial::pow(int k) const {
  Monomial m(*this);
  for (auto& x : m.e_) x *= k;
  return m;
}

size_t Monomial::hash() const {
  size_t h = 1469598103934665603ull;
  for (int x : e_) {
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  assert(a.nvars() == b.nvars());
  Monomial m(a);
  for (int i = 0; i < a.nvars(); ++i)
    if (b.exp(i) > m.exp(i)) m.exp(i) = b.exp(i);
  return m;
}

int cmp_grevlex(const Monomial& a, const Monomial& b) {
  assert(a.nvars() == b.nvars());
  long long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the monomial whose last differing exponent is smaller wins.
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a.exp(i) - b.exp(i);
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace tfp
