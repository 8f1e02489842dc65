#pragma once

#include <cstdint>
#include <vector>

namespace tfp {

/// Dense exponent vector, one entry per ring variable. The rings in this
/// project are small (tens of variables), where dense storage wins.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

  static Monomial unit(int nvars) { return Monomial(nvars); }
  static Monomial variable(int nvars, int idx, int exp = 1) {
    Monomial m(nvars);
    m.e_[idx] = exp;
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int exp(int i) const { return e_[i]; }
  int& exp(int i) { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  bool is_unit() const;
  long long total_degree() const;
  /// Bit v set iff variable v occurs (variables past 63 share the top bit).
  unsigned long long support_mask() const;

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; caller guarantees o divides *this.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // *this | o
  bool coprime(const Monomial& o) const;
  Monomial pow(int k) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  /// Plain lexicographic compare on the exponent vector; used only as an
  /// arbitrary total order for containers, not as a term order.
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

  size_t hash() const;

 private:
  std::vector<int> e_;
};

Monomial lcm(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic comparison on the natural variable order.
/// This is the library-wide canonical order used for term storage and
/// printing. Returns -1, 0, +1.
int cmp_grevlex(const Monomial& a, const Monomial& b);

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace tfp
