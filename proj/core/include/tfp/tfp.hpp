#pragma once

#include <span>
#include <vector>

#include "tfp/grading.hpp"
#include "tfp/groebner.hpp"
#include "tfp/oracle.hpp"
#include "tfp/polynomial.hpp"
#include "tfp/term_order.hpp"

namespace tfp {

enum class Side { X, Y };

/// The data (r, s, t, A) of a toric fiber product instance together with the
/// derived x-, y-, z-rings and their gradings. Variables are x_i_j, y_i_k and
/// z_i_j_k with deg(x^i_j) = deg(y^i_k) = deg(z^i_jk) = a^i, the i-th column
/// of A. omega is the solved positivity certificate (omega . a^i = 1 for all
/// i); `independent` records whether the columns of A are linearly
/// independent, the hypothesis under which explicit lifting applies.
struct TfpSpec {
  int r = 0;
  std::vector<int> s, t;
  std::vector<DegreeVector> A;  // A[i] = a^(i+1), each of length dim
  int dim = 0;
  std::vector<Rational> omega;
  bool independent = false;

  RingSpec x_ring, y_ring, z_ring, xy_ring;
  MultiGrading x_grading, y_grading, z_grading, xy_grading;

  std::vector<int> x_off, y_off, z_off;  // variable offsets per class

  // 1-based class and slot indices (i, j, k).
  int x_index(int i, int j) const;
  int y_index(int i, int k) const;
  int z_index(int i, int j, int k) const;
  /// Position of an x-ring (resp. y-ring) variable inside xy_ring.
  int xy_of_x(int x_pos) const { return x_pos; }
  int xy_of_y(int y_pos) const { return x_ring.size() + y_pos; }
};

/// Builds the spec from the degree columns: solves for omega (throws
/// NoPositivityCertificate when none exists) and sets the independence flag
/// from the rank of A. A dependent A is representable — the general toric
/// fiber product is still defined — but the lifting operations refuse it.
TfpSpec validate_spec(const std::vector<DegreeVector>& A_columns,
                      const std::vector<int>& s, const std::vector<int>& t);

/// Spec with A = identity columns (the standard linearly independent case).
TfpSpec simple_spec(int r, const std::vector<int>& s, const std::vector<int>& t);

/// The monomial homomorphism z^i_jk -> x^i_j y^i_k.
PolynomialMap phi_B(const TfpSpec& spec);

/// The quadrics z^i_{j1 k2} z^i_{j2 k1} - z^i_{j1 k1} z^i_{j2 k2} over
/// j1 < j2, k1 < k2, antidiagonal (leading) term first. They generate ker(phi_B)
/// and are a Groebner basis under any order selecting those terms.
std::vector<Polynomial> quad_B(const TfpSpec& spec);

/// Canonical tableau presentation of a homogeneous polynomial in the x- or
/// y-ring: a slot sequence of upper indices i_1 <= ... <= i_d shared by all
/// terms, plus the per-term lower-index assignment (ascending within equal
/// upper indices). Rows are index pairs ordered by slot.
struct Tableau {
  Side side = Side::X;
  std::vector<int> slots;                  // upper indices, ascending
  std::vector<std::vector<int>> rows;      // rows[u][l] = lower index of term u in slot l
  std::vector<Rational> coeffs;            // per term
};

Tableau canonical_slots(const Polynomial& f, const TfpSpec& spec);

/// Lift of a homogeneous f: for every k in prod_l [t_{i_l}] (x-side; the
/// y-side ranges over prod_l [s_{i_l}]) the polynomial f_k obtained by
/// decorating slot l with k_l. Deduplicated, deterministic enumeration order.
std::vector<Polynomial> lift(const Polynomial& f, Side side, const TfpSpec& spec);

/// Lift(F) u Lift(G) u Quad_B — a generating set of the toric fiber product
/// when A is linearly independent (and a Groebner basis under tfp_weight when
/// F and G are Groebner bases).
std::vector<Polynomial> tfp_generators(std::span<const Polynomial> F,
                                       std::span<const Polynomial> G,
                                       const TfpSpec& spec);

/// Contraction of a principal monomial ideal <m> (m purely in x- or
/// y-variables of the xy-ring) along phi_B, by the combinatorial formula:
/// the monomials z^{i_1}_{j_1 k_1} ... z^{i_d}_{j_d k_d} with k free, plus
/// Quad_B. Rejects m = 1 and mixed monomials.
std::vector<Polynomial> contract_principal_monomial(const Monomial& m,
                                                    const TfpSpec& spec);

/// The composite order of the lifting construction: stage 1 is the pullback of
/// (w1, w2) through phi_B; stage 2 plays the role of the infinitesimal
/// epsilon and makes the antidiagonal Quad_B terms lead; the tie-break is the
/// explicit lexicographic order on (i asc, j asc, k desc).
TermOrder tfp_weight(std::span<const Rational> w1, std::span<const Rational> w2,
                     const TfpSpec& spec);

/// Weight vector on the z-ring under which the antidiagonal Quad_B terms lead
/// (the stage-2 vector of tfp_weight).
std::vector<Rational> quad_leading_weight(const TfpSpec& spec);

/// Pointwise product of two degree-count tables (Hadamard product of Hilbert
/// series, degree by degree).
HilbertTable hadamard_hilbert(const HilbertTable& h1, const HilbertTable& h2);

}  // namespace tfp
