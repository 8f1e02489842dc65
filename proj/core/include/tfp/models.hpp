#pragma once

#include <span>
#include <string>
#include <vector>

#include "tfp/oracle.hpp"
#include "tfp/polynomial.hpp"
#include "tfp/tfp.hpp"

namespace tfp {

/// Simplicial complex given by its facets on ground set [n]. Facets form an
/// antichain and cover [n].
struct SimplicialComplex {
  int n = 0;
  std::vector<std::vector<int>> facets;  // each sorted ascending

  static SimplicialComplex create(int n, std::vector<std::vector<int>> facets);
};

/// State counts of a hierarchical model, one per node, each >= 2.
struct ModelDims {
  std::vector<int> d;

  static ModelDims create(std::vector<int> d);
  int size() const { return static_cast<int>(d.size()); }
};

/// Parametrization p_i -> prod_{F facet} a^F_{i_F} of the hierarchical model.
/// Source variables are p_<i1>_..._<in>; facet F_m contributes target
/// variables a<m>_<j_F>.
PolynomialMap hierarchical_map(const SimplicialComplex& delta, const ModelDims& d);

/// One reducible decomposition: two covering facet subsets whose generated
/// subcomplexes intersect in the full power set of the separator.
struct Split {
  std::vector<int> facets1, facets2;  // indices into delta.facets, sorted
  std::vector<int> separator;         // S, sorted ascending (possibly empty)
};

/// All decompositions Delta = Delta_1 u Delta_2 with Delta_1 n Delta_2 = 2^S
/// and both parts proper; empty iff Delta is irreducible.
std::vector<Split> reducible_split(const SimplicialComplex& delta);

/// Toric fiber product structure of a reducible hierarchical model: grading
/// classes are indexed by D_S, the component ideals are the kernels of the
/// two sub-model maps. Index translations connect the spec's x/y/z rings to
/// the model rings.
struct ReducibleTfp {
  TfpSpec spec;
  SimplicialComplex delta1, delta2;
  ModelDims d1, d2;
  PolynomialMap map1, map2;    // sub-model parametrizations
  std::vector<int> x_to_p1;    // x-ring position -> K[p]_1 position
  std::vector<int> y_to_p2;
  std::vector<int> z_to_p;     // z-ring position -> K[p] position
  RingSpec p_ring;             // ring of the full model
};

ReducibleTfp tfp_of_reducible(const SimplicialComplex& delta, const ModelDims& d,
                              const Split& split);

/// Hidden-variable parametrization q_i -> sum over hidden assignments of the
/// hierarchical images. H = hidden nodes; the q-ring is indexed by observed
/// coordinates only.
PolynomialMap hidden_map(const SimplicialComplex& delta, const ModelDims& d,
                         std::span<const int> H);

/// Determinantal generators of the partially hidden Markov chain on 2n+1 nodes
/// (odd positions observed): the (d_{2j}+1)-minors of the flattenings X_j for
/// each j with d_{2j} < min(d_{2j-1}, d_{2j+1}), plus all 2x2 minors of the
/// slice flattenings Y_{j,i}.
std::vector<Polynomial> chain_generators(int n, const ModelDims& d);

/// The ring K[q] of the partially hidden chain (variables indexed by the odd
/// positions).
RingSpec chain_ring(int n, const ModelDims& d);

/// One toric-fiber-product step of the hidden chain, split at separator
/// {3}: the left component is the 3-chain (d1,d2,d3), the right component the
/// remaining chain on (d3,...,d_{2n+1}).
struct ChainSplit {
  TfpSpec spec;
  ModelDims d_left, d_right;
  std::vector<int> x_to_q1;  // x-ring -> left chain ring
  std::vector<int> y_to_q2;  // y-ring -> right chain ring
  std::vector<int> z_to_q;   // z-ring -> full chain ring
};

ChainSplit chain_split(int n, const ModelDims& d);

/// All 2x2 minors of every flattening of the generic d_1 x ... x d_n tensor,
/// deduplicated by canonical form. Variables are z_<i1>_..._<in>.
std::vector<Polynomial> segre_flattening_minors(const ModelDims& d);

RingSpec segre_ring(const ModelDims& d);

/// Finite group by composition table. Nonabelian groups are structurally
/// supported; ordered sums follow increasing leaf index.
struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<int> table;  // table[a * size + b] = a ∘ b
  int identity = 0;

  static FiniteGroup from_table(std::vector<std::string> names, std::vector<int> table);
  static FiniteGroup cyclic(int m);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// Built-ins by name: "z2", "z3", "z4", "z2xz2", "trivial".
  static FiniteGroup named(const std::string& name);

  int size() const { return static_cast<int>(names.size()); }
  int compose(int a, int b) const { return table[a * size() + b]; }
  int ordered_sum(std::span<const int> elems) const;
};

/// Rooted phylogenetic tree: n+1 leaves labeled 1..n+1, rooted at leaf n+1,
/// edges directed away from the root. Every edge's descendant leaf set must
/// be an interval of integers (checked on construction).
class RootedTree {
 public:
  /// Parses "((1,2),3)"-style nested lists; leaf n+1 (the root) is implicit.
  static RootedTree parse(const std::string& newick);

  int leaf_count() const { return n_; }  // n, excluding the root leaf
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Descendant leaves of edge e, sorted ascending (an interval).
  const std::vector<int>& descendants(int e) const { return edges_[e].de; }
  bool interior(int e) const { return edges_[e].interior; }
  std::vector<int> interior_edges() const;
  std::string str() const;

  struct Edge {
    int parent, child;       // node ids
    std::vector<int> de;     // descendant leaves
    bool interior = false;
  };
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // preorder from the root edge
  std::string newick_;
};

/// Parametrization q_{g_1...g_n} -> prod_e a^(e)_{g_e} with g_e the ordered
/// sum of the descendant leaf labels of e.
PolynomialMap group_based_map(const FiniteGroup& G, const RootedTree& T);

RingSpec group_model_ring(const FiniteGroup& G, int n);

/// Decomposition of T at an interior edge into T+ and T-, with the toric
/// fiber product spec graded by group elements (deg(q_g) = e_{g_e}).
struct TreeSplit {
  RootedTree plus, minus;
  TfpSpec spec;
  std::vector<int> x_to_qplus;   // x-ring -> K[q]_+ position
  std::vector<int> y_to_qminus;  // y-ring -> K[q]_- position
  std::vector<int> z_to_q;       // z-ring -> K[q] position
};

TreeSplit tree_split(const FiniteGroup& G, const RootedTree& T, int interior_edge);

/// All k x k minors (Laplace expansion), row and column subsets in
/// lexicographic order. Throws BadSize when k exceeds a dimension.
std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& M, int k);

}  // namespace tfp
