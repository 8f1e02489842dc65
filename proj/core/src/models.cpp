#include "tfp/models.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "tfp/errors.hpp"

namespace tfp {

namespace {

/// All tuples in prod_k [dims[k]], lexicographic, first coordinate slowest.
std::vector<std::vector<int>> index_tuples(const std::vector<int>& dims) {
  std::vector<std::vector<int>> out;
  long long total = 1;
  for (int d : dims) total *= d;
  out.reserve(total);
  std::vector<int> t(dims.size(), 1);
  for (;;) {
    out.push_back(t);
    int i = static_cast<int>(dims.size()) - 1;
    for (; i >= 0; --i) {
      if (t[i] < dims[i]) {
        ++t[i];
        break;
      }
      t[i] = 1;
    }
    if (i < 0) break;
  }
  return out;
}

long long tuple_rank(const std::vector<int>& t, const std::vector<int>& dims) {
  long long r = 0;
  for (size_t i = 0; i < dims.size(); ++i) r = r * dims[i] + (t[i] - 1);
  return r;
}

std::vector<int> subvector(const std::vector<int>& t, const std::vector<int>& positions) {
  std::vector<int> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(t[p - 1]);
  return out;
}

std::vector<int> dims_at(const ModelDims& d, const std::vector<int>& positions) {
  std::vector<int> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(d.d[p - 1]);
  return out;
}

std::vector<int> sorted_union(const std::vector<std::vector<int>>& sets) {
  std::set<int> u;
  for (const auto& s : sets) u.insert(s.begin(), s.end());
  return {u.begin(), u.end()};
}

}  // namespace

SimplicialComplex SimplicialComplex::create(int n, std::vector<std::vector<int>> facets) {
  if (n <= 0) throw Error("simplicial complex needs a nonempty ground set");
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) throw Error("empty facet");
    for (int v : f)
      if (v < 1 || v > n) throw Error("facet vertex outside ground set");
  }
  for (size_t i = 0; i < facets.size(); ++i)
    for (size_t j = 0; j < facets.size(); ++j) {
      if (i == j) continue;
      if (std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(),
                        facets[i].end()))
        throw Error("facets must form an antichain");
    }
  std::vector<int> cover = sorted_union(facets);
  if (static_cast<int>(cover.size()) != n)
    throw Error("facets must cover the ground set");
  return {n, std::move(facets)};
}

ModelDims ModelDims::create(std::vector<int> d) {
  for (int x : d)
    if (x < 2) throw Error("model dimensions must be >= 2");
  return {std::move(d)};
}

PolynomialMap hierarchical_map(const SimplicialComplex& delta, const ModelDims& d) {
  if (delta.n != d.size())
    throw Error("hierarchical_map: dimension vector does not match ground set");

  std::vector<int> full(delta.n);
  std::iota(full.begin(), full.end(), 1);
  auto p_tuples = index_tuples(dims_at(d, full));
  std::vector<VarName> pvars;
  pvars.reserve(p_tuples.size());
  for (const auto& t : p_tuples) pvars.push_back({"p", t});
  RingSpec p_ring = RingSpec::create(std::move(pvars));

  std::vector<VarName> avars;
  std::vector<long long> a_offset;
  for (size_t m = 0; m < delta.facets.size(); ++m) {
    a_offset.push_back(static_cast<long long>(avars.size()));
    for (const auto& t : index_tuples(dims_at(d, delta.facets[m])))
      avars.push_back({"a" + std::to_string(m + 1), t});
  }
  RingSpec a_ring = RingSpec::create(std::move(avars));

  std::vector<Polynomial> images;
  images.reserve(p_tuples.size());
  for (const auto& t : p_tuples) {
    Monomial m(a_ring.size());
    for (size_t f = 0; f < delta.facets.size(); ++f) {
      const auto& F = delta.facets[f];
      long long pos = a_offset[f] + tuple_rank(subvector(t, F), dims_at(d, F));
      m.exp(static_cast<int>(pos)) += 1;
    }
    images.push_back(Polynomial::monomial(a_ring, m));
  }
  return PolynomialMap::create(p_ring, a_ring, std::move(images));
}

namespace {

/// Facets of the intersection of the two facet-generated subcomplexes:
/// maximal sets among pairwise facet intersections.
std::vector<std::vector<int>> intersection_facets(
    const SimplicialComplex& delta, const std::vector<int>& f1,
    const std::vector<int>& f2) {
  std::vector<std::vector<int>> inters;
  for (int i : f1)
    for (int j : f2) {
      std::vector<int> c;
      std::set_intersection(delta.facets[i].begin(), delta.facets[i].end(),
                            delta.facets[j].begin(), delta.facets[j].end(),
                            std::back_inserter(c));
      inters.push_back(std::move(c));
    }
  std::vector<std::vector<int>> maximal;
  for (const auto& c : inters) {
    bool dominated = false;
    for (const auto& o : inters)
      if (o != c && std::includes(o.begin(), o.end(), c.begin(), c.end())) {
        dominated = true;
        break;
      }
    if (!dominated &&
        std::find(maximal.begin(), maximal.end(), c) == maximal.end())
      maximal.push_back(c);
  }
  return maximal;
}

bool valid_split(const SimplicialComplex& delta, const std::vector<int>& f1,
                 const std::vector<int>& f2, std::vector<int>* separator) {
  if (f1.empty() || f2.empty()) return false;
  size_t total = delta.facets.size();
  if (f1.size() == total || f2.size() == total) return false;  // both proper
  std::set<int> covered(f1.begin(), f1.end());
  covered.insert(f2.begin(), f2.end());
  if (covered.size() != total) return false;
  auto maximal = intersection_facets(delta, f1, f2);
  if (maximal.size() != 1) return false;
  *separator = maximal[0];
  return true;
}

}  // namespace

std::vector<Split> reducible_split(const SimplicialComplex& delta) {
  int m = static_cast<int>(delta.facets.size());
  std::vector<Split> splits;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  // Each facet goes to side 1, side 2, or both.
  std::vector<int> assign(m, 0);
  for (;;) {
    std::vector<int> f1, f2;
    for (int i = 0; i < m; ++i) {
      if (assign[i] == 0 || assign[i] == 2) f1.push_back(i);
      if (assign[i] == 1 || assign[i] == 2) f2.push_back(i);
    }
    std::vector<int> sep;
    if (valid_split(delta, f1, f2, &sep)) {
      auto key = f1 <= f2 ? std::make_pair(f1, f2) : std::make_pair(f2, f1);
      if (seen.insert(key).second)
        splits.push_back({key.first, key.second, std::move(sep)});
    }
    int i = m - 1;
    for (; i >= 0; --i) {
      if (assign[i] < 2) {
        ++assign[i];
        break;
      }
      assign[i] = 0;
    }
    if (i < 0) break;
  }
  std::sort(splits.begin(), splits.end(), [](const Split& a, const Split& b) {
    return std::tie(a.facets1, a.facets2) < std::tie(b.facets1, b.facets2);
  });
  return splits;
}

namespace {

/// Relabels a sub-ground-set V (sorted, original labels) to 1..|V|.
SimplicialComplex restrict_complex(const SimplicialComplex& delta,
                                   const std::vector<int>& facet_ids,
                                   const std::vector<int>& V) {
  std::map<int, int> relabel;
  for (size_t i = 0; i < V.size(); ++i) relabel[V[i]] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> facets;
  for (int id : facet_ids) {
    std::vector<int> f;
    for (int v : delta.facets[id]) f.push_back(relabel.at(v));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::create(static_cast<int>(V.size()), std::move(facets));
}

}  // namespace

ReducibleTfp tfp_of_reducible(const SimplicialComplex& delta, const ModelDims& d,
                              const Split& split) {
  std::vector<int> sep_check;
  if (!valid_split(delta, split.facets1, split.facets2, &sep_check) ||
      sep_check != split.separator)
    throw InvalidSplit("not a reducible decomposition of this complex");

  ReducibleTfp out;
  std::vector<std::vector<int>> fs1, fs2;
  for (int i : split.facets1) fs1.push_back(delta.facets[i]);
  for (int i : split.facets2) fs2.push_back(delta.facets[i]);
  std::vector<int> V1 = sorted_union(fs1), V2 = sorted_union(fs2);
  const std::vector<int>& S = split.separator;

  out.delta1 = restrict_complex(delta, split.facets1, V1);
  out.delta2 = restrict_complex(delta, split.facets2, V2);
  out.d1 = ModelDims::create(dims_at(d, V1));
  out.d2 = ModelDims::create(dims_at(d, V2));
  out.map1 = hierarchical_map(out.delta1, out.d1);
  out.map2 = hierarchical_map(out.delta2, out.d2);

  // Grading classes are indexed by D_S.
  auto s_dims = dims_at(d, S);
  auto classes = index_tuples(s_dims);
  int r = static_cast<int>(classes.size());

  // Positions of S inside V1 / V2 (1-based within the component labeling).
  auto positions_in = [](const std::vector<int>& V, const std::vector<int>& T) {
    std::vector<int> pos;
    for (int t : T) {
      auto it = std::lower_bound(V.begin(), V.end(), t);
      pos.push_back(static_cast<int>(it - V.begin()) + 1);
    }
    return pos;
  };
  std::vector<int> S_in_1 = positions_in(V1, S), S_in_2 = positions_in(V2, S);

  auto tuples1 = index_tuples(dims_at(d, V1));
  auto tuples2 = index_tuples(dims_at(d, V2));
  long long per_class1 = static_cast<long long>(tuples1.size()) / r;
  long long per_class2 = static_cast<long long>(tuples2.size()) / r;
  std::vector<int> s(r, static_cast<int>(per_class1)), t(r, static_cast<int>(per_class2));
  out.spec = simple_spec(r, s, t);

  // x/y translations: within-class rank in component ring order.
  out.x_to_p1.assign(out.spec.x_ring.size(), -1);
  out.y_to_p2.assign(out.spec.y_ring.size(), -1);
  std::vector<int> count1(r, 0), count2(r, 0);
  std::vector<std::vector<int>> rank1(tuples1.size()), rank2(tuples2.size());
  std::vector<int> class_of1(tuples1.size()), j_of1(tuples1.size());
  std::vector<int> class_of2(tuples2.size()), k_of2(tuples2.size());
  for (size_t p = 0; p < tuples1.size(); ++p) {
    int c = static_cast<int>(tuple_rank(subvector(tuples1[p], S_in_1), s_dims));
    class_of1[p] = c;
    j_of1[p] = ++count1[c];
    out.x_to_p1[out.spec.x_index(c + 1, j_of1[p])] = static_cast<int>(p);
  }
  for (size_t p = 0; p < tuples2.size(); ++p) {
    int c = static_cast<int>(tuple_rank(subvector(tuples2[p], S_in_2), s_dims));
    class_of2[p] = c;
    k_of2[p] = ++count2[c];
    out.y_to_p2[out.spec.y_index(c + 1, k_of2[p])] = static_cast<int>(p);
  }

  // z -> p: combine the two component tuples into a full index.
  std::vector<int> full(delta.n);
  std::iota(full.begin(), full.end(), 1);
  auto full_dims = dims_at(d, full);
  auto p_tuples = index_tuples(full_dims);
  out.p_ring = hierarchical_map(delta, d).source;

  out.z_to_p.assign(out.spec.z_ring.size(), -1);
  for (size_t p = 0; p < p_tuples.size(); ++p) {
    const auto& i = p_tuples[p];
    auto i1 = subvector(i, V1);
    auto i2 = subvector(i, V2);
    long long p1 = tuple_rank(i1, dims_at(d, V1));
    long long p2 = tuple_rank(i2, dims_at(d, V2));
    int c = class_of1[p1];
    assert(c == class_of2[p2]);
    int z = out.spec.z_index(c + 1, j_of1[p1], k_of2[p2]);
    out.z_to_p[z] = static_cast<int>(p);
  }
  return out;
}

PolynomialMap hidden_map(const SimplicialComplex& delta, const ModelDims& d,
                         std::span<const int> H) {
  std::vector<int> hidden(H.begin(), H.end());
  std::sort(hidden.begin(), hidden.end());
  hidden.erase(std::unique(hidden.begin(), hidden.end()), hidden.end());
  for (int h : hidden)
    if (h < 1 || h > delta.n) throw Error("hidden node outside ground set");
  std::vector<int> observed;
  for (int v = 1; v <= delta.n; ++v)
    if (!std::binary_search(hidden.begin(), hidden.end(), v)) observed.push_back(v);

  PolynomialMap hier = hierarchical_map(delta, d);

  auto o_tuples = index_tuples(dims_at(d, observed));
  std::vector<VarName> qvars;
  qvars.reserve(o_tuples.size());
  for (const auto& t : o_tuples) qvars.push_back({"q", t});
  RingSpec q_ring = RingSpec::create(std::move(qvars));

  std::vector<int> full(delta.n);
  std::iota(full.begin(), full.end(), 1);
  auto full_dims = dims_at(d, full);

  auto h_tuples = index_tuples(dims_at(d, hidden));
  std::vector<Polynomial> images;
  images.reserve(o_tuples.size());
  for (const auto& io : o_tuples) {
    Polynomial sum = Polynomial::zero(hier.target);
    for (const auto& jh : h_tuples) {
      std::vector<int> i(delta.n);
      for (size_t a = 0; a < observed.size(); ++a) i[observed[a] - 1] = io[a];
      for (size_t a = 0; a < hidden.size(); ++a) i[hidden[a] - 1] = jh[a];
      long long p = tuple_rank(i, full_dims);
      sum = sum + hier.images[p];
    }
    images.push_back(std::move(sum));
  }
  return PolynomialMap::create(q_ring, hier.target, std::move(images));
}

RingSpec chain_ring(int n, const ModelDims& d) {
  if (d.size() != 2 * n + 1) throw Error("chain_ring: d must have length 2n+1");
  std::vector<int> observed;
  for (int v = 1; v <= 2 * n + 1; v += 2) observed.push_back(v);
  std::vector<VarName> qvars;
  for (const auto& t : index_tuples(dims_at(d, observed))) qvars.push_back({"q", t});
  return RingSpec::create(std::move(qvars));
}

namespace {

/// q-variable matrix of the flattening with given observed row/column blocks
/// and optional fixed middle coordinates.
std::vector<std::vector<Polynomial>> chain_flattening(
    const RingSpec& q_ring, const ModelDims& d, int n,
    const std::vector<int>& row_obs, const std::vector<int>& col_obs,
    const std::vector<std::pair<int, int>>& fixed) {
  std::vector<int> observed;
  for (int v = 1; v <= 2 * n + 1; v += 2) observed.push_back(v);
  auto obs_dims = dims_at(d, observed);

  auto rows = index_tuples(dims_at(d, row_obs));
  auto cols = index_tuples(dims_at(d, col_obs));
  std::vector<std::vector<Polynomial>> M(rows.size(),
                                         std::vector<Polynomial>(cols.size()));
  for (size_t a = 0; a < rows.size(); ++a)
    for (size_t b = 0; b < cols.size(); ++b) {
      std::vector<int> t(observed.size());
      for (size_t x = 0; x < row_obs.size(); ++x) {
        int pos = (row_obs[x] - 1) / 2;  // position among observed nodes
        t[pos] = rows[a][x];
      }
      for (size_t x = 0; x < col_obs.size(); ++x) t[(col_obs[x] - 1) / 2] = cols[b][x];
      for (auto [node, val] : fixed) t[(node - 1) / 2] = val;
      long long pos = tuple_rank(t, obs_dims);
      M[a][b] = Polynomial::variable(q_ring, static_cast<int>(pos));
    }
  return M;
}

}  // namespace

std::vector<Polynomial> chain_generators(int n, const ModelDims& d) {
  if (n < 1) throw Error("chain_generators: n must be >= 1");
  if (d.size() != 2 * n + 1) throw Error("chain_generators: d must have length 2n+1");
  RingSpec q_ring = chain_ring(n, d);

  std::vector<Polynomial> gens;
  // X_j flattenings: rows indexed by observed nodes < 2j, columns by observed
  // nodes > 2j; (d_2j + 1)-minors whenever the hidden rank bound bites.
  for (int j = 1; j <= n; ++j) {
    int d2j = d.d[2 * j - 1];
    if (d2j >= std::min(d.d[2 * j - 2], d.d[2 * j])) continue;
    std::vector<int> row_obs, col_obs;
    for (int v = 1; v <= 2 * j - 1; v += 2) row_obs.push_back(v);
    for (int v = 2 * j + 1; v <= 2 * n + 1; v += 2) col_obs.push_back(v);
    auto M = chain_flattening(q_ring, d, n, row_obs, col_obs, {});
    for (Polynomial& p : minors(M, d2j + 1)) gens.push_back(std::move(p));
  }
  // Y_{j,i} slice flattenings: 2x2 minors whenever both dimensions allow.
  for (int j = 1; j < n; ++j) {
    std::vector<int> row_obs, col_obs;
    for (int v = 1; v <= 2 * j - 1; v += 2) row_obs.push_back(v);
    for (int v = 2 * j + 3; v <= 2 * n + 1; v += 2) col_obs.push_back(v);
    long long nrows = 1, ncols = 1;
    for (int v : row_obs) nrows *= d.d[v - 1];
    for (int v : col_obs) ncols *= d.d[v - 1];
    if (nrows < 2 || ncols < 2) continue;
    for (int i = 1; i <= d.d[2 * j]; ++i) {
      auto M = chain_flattening(q_ring, d, n, row_obs, col_obs, {{2 * j + 1, i}});
      for (Polynomial& p : minors(M, 2)) gens.push_back(std::move(p));
    }
  }
  // Union semantics: exact duplicates collapse.
  std::vector<Polynomial> dedup;
  for (Polynomial& p : gens)
    if (std::find(dedup.begin(), dedup.end(), p) == dedup.end())
      dedup.push_back(std::move(p));
  return dedup;
}

ChainSplit chain_split(int n, const ModelDims& d) {
  if (n < 2) throw Error("chain_split needs n >= 2");
  if (d.size() != 2 * n + 1) throw Error("chain_split: d must have length 2n+1");

  ChainSplit out;
  out.d_left = ModelDims::create({d.d[0], d.d[1], d.d[2]});
  out.d_right = ModelDims::create(std::vector<int>(d.d.begin() + 2, d.d.end()));

  int r = d.d[2];  // separator node 3
  std::vector<int> right_obs_dims;  // observed nodes 5,7,...
  for (int v = 5; v <= 2 * n + 1; v += 2) right_obs_dims.push_back(d.d[v - 1]);
  long long sc = d.d[0];
  long long tc = 1;
  for (int x : right_obs_dims) tc *= x;
  out.spec = simple_spec(r, std::vector<int>(r, static_cast<int>(sc)),
                         std::vector<int>(r, static_cast<int>(tc)));

  // Left chain ring K[q^(1)_{i1 i3}]: class = i3, j = i1.
  out.x_to_q1.assign(out.spec.x_ring.size(), -1);
  for (int i1 = 1; i1 <= d.d[0]; ++i1)
    for (int i3 = 1; i3 <= d.d[2]; ++i3) {
      long long q1 = tuple_rank({i1, i3}, {d.d[0], d.d[2]});
      out.x_to_q1[out.spec.x_index(i3, i1)] = static_cast<int>(q1);
    }
  // Right chain ring K[q^(2)_{i3 i5 ...}]: class = i3, k = rank of the rest.
  std::vector<int> right_all_dims{d.d[2]};
  for (int x : right_obs_dims) right_all_dims.push_back(x);
  out.y_to_q2.assign(out.spec.y_ring.size(), -1);
  auto rest = index_tuples(right_obs_dims);
  for (int i3 = 1; i3 <= d.d[2]; ++i3)
    for (size_t k = 0; k < rest.size(); ++k) {
      std::vector<int> t{i3};
      t.insert(t.end(), rest[k].begin(), rest[k].end());
      long long q2 = tuple_rank(t, right_all_dims);
      out.y_to_q2[out.spec.y_index(i3, static_cast<int>(k) + 1)] = static_cast<int>(q2);
    }
  // Full chain ring: observed tuple (i1, i3, i5, ...).
  std::vector<int> obs_dims{d.d[0], d.d[2]};
  for (int x : right_obs_dims) obs_dims.push_back(x);
  out.z_to_q.assign(out.spec.z_ring.size(), -1);
  for (int i1 = 1; i1 <= d.d[0]; ++i1)
    for (int i3 = 1; i3 <= d.d[2]; ++i3)
      for (size_t k = 0; k < rest.size(); ++k) {
        std::vector<int> t{i1, i3};
        t.insert(t.end(), rest[k].begin(), rest[k].end());
        long long q = tuple_rank(t, obs_dims);
        int z = out.spec.z_index(i3, i1, static_cast<int>(k) + 1);
        out.z_to_q[z] = static_cast<int>(q);
      }
  return out;
}

RingSpec segre_ring(const ModelDims& d) {
  std::vector<VarName> vars;
  for (const auto& t : index_tuples(d.d)) vars.push_back({"z", t});
  return RingSpec::create(std::move(vars));
}

std::vector<Polynomial> segre_flattening_minors(const ModelDims& d) {
  int n = d.size();
  if (n < 2) throw Error("segre_flattening_minors needs at least two factors");
  RingSpec ring = segre_ring(d);

  std::vector<Polynomial> out;
  // Bipartitions P | Q with 1 in P, Q nonempty.
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> P{1}, Q;
    for (int v = 2; v <= n; ++v)
      if (mask & (1 << (v - 2)))
        P.push_back(v);
      else
        Q.push_back(v);
    if (Q.empty()) continue;
    auto rows = index_tuples(dims_at(d, P));
    auto cols = index_tuples(dims_at(d, Q));
    std::vector<std::vector<Polynomial>> M(rows.size(),
                                           std::vector<Polynomial>(cols.size()));
    for (size_t a = 0; a < rows.size(); ++a)
      for (size_t b = 0; b < cols.size(); ++b) {
        std::vector<int> t(n);
        for (size_t x = 0; x < P.size(); ++x) t[P[x] - 1] = rows[a][x];
        for (size_t x = 0; x < Q.size(); ++x) t[Q[x] - 1] = cols[b][x];
        M[a][b] = Polynomial::variable(ring, static_cast<int>(tuple_rank(t, d.d)));
      }
    if (rows.size() < 2 || cols.size() < 2) continue;
    for (Polynomial& p : minors(M, 2)) {
      // Complementary flattenings repeat minors; key them by canonical form
      // with positive leading coefficient.
      if (sgn(p.canonical_leading().coeff) < 0) p = -p;
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  }
  return out;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names, std::vector<int> table) {
  int n = static_cast<int>(names.size());
  if (static_cast<int>(table.size()) != n * n) throw Error("group table has wrong size");
  for (int x : table)
    if (x < 0 || x >= n) throw Error("group table entry out of range");
  auto at = [&](int a, int b) { return table[a * n + b]; };
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw Error("group has no identity");
  for (int a = 0; a < n; ++a) {
    bool inv = false;
    for (int b = 0; b < n && !inv; ++b) inv = at(a, b) == id && at(b, a) == id;
    if (!inv) throw Error("group element without inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) throw Error("group is not associative");
  FiniteGroup g;
  g.names = std::move(names);
  g.table = std::move(table);
  g.identity = id;
  return g;
}

FiniteGroup FiniteGroup::cyclic(int m) {
  if (m < 1) throw Error("cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<int> table(m * m);
  for (int a = 0; a < m; ++a) names.push_back(std::to_string(a));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a * m + b] = (a + b) % m;
  return from_table(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.size() * b.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y) names.push_back(a.names[x] + b.names[y]);
  std::vector<int> table(n * n);
  auto enc = [&](int x, int y) { return x * b.size() + y; };
  for (int x1 = 0; x1 < a.size(); ++x1)
    for (int y1 = 0; y1 < b.size(); ++y1)
      for (int x2 = 0; x2 < a.size(); ++x2)
        for (int y2 = 0; y2 < b.size(); ++y2)
          table[enc(x1, y1) * n + enc(x2, y2)] =
              enc(a.compose(x1, x2), b.compose(y1, y2));
  return from_table(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::named(const std::string& name) {
  if (name == "trivial") return cyclic(1);
  if (name == "z2") return cyclic(2);
  if (name == "z3") return cyclic(3);
  if (name == "z4") return cyclic(4);
  if (name == "z2xz2") return direct_product(cyclic(2), cyclic(2));
  throw Error("unknown group '" + name + "'");
}

int FiniteGroup::ordered_sum(std::span<const int> elems) const {
  int acc = identity;
  for (int e : elems) acc = compose(acc, e);
  return acc;
}

namespace {

struct TreeNode {
  int leaf = 0;  // leaf label, 0 for internal nodes
  std::vector<int> children;
};

struct ParsedTree {
  std::vector<TreeNode> nodes;
  int top = -1;  // child of the root leaf
};

int parse_node(const std::string& s, size_t& pos, ParsedTree& t) {
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip();
  if (pos >= s.size()) throw ParseError("tree: unexpected end");
  if (s[pos] == '(') {
    ++pos;
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back({});
    std::vector<int> kids;
    kids.push_back(parse_node(s, pos, t));
    skip();
    while (pos < s.size() && s[pos] == ',') {
      ++pos;
      kids.push_back(parse_node(s, pos, t));
      skip();
    }
    if (pos >= s.size() || s[pos] != ')') throw ParseError("tree: expected ')'");
    ++pos;
    if (kids.size() < 2) throw ParseError("tree: internal node needs >= 2 children");
    t.nodes[id].children = std::move(kids);
    return id;
  }
  if (!std::isdigit(static_cast<unsigned char>(s[pos])))
    throw ParseError("tree: expected leaf number or '('");
  int v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    v = v * 10 + (s[pos++] - '0');
  int id = static_cast<int>(t.nodes.size());
  t.nodes.push_back({});
  t.nodes[id].leaf = v;
  return id;
}

}  // namespace

RootedTree RootedTree::parse(const std::string& newick) {
  ParsedTree pt;
  size_t pos = 0;
  pt.top = parse_node(newick, pos, pt);
  while (pos < newick.size() && std::isspace(static_cast<unsigned char>(newick[pos])))
    ++pos;
  if (pos != newick.size()) throw ParseError("tree: trailing characters");

  RootedTree T;
  T.newick_ = newick;
  std::vector<int> leaves;
  for (const auto& nd : pt.nodes)
    if (nd.leaf > 0) leaves.push_back(nd.leaf);
  std::sort(leaves.begin(), leaves.end());
  T.n_ = static_cast<int>(leaves.size());
  for (int i = 0; i < T.n_; ++i)
    if (leaves[i] != i + 1) throw ParseError("tree: leaves must be exactly 1..n");

  // The implicit root is leaf n+1 with a single edge down to the top node.
  int root_id = static_cast<int>(pt.nodes.size());
  std::function<std::vector<int>(int)> collect = [&](int v) -> std::vector<int> {
    if (pt.nodes[v].leaf > 0) return {pt.nodes[v].leaf};
    std::vector<int> de;
    for (int c : pt.nodes[v].children) {
      auto sub = collect(c);
      de.insert(de.end(), sub.begin(), sub.end());
    }
    return de;
  };
  std::function<void(int, int)> walk = [&](int parent, int child) {
    Edge e;
    e.parent = parent;
    e.child = child;
    e.de = collect(child);
    std::sort(e.de.begin(), e.de.end());
    if (e.de.back() - e.de.front() + 1 != static_cast<int>(e.de.size()))
      throw NonIntervalDescendants("edge with descendants not an interval");
    bool parent_is_leaf = parent == root_id ||
                          (parent >= 0 && pt.nodes[parent].leaf > 0);
    bool child_is_leaf = pt.nodes[child].leaf > 0;
    e.interior = !parent_is_leaf && !child_is_leaf;
    T.edges_.push_back(std::move(e));
    for (int c : pt.nodes[child].children) walk(child, c);
  };
  walk(root_id, pt.top);
  return T;
}

std::vector<int> RootedTree::interior_edges() const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].interior) out.push_back(e);
  return out;
}

std::string RootedTree::str() const { return newick_; }

RingSpec group_model_ring(const FiniteGroup& G, int n) {
  std::vector<int> dims(n, G.size());
  std::vector<VarName> vars;
  for (const auto& t : index_tuples(dims)) vars.push_back({"q", t});
  return RingSpec::create(std::move(vars));
}

PolynomialMap group_based_map(const FiniteGroup& G, const RootedTree& T) {
  int n = T.leaf_count();
  RingSpec q_ring = group_model_ring(G, n);

  std::vector<VarName> avars;
  for (int e = 1; e <= T.edge_count(); ++e)
    for (int h = 1; h <= G.size(); ++h) avars.push_back({"a", {e, h}});
  RingSpec a_ring = RingSpec::create(std::move(avars));

  std::vector<int> dims(n, G.size());
  std::vector<Polynomial> images;
  for (const auto& t : index_tuples(dims)) {
    Monomial m(a_ring.size());
    for (int e = 0; e < T.edge_count(); ++e) {
      std::vector<int> elems;
      for (int leaf : T.descendants(e)) elems.push_back(t[leaf - 1] - 1);
      int ge = G.ordered_sum(elems);
      m.exp(e * G.size() + ge) += 1;
    }
    images.push_back(Polynomial::monomial(a_ring, m));
  }
  return PolynomialMap::create(q_ring, a_ring, std::move(images));
}

namespace {

/// Newick text of the subtree hanging below `edge`, with leaves relabeled
/// through `relabel`; `replace_edge` >= 0 substitutes a single leaf for that
/// edge's subtree.
std::string render_subtree(const RootedTree& T, int edge,
                           const std::function<int(int)>& relabel, int replace_edge,
                           int replacement_label) {
  if (edge == replace_edge) return std::to_string(replacement_label);
  // Child edges of this edge's child node.
  std::vector<int> kids;
  for (int e = 0; e < T.edge_count(); ++e)
    if (T.edges()[e].parent == T.edges()[edge].child) kids.push_back(e);
  if (kids.empty()) return std::to_string(relabel(T.descendants(edge)[0]));
  std::string out = "(";
  for (size_t i = 0; i < kids.size(); ++i) {
    if (i) out += ",";
    out += render_subtree(T, kids[i], relabel, replace_edge, replacement_label);
  }
  out += ")";
  return out;
}

}  // namespace

TreeSplit tree_split(const FiniteGroup& G, const RootedTree& T, int interior_edge) {
  if (interior_edge < 0 || interior_edge >= T.edge_count() || !T.interior(interior_edge))
    throw NoInteriorEdge("tree_split needs an interior edge");
  int n = T.leaf_count();
  const auto& de = T.descendants(interior_edge);
  int lo = de.front(), hi = de.back();
  int m = hi - lo + 1;

  TreeSplit out;
  out.minus = RootedTree::parse(
      render_subtree(T, interior_edge, [&](int l) { return l - lo + 1; }, -1, 0));
  out.plus = RootedTree::parse(render_subtree(
      T, 0,
      [&](int l) { return l < lo ? l : l - m + 1; }, interior_edge, lo));

  int g = G.size();
  int n_plus = n - m + 1;
  long long s_c = 1, t_c = 1;
  for (int i = 0; i < n_plus - 1; ++i) s_c *= g;
  for (int i = 0; i < m - 1; ++i) t_c *= g;
  out.spec = simple_spec(g, std::vector<int>(g, static_cast<int>(s_c)),
                         std::vector<int>(g, static_cast<int>(t_c)));

  // Rank q+ variables by class (value at the grafted leaf, position lo).
  std::vector<int> dims_plus(n_plus, g), dims_minus(m, g), dims_full(n, g);
  auto tplus = index_tuples(dims_plus);
  auto tminus = index_tuples(dims_minus);
  std::vector<int> jof(tplus.size()), kof(tminus.size());
  std::vector<int> cof_plus(tplus.size()), cof_minus(tminus.size());
  {
    std::vector<int> cnt(g, 0);
    for (size_t p = 0; p < tplus.size(); ++p) {
      int c = tplus[p][lo - 1] - 1;
      cof_plus[p] = c;
      jof[p] = ++cnt[c];
    }
  }
  {
    std::vector<int> cnt(g, 0);
    for (size_t p = 0; p < tminus.size(); ++p) {
      std::vector<int> elems;
      for (int v : tminus[p]) elems.push_back(v - 1);
      int c = G.ordered_sum(elems);
      cof_minus[p] = c;
      kof[p] = ++cnt[c];
    }
  }
  out.x_to_qplus.assign(out.spec.x_ring.size(), -1);
  out.y_to_qminus.assign(out.spec.y_ring.size(), -1);
  for (size_t p = 0; p < tplus.size(); ++p)
    out.x_to_qplus[out.spec.x_index(cof_plus[p] + 1, jof[p])] = static_cast<int>(p);
  for (size_t p = 0; p < tminus.size(); ++p)
    out.y_to_qminus[out.spec.y_index(cof_minus[p] + 1, kof[p])] = static_cast<int>(p);

  out.z_to_q.assign(out.spec.z_ring.size(), -1);
  for (const auto& gfull : index_tuples(dims_full)) {
    std::vector<int> below(gfull.begin() + (lo - 1), gfull.begin() + hi);
    std::vector<int> elems;
    for (int v : below) elems.push_back(v - 1);
    int c = G.ordered_sum(elems);
    std::vector<int> gplus;
    for (int l = 1; l < lo; ++l) gplus.push_back(gfull[l - 1]);
    gplus.push_back(c + 1);
    for (int l = hi + 1; l <= n; ++l) gplus.push_back(gfull[l - 1]);
    long long pplus = tuple_rank(gplus, dims_plus);
    long long pminus = tuple_rank(below, dims_minus);
    int z = out.spec.z_index(c + 1, jof[pplus], kof[pminus]);
    out.z_to_q[z] = static_cast<int>(tuple_rank(gfull, dims_full));
  }
  return out;
}

namespace {

Polynomial det_laplace(const std::vector<std::vector<Polynomial>>& M,
                       const std::vector<int>& rows, const std::vector<int>& cols,
                       const RingSpec& ring) {
  size_t k = rows.size();
  if (k == 1) return M[rows[0]][cols[0]];
  Polynomial det = Polynomial::zero(ring);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t c = 0; c < k; ++c) {
    std::vector<int> sub_cols;
    for (size_t x = 0; x < k; ++x)
      if (x != c) sub_cols.push_back(cols[x]);
    Polynomial cofactor = M[rows[0]][cols[c]] * det_laplace(M, sub_rows, sub_cols, ring);
    det = (c % 2 == 0) ? det + cofactor : det - cofactor;
  }
  return det;
}

}  // namespace

std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& M, int k) {
  if (M.empty() || M[0].empty()) throw BadSize("empty matrix");
  int nr = static_cast<int>(M.size()), nc = static_cast<int>(M[0].size());
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != nc) throw BadSize("ragged matrix");
  if (k < 1 || k > nr || k > nc) throw BadSize("minor size exceeds matrix dimensions");
  RingSpec ring = M[0][0].ring();

  // Lexicographically ascending subsets of size k.
  auto subsets = [&](int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    for (;;) {
      out.push_back(c);
      int i = k - 1;
      while (i >= 0 && c[i] == total - k + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
  };
  std::vector<Polynomial> out;
  for (const auto& rows : subsets(nr))
    for (const auto& cols : subsets(nc))
      out.push_back(det_laplace(M, rows, cols, ring));
  return out;
}

}  // namespace tfp
