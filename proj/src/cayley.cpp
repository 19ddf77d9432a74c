#include "bcay/cayley.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <functional>
#include <unordered_map>

#include "bcay/error.hpp"

namespace bcay {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};

RegularSubgroup make_witness(const SimpleGraph& x, std::vector<Permutation> by_image) {
  RegularSubgroup r;
  const int n = x.order();
  if (n <= FiniteGroup::kMaxOrder) {
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) table[i][j] = by_image[i][j];  // (r_i r_j)(0) = r_i(j)
    r.group = from_table(std::move(table), "regular");
    for (int v : x.neighbors(0)) r.connection.insert(v);
  }
  r.elements = std::move(by_image);
  return r;
}

}  // namespace

std::optional<RegularSubgroup> regular_subgroup_from(const SimpleGraph& x, const std::vector<Permutation>& generators) {
  const int n = x.order();
  std::vector<Permutation> elems;
  try {
    elems = enumerate_group(n, generators, static_cast<std::size_t>(n));
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
  if (static_cast<int>(elems.size()) != n) return std::nullopt;
  std::vector<Permutation> by_image(n);
  for (auto& p : elems) {
    if (!by_image[p[0]].empty()) return std::nullopt;
    by_image[p[0]] = std::move(p);
  }
  for (const auto& p : by_image)
    if (!is_graph_automorphism(x, p)) return std::nullopt;
  return make_witness(x, std::move(by_image));
}

CayleyResult regular_subgroup_search(const SimpleGraph& x, const AutReport& report) {
  const int n = x.order();
  CayleyResult res;
  res.method = "search";
  if (n == 0) return res;
  const auto all = enumerate_group(n, report.generators, 500'000);
  std::unordered_map<Permutation, int, PermHash> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], static_cast<int>(i));
  std::vector<char> fpf(all.size(), 0);
  std::vector<std::vector<int>> by_image(n);
  for (std::size_t i = 1; i < all.size(); ++i) {
    bool free = true;
    for (int v = 0; v < n && free; ++v) free = all[i][v] != v;
    fpf[i] = free;
    if (free) by_image[all[i][0]].push_back(static_cast<int>(i));
  }

  std::set<std::vector<int>> visited;
  std::optional<std::vector<int>> found;

  // closure of the subgroup generated by gens; empty when not semiregular
  auto closure = [&](const std::vector<int>& gens) -> std::vector<int> {
    std::vector<int> elems{0};
    std::vector<char> hit(n, 0);
    hit[0] = 1;
    std::set<int> have{0};
    for (std::size_t q = 0; q < elems.size(); ++q)
      for (int gi : gens) {
        const int p = index.at(compose(all[gi], all[elems[q]]));
        if (have.count(p)) continue;
        if (!fpf[p] || hit[all[p][0]]) return {};
        hit[all[p][0]] = 1;
        have.insert(p);
        elems.push_back(p);
        if (static_cast<int>(elems.size()) > n) return {};
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  };

  std::function<void(const std::vector<int>&, const std::vector<int>&)> dfs = [&](const std::vector<int>& gens,
                                                                                   const std::vector<int>& elems) {
    if (found) return;
    if (static_cast<int>(elems.size()) == n) {
      found = elems;
      return;
    }
    std::vector<char> covered(n, 0);
    for (int e : elems) covered[all[e][0]] = 1;
    int u = 0;
    while (covered[u]) ++u;
    for (int cand : by_image[u]) {
      std::vector<int> g2 = gens;
      g2.push_back(cand);
      auto next = closure(g2);
      if (next.empty() || n % static_cast<int>(next.size()) != 0) continue;
      if (!visited.insert(next).second) continue;
      dfs(g2, next);
      if (found) return;
    }
  };
  dfs({}, {0});
  if (found) {
    std::vector<Permutation> by(n);
    for (int e : *found) by[all[e][0]] = all[e];
    res.is_cayley = true;
    res.witness = make_witness(x, std::move(by));
  }
  return res;
}

CayleyResult is_cayley_graph(const SimpleGraph& x, const AutReport& report,
                             const std::vector<std::vector<Permutation>>& constructive) {
  CayleyResult res;
  const auto n = static_cast<std::uint64_t>(x.order());
  if (n == 0 || report.order % n != 0) {
    res.method = "divisibility";
    return res;
  }
  if (report.vertex_orbits.size() != 1) {
    res.method = "not vertex-transitive";
    return res;
  }
  for (const auto& gens : constructive) {
    if (auto w = regular_subgroup_from(x, gens)) {
      res.is_cayley = true;
      res.method = "constructive";
      res.witness = std::move(w);
      return res;
    }
  }
  return regular_subgroup_search(x, report);
}

Permutation translation_permutation(const BipartiteIncidenceGraph& x, const FiniteGroup& g, Element e) {
  std::map<ElementSet, int> beta_index;
  for (int i = 0; i < x.beta_size(); ++i) beta_index[x.beta[i]] = i;
  Permutation p(x.graph.order());
  for (int v = 0; v < x.gamma_size; ++v) p[v] = g.mul(e, v);
  for (int i = 0; i < x.beta_size(); ++i) p[x.beta_vertex(i)] = x.beta_vertex(beta_index.at(translate_set(g, e, x.beta[i])));
  return p;
}

Permutation swap_permutation(const BipartiteIncidenceGraph& x, const CellFamily& f, const SwapIsomorphism& s) {
  const FiniteGroup& g = f.g();
  const ElementSet c1 = f.cells.front();
  std::map<ElementSet, int> beta_index;
  for (int i = 0; i < x.beta_size(); ++i) beta_index[x.beta[i]] = i;
  // beta-regular: every beta vertex is gC1 for a unique g
  std::vector<Element> base(x.beta_size(), -1);
  for (int h = 0; h < g.order(); ++h) base[beta_index.at(translate_set(g, h, c1))] = h;
  Permutation p(x.graph.order());
  for (int v = 0; v < x.gamma_size; ++v) p[v] = x.beta_vertex(beta_index.at(translate_set(g, s.phi(v), c1)));
  for (int i = 0; i < x.beta_size(); ++i) p[x.beta_vertex(i)] = g.mul(s.phi(base[i]), s.g_phi);
  return p;
}

std::vector<std::vector<Permutation>> constructive_generators(const BipartiteIncidenceGraph& x, const CellFamily& f) {
  if (!f.valid() || !translate_classes(f).beta_regular) return {};
  auto s = swap_isomorphism(f);
  if (!s) return {};
  std::vector<Permutation> gens;
  for (Element e : generating_set(f.g())) gens.push_back(translation_permutation(x, f.g(), e));
  gens.push_back(swap_permutation(x, f, *s));
  return {gens};
}

std::uint64_t hypergraph_normalizer_order(const CellFamily& f) {
  const FiniteGroup& g = f.g();
  if (g.order() > 12) throw InvalidArgument("hypergraph_normalizer_order is limited to groups of order <= 12");
  const auto x = build_group_hypergraph(f);
  const AutReport ah = automorphism_group(x.graph, x.sides());
  const auto elems = enumerate_group(x.graph.order(), ah.generators);
  const auto gens = generating_set(g);
  std::uint64_t count = 0;
  for (const auto& p : elems) {
    const Permutation pinv = inverse(p);
    bool normalizes = true;
    for (Element s : gens) {
      // q = p L_s p^-1 restricted to gamma must be a left translation
      auto q = [&](int v) { return p[g.mul(s, pinv[v])]; };
      const Element h = q(0);
      for (int v = 0; v < g.order() && normalizes; ++v) normalizes = q(v) == g.mul(h, v);
      if (!normalizes) break;
    }
    if (normalizes) ++count;
  }
  return count;
}

}  // namespace bcay
