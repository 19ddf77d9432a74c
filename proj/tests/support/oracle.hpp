#pragma once

// Brute-force reference implementations used by the unit and acceptance
// tests. They deliberately avoid the library's search code paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <Eigen/Eigenvalues>

#include "bcay/canon.hpp"
#include "bcay/graph.hpp"
#include "bcay/group.hpp"
#include "bcay/perm.hpp"

namespace oracle {

using bcay::Element;
using bcay::ElementSet;
using bcay::FiniteGroup;

inline ElementSet left_translate(const FiniteGroup& g, Element x, ElementSet c) {
  ElementSet out;
  c.for_each([&](Element s) { out.insert(g.mul(x, s)); });
  return out;
}

/// Definition check: equal sizes, pairwise {e} intersections, T-axiom.
inline bool axioms_hold(const FiniteGroup& g, const std::vector<ElementSet>& cells) {
  std::set<std::uint64_t> have;
  for (ElementSet c : cells) have.insert(c.bits());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].contains(0) || cells[i].size() != cells[0].size()) return false;
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      if ((cells[i] & cells[j]) != ElementSet{0}) return false;
  }
  for (ElementSet c : cells) {
    bool ok = true;
    c.for_each([&](Element s) { ok = ok && have.count(left_translate(g, g.inv(s), c).bits()) > 0; });
    if (!ok) return false;
  }
  return true;
}

/// Breadth-first search over right multiplication by the connection set.
inline bool generates(const FiniteGroup& g, ElementSet s) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> queue{0};
  seen[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q)
    s.for_each([&](Element t) {
      const Element y = g.mul(queue[q], t);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    });
  return static_cast<int>(queue.size()) == g.order();
}

/// Incidence graph with gamma = G and beta = the distinct sets gC.
inline bcay::SimpleGraph incidence_graph(const FiniteGroup& g, const std::vector<ElementSet>& cells) {
  std::set<ElementSet> blocks;
  for (Element x = 0; x < g.order(); ++x)
    for (ElementSet c : cells) blocks.insert(left_translate(g, x, c));
  bcay::SimpleGraph out(g.order() + static_cast<int>(blocks.size()));
  int i = g.order();
  for (ElementSet b : blocks) {
    b.for_each([&](Element x) { out.add_edge(x, i); });
    ++i;
  }
  return out;
}

/// Certificates of all non-trivial connected families with at most
/// `max_cells` cells of size at most `max_size`, by trying every tuple of
/// cells with disjoint non-identity parts.
inline std::set<bcay::CanonicalCertificate> naive_certificates(const FiniteGroup& g, int max_cells, int max_size,
                                                               std::size_t* families = nullptr) {
  const int n = g.order();
  std::set<bcay::CanonicalCertificate> certs;
  std::size_t count = 0;
  for (int k = 3; k <= max_size && k <= n; ++k) {
    std::vector<ElementSet> cand;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); m += 2)
      if (std::popcount(m) == k) cand.push_back(ElementSet(m));
    std::vector<ElementSet> chosen;
    auto rec = [&](auto&& self, std::size_t start, std::uint64_t used) -> void {
      if (chosen.size() >= 2 && axioms_hold(g, chosen) && generates(g, ElementSet(used))) {
        ++count;
        certs.insert(bcay::canonical_certificate(incidence_graph(g, chosen)));
      }
      if (static_cast<int>(chosen.size()) == max_cells) return;
      for (std::size_t i = start; i < cand.size(); ++i) {
        const std::uint64_t part = cand[i].bits() & ~std::uint64_t{1};
        if (used & part) continue;
        chosen.push_back(cand[i]);
        self(self, i + 1, used | part);
        chosen.pop_back();
      }
    };
    rec(rec, 0, 0);
  }
  if (families) *families = count;
  return certs;
}

/// All permutations p with p(X) = Y as edge sets, by plain backtracking.
inline bool isomorphic_bruteforce(const bcay::SimpleGraph& x, const bcay::SimpleGraph& y) {
  const int n = x.order();
  if (n != y.order() || x.edge_count() != y.edge_count()) return false;
  std::vector<int> dx(n), dy(n);
  for (int v = 0; v < n; ++v) {
    dx[v] = x.degree(v);
    dy[v] = y.degree(v);
  }
  {
    auto a = dx, b = dy;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || dy[w] != dx[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = x.adjacent(u, v) == y.adjacent(map[u], w);
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    map[v] = -1;
    return false;
  };
  return rec(rec, 0);
}

/// Number of automorphisms by exhaustive backtracking.
inline std::uint64_t automorphism_count_bruteforce(const bcay::SimpleGraph& x) {
  const int n = x.order();
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || x.degree(w) != x.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = x.adjacent(u, v) == x.adjacent(map[u], w);
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

/// Automorphisms of G as image vectors, by backtracking over bijections
/// with every product among assigned elements checked.
inline std::vector<std::vector<int>> group_automorphisms_bruteforce(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> p(n, -1);
  std::vector<char> used(n, 0);
  std::vector<std::vector<int>> out;
  p[0] = 0;
  used[0] = 1;
  auto consistent = [&](int v) {
    for (int a = 0; a <= v; ++a)
      for (int b = 0; b <= v; ++b) {
        if (a != v && b != v) continue;
        const int c = g.mul(a, b);
        if (c <= v && p[c] != g.mul(p[a], p[b])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(p);
      return;
    }
    for (int w = 1; w < n; ++w) {
      if (used[w] || g.element_order(w) != g.element_order(v)) continue;
      p[v] = w;
      used[w] = 1;
      if (consistent(v)) self(self, v + 1);
      used[w] = 0;
      p[v] = -1;
    }
  };
  rec(rec, 1);
  return out;
}

/// |G| times the number of automorphisms of G mapping the translates of the
/// cells onto themselves.
inline std::uint64_t normalizer_order_bruteforce(const FiniteGroup& g, const std::vector<std::vector<int>>& auts,
                                                 const std::vector<ElementSet>& cells) {
  std::set<std::uint64_t> blocks;
  for (Element x = 0; x < g.order(); ++x)
    for (ElementSet c : cells) blocks.insert(left_translate(g, x, c).bits());
  std::uint64_t fixing = 0;
  for (const auto& p : auts) {
    bool keeps = true;
    for (std::uint64_t b : blocks) {
      ElementSet img;
      ElementSet(b).for_each([&](Element x) { img.insert(p[x]); });
      if (!blocks.count(img.bits())) {
        keeps = false;
        break;
      }
    }
    if (keeps) ++fixing;
  }
  return fixing * static_cast<std::uint64_t>(g.order());
}

/// NN^T = A + ell I checked entrywise in integers: N from the oracle's own
/// block list, A from x^-1 y in the union of the cells minus e.
inline bool biadjacency_identity_holds(const FiniteGroup& g, const std::vector<ElementSet>& cells) {
  const int n = g.order();
  std::set<ElementSet> blocks;
  for (Element x = 0; x < n; ++x)
    for (ElementSet c : cells) blocks.insert(left_translate(g, x, c));
  ElementSet s;
  for (ElementSet c : cells) s = s | c;
  s = s - ElementSet{0};
  const int ell = static_cast<int>(cells.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      long long nnt = 0;
      for (ElementSet b : blocks) nnt += (b.contains(x) && b.contains(y)) ? 1 : 0;
      const long long a = s.contains(g.mul(g.inv(x), y)) ? 1 : 0;
      if (nnt != a + (x == y ? ell : 0)) return false;
    }
  return true;
}

/// Eigenvalues of the adjacency matrix via Eigen's dense symmetric solver,
/// ascending.
inline std::vector<double> eigenvalues(const bcay::SimpleGraph& x) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(x.order(), x.order());
  for (int v = 0; v < x.order(); ++v)
    for (int w : x.neighbors(v)) a(v, w) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// Length of the shortest cycle by BFS from every vertex; 0 when acyclic.
inline int girth(const bcay::SimpleGraph& x) {
  int best = 0;
  for (int r = 0; r < x.order(); ++r) {
    std::vector<int> dist(x.order(), -1), parent(x.order(), -1);
    std::vector<int> queue{r};
    dist[r] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int v = queue[q];
      for (int w : x.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          const int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace oracle
