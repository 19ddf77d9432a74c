#include "bcay/graph.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <deque>
#include <map>

#include "bcay/error.hpp"

namespace bcay {

SimpleGraph::SimpleGraph(int n)
    : n_(n), adj_(n), matrix_(static_cast<std::size_t>(n) * n, 0) {
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
  matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edges_;
}

SimpleGraph SimpleGraph::relabeled(const std::vector<int>& perm) const {
  SimpleGraph out(n_);
  for (int u = 0; u < n_; ++u) {
    out.labels[perm[u]] = labels[u];
    for (int v : adj_[u])
      if (u < v) out.add_edge(perm[u], perm[v]);
  }
  return out;
}

std::vector<int> BipartiteIncidenceGraph::sides() const {
  std::vector<int> s(graph.order(), 1);
  std::fill(s.begin(), s.begin() + gamma_size, 0);
  return s;
}

BipartiteIncidenceGraph build_group_hypergraph(const CellFamily& f) {
  const FiniteGroup& g = f.g();
  const int n = g.order();
  std::vector<ElementSet> beta;
  for (int x = 0; x < n; ++x)
    for (const auto& c : f.cells) beta.push_back(translate_set(g, x, c));
  std::sort(beta.begin(), beta.end());
  beta.erase(std::unique(beta.begin(), beta.end()), beta.end());

  BipartiteIncidenceGraph x;
  x.gamma_size = n;
  x.ell = f.ell;
  x.k = f.k;
  x.graph = SimpleGraph(n + static_cast<int>(beta.size()));
  for (int v = 0; v < n; ++v) x.graph.labels[v] = g.label(v);
  std::map<ElementSet, int> orbit_rep;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    ElementSet rep = beta[i];
    for (int y = 0; y < n; ++y) rep = std::min(rep, translate_set(g, y, beta[i]));
    auto [it, inserted] = orbit_rep.try_emplace(rep, static_cast<int>(orbit_rep.size()));
    x.beta_class.push_back(it->second);
    const int bv = n + static_cast<int>(i);
    x.graph.labels[bv] = to_string(beta[i]);
    beta[i].for_each([&](Element e) { x.graph.add_edge(e, bv); });
  }
  x.beta = std::move(beta);
  return x;
}

BipartiteIncidenceGraph build_bcay(const CellFamily& f) {
  if (!f.valid()) throw InvalidArgument("build_bcay needs a bcay-valid family: " + f.violation.describe());
  return build_group_hypergraph(f);
}

SimpleGraph build_cayley(const FiniteGroup& g, ElementSet s) {
  if (s.contains(0)) throw InvalidArgument("Cayley connection set contains the identity");
  if (inverse_set(g, s) != s) throw InvalidArgument("Cayley connection set is not inverse-closed");
  SimpleGraph x(g.order());
  for (int v = 0; v < g.order(); ++v) {
    x.labels[v] = g.label(v);
    // g ~ h iff h^-1 g in S, i.e. g = h s
    s.for_each([&](Element t) { x.add_edge(v, g.mul(v, t)); });
  }
  return x;
}

SimpleGraph build_bicayley(const FiniteGroup& g, ElementSet s) {
  const int n = g.order();
  SimpleGraph x(2 * n);
  for (int v = 0; v < n; ++v) {
    x.labels[v] = "(" + g.label(v) + ",0)";
    x.labels[n + v] = "(" + g.label(v) + ",1)";
    s.for_each([&](Element t) { x.add_edge(v, n + g.mul(v, t)); });
  }
  return x;
}

bool biadjacency_identity_check(const BipartiteIncidenceGraph& x, const CellFamily& f) {
  const int n = x.gamma_size;
  const int b = x.beta_size();
  Eigen::MatrixXi N = Eigen::MatrixXi::Zero(n, b);
  for (int i = 0; i < b; ++i) x.beta[i].for_each([&](Element e) { N(e, i) = 1; });
  const Eigen::MatrixXi lhs = N * N.transpose();
  const ElementSet s = connection_set(f);
  Eigen::MatrixXi rhs = f.ell * Eigen::MatrixXi::Identity(n, n);
  const FiniteGroup& g = f.g();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && s.contains(g.mul(g.inv(v), u))) rhs(u, v) += 1;
  return lhs == rhs;
}

namespace {

// Shortest cycle through root found by BFS; returns length or 0.
int cycle_through(const SimpleGraph& x, int root, int bound, std::vector<int>* cycle) {
  const int n = x.order();
  std::vector<int> dist(n, -1), parent(n, -1);
  std::deque<int> q{root};
  dist[root] = 0;
  int best = 0;
  int bu = -1, bv = -1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    if (2 * dist[u] >= (best ? best : bound)) break;
    for (int v : x.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        q.push_back(v);
      } else if (v != parent[u]) {
        const int len = dist[u] + dist[v] + 1;
        if (len < (best ? best : bound)) {
          best = len;
          bu = u;
          bv = v;
        }
      }
    }
  }
  if (best && cycle) {
    std::vector<int> a, b;
    for (int w = bu; w >= 0; w = parent[w]) a.push_back(w);
    for (int w = bv; w >= 0; w = parent[w]) b.push_back(w);
    // paths share a prefix from root; trim to the last common vertex
    while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
      a.pop_back();
      b.pop_back();
    }
    cycle->assign(a.begin(), a.end());
    for (std::size_t i = b.size() - 1; i-- > 0;) cycle->push_back(b[i]);
    std::reverse(cycle->begin(), cycle->end());
  }
  return best;
}

}  // namespace

std::optional<int> girth(const SimpleGraph& x) {
  int best = 0;
  for (int v = 0; v < x.order(); ++v) {
    const int c = cycle_through(x, v, best ? best : x.order() + 1, nullptr);
    if (c && (!best || c < best)) best = c;
  }
  if (!best) return std::nullopt;
  return best;
}

std::vector<int> shortest_cycle(const SimpleGraph& x) {
  int best = 0;
  std::vector<int> out;
  for (int v = 0; v < x.order(); ++v) {
    std::vector<int> cyc;
    const int c = cycle_through(x, v, best ? best : x.order() + 1, &cyc);
    if (c && (!best || c < best)) {
      best = c;
      out = cyc;
    }
  }
  return out;
}

std::pair<SimpleGraph, SimpleGraph> halved_graphs(const BipartiteIncidenceGraph& x) {
  const int n = x.gamma_size;
  const int b = x.beta_size();
  SimpleGraph hg(n), hb(b);
  for (int v = 0; v < n; ++v) hg.labels[v] = x.graph.labels[v];
  for (int i = 0; i < b; ++i) hb.labels[i] = x.graph.labels[n + i];
  for (int mid = 0; mid < x.graph.order(); ++mid) {
    const auto& nb = x.graph.neighbors(mid);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (mid >= n)
          hg.add_edge(nb[i], nb[j]);
        else
          hb.add_edge(nb[i] - n, nb[j] - n);
      }
  }
  return {std::move(hg), std::move(hb)};
}

bool is_connected(const SimpleGraph& x) {
  if (x.order() == 0) return true;
  std::vector<char> seen(x.order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : x.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == x.order();
}

std::optional<std::vector<int>> bipartition(const SimpleGraph& x) {
  std::vector<int> side(x.order(), -1);
  for (int s = 0; s < x.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : x.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace bcay
