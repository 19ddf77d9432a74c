#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcay/cells.hpp"

namespace bcay {

/// Undirected loop-free graph on vertices 0..n-1.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);

  void add_edge(int u, int v);
  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_; }
  [[nodiscard]] const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  [[nodiscard]] bool adjacent(int u, int v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  [[nodiscard]] int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  /// Same graph with vertex v renamed perm[v].
  [[nodiscard]] SimpleGraph relabeled(const std::vector<int>& perm) const;

  std::vector<std::string> labels;

 private:
  int n_;
  std::size_t edges_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<char> matrix_;
};

/// BCay(G, pi): gamma vertices 0..n-1 are the group elements, beta vertices
/// n..n+b-1 the distinct translates gC in lexicographic order.
struct BipartiteIncidenceGraph {
  SimpleGraph graph;
  int gamma_size = 0;
  std::vector<ElementSet> beta;  // element set of each beta vertex
  std::vector<int> beta_class;   // G-orbit index of each beta vertex
  int ell = 0;
  int k = 0;

  [[nodiscard]] int beta_size() const { return static_cast<int>(beta.size()); }
  [[nodiscard]] int beta_vertex(int i) const { return gamma_size + i; }
  /// 0 for gamma, 1 for beta.
  [[nodiscard]] std::vector<int> sides() const;
};

/// Requires a bcay-valid family.
BipartiteIncidenceGraph build_bcay(const CellFamily& f);
/// Incidence graph of the group hypergraph with edges {gC}, for any family.
BipartiteIncidenceGraph build_group_hypergraph(const CellFamily& f);
/// Cay(G, S): g ~ h iff h^-1 g in S. S must be inverse-closed without e.
SimpleGraph build_cayley(const FiniteGroup& g, ElementSet s);
/// The bi-Cayley graph BiCay(G, 0, 0, S): (g,0) ~ (gs,1) for s in S;
/// vertices (g,0) are 0..n-1 and (g,1) are n..2n-1.
SimpleGraph build_bicayley(const FiniteGroup& g, ElementSet s);

/// Entrywise NN^T == A(Cay(G, S(pi))) + ell*I, in integer arithmetic.
bool biadjacency_identity_check(const BipartiteIncidenceGraph& x, const CellFamily& f);

/// Shortest cycle length; nullopt for a forest.
std::optional<int> girth(const SimpleGraph& x);
/// Shortest cycle through some vertex, as a vertex list; empty for a forest.
std::vector<int> shortest_cycle(const SimpleGraph& x);

/// Distance-two graphs on gamma and on beta.
std::pair<SimpleGraph, SimpleGraph> halved_graphs(const BipartiteIncidenceGraph& x);

/// Vertices reachable from 0 cover everything.
bool is_connected(const SimpleGraph& x);
/// Two-colouring, or nullopt.
std::optional<std::vector<int>> bipartition(const SimpleGraph& x);

}  // namespace bcay
