#include "bcay/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bcay/error.hpp"
#include "bcay/graph.hpp"

namespace bcay {

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

bool fixes(const Permutation& p, int v) { return p[v] == v; }

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<int> orbit_ids(int n, const std::vector<Permutation>& gens) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& g : gens)
    for (int v = 0; v < n; ++v) {
      const int a = find(parent, v), b = find(parent, g[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> id(n, -1), root_id(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int r = find(parent, v);
    if (root_id[r] < 0) root_id[r] = next++;
    id[v] = root_id[r];
  }
  return id;
}

std::vector<std::vector<int>> orbits(int n, const std::vector<Permutation>& gens) {
  const auto id = orbit_ids(n, gens);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < n; ++v) {
    if (id[v] >= static_cast<int>(out.size())) out.resize(id[v] + 1);
    out[id[v]].push_back(v);
  }
  return out;
}

std::vector<Permutation> enumerate_group(int n, const std::vector<Permutation>& gens, std::size_t limit) {
  std::set<Permutation> seen{identity_permutation(n)};
  std::vector<Permutation> queue{identity_permutation(n)};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& g : gens) {
      Permutation p = compose(g, queue[q]);
      if (seen.insert(p).second) {
        if (seen.size() > limit) throw InvalidArgument("permutation group exceeds " + std::to_string(limit) + " elements");
        queue.push_back(std::move(p));
      }
    }
  }
  return {seen.begin(), seen.end()};  // identity sorts first
}

bool is_graph_automorphism(const SimpleGraph& x, const Permutation& p) {
  if (static_cast<int>(p.size()) != x.order()) return false;
  std::vector<char> hit(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= x.order() || hit[v]) return false;
    hit[v] = 1;
  }
  for (int u = 0; u < x.order(); ++u)
    for (int v : x.neighbors(u))
      if (!x.adjacent(p[u], p[v])) return false;
  return true;
}

}  // namespace bcay
