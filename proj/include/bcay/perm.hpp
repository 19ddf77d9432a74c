#pragma once

#include <cstddef>
#include <vector>

namespace bcay {

class SimpleGraph;

/// p[v] is the image of v.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
/// (a * b)(x) = a(b(x))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
bool is_identity(const Permutation& p);
bool fixes(const Permutation& p, int v);

/// Orbits of the group generated by gens, each sorted, ordered by least member.
std::vector<std::vector<int>> orbits(int n, const std::vector<Permutation>& gens);
/// orbit_id[v] = index of v's orbit in orbits().
std::vector<int> orbit_ids(int n, const std::vector<Permutation>& gens);

/// Every element of the generated group, identity first, the rest sorted.
/// Throws InvalidArgument past `limit` elements.
std::vector<Permutation> enumerate_group(int n, const std::vector<Permutation>& gens, std::size_t limit = 2'000'000);

bool is_graph_automorphism(const SimpleGraph& x, const Permutation& p);

}  // namespace bcay
