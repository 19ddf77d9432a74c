#pragma once

#include <cstdint>
#include <vector>

#include "bcay/graph.hpp"
#include "bcay/perm.hpp"

namespace bcay {

/// Byte encoding of the canonically relabeled graph (and vertex colours).
/// Equal certificates mean isomorphic graphs.
using CanonicalCertificate = std::vector<std::uint8_t>;

struct AutReport {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  std::vector<std::vector<int>> vertex_orbits;
  /// [Aut(X) : side-preserving subgroup] for bipartite input, else 1.
  int side_preserving_index = 1;
};

struct CanonicalForm {
  CanonicalCertificate certificate;
  Permutation labeling;  // labeling[v] = canonical position of v
  AutReport aut;
  std::size_t nodes = 0;  // search tree nodes visited
};

/// Individualization-refinement search. `colors` (optional) is a vertex
/// colouring that automorphisms and isomorphisms must respect; its values
/// are compared as integers, so it must itself be label-independent.
CanonicalForm canonical_form(const SimpleGraph& x, const std::vector<int>& colors = {});

CanonicalCertificate canonical_certificate(const SimpleGraph& x, const std::vector<int>& colors = {});

AutReport automorphism_group(const SimpleGraph& x, const std::vector<int>& colors = {});
/// Full automorphism group of BCay, with the side-preserving index filled in.
AutReport automorphism_group(const BipartiteIncidenceGraph& x);

std::string to_hex(const CanonicalCertificate& c);

}  // namespace bcay
