#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcay/canon.hpp"
#include "bcay/cells.hpp"

namespace bcay {

/// A subgroup of Aut(X) acting regularly on V(X), as an abstract group.
/// Element i is the unique automorphism sending vertex 0 to vertex i, so
/// Cay(group, connection) is X itself with vertex i <-> element i.
struct RegularSubgroup {
  std::vector<Permutation> elements;
  GroupPtr group;
  ElementSet connection;  // elements whose image of 0 is a neighbour of 0
};

struct CayleyResult {
  bool is_cayley = false;
  /// "divisibility", "not vertex-transitive", "constructive", "search"
  std::string method;
  std::optional<RegularSubgroup> witness;
};

/// Closure of the generators if it acts regularly, else nullopt.
std::optional<RegularSubgroup> regular_subgroup_from(const SimpleGraph& x, const std::vector<Permutation>& generators);

/// Sabidussi test. Constructive generating sets are tried first; then a
/// transversal-building search over the enumerated automorphism group.
/// Graphs of order above 64 cannot carry a group witness.
CayleyResult is_cayley_graph(const SimpleGraph& x, const AutReport& report,
                             const std::vector<std::vector<Permutation>>& constructive = {});

/// Only the regular-subgroup search, without fast paths or shortcuts.
CayleyResult regular_subgroup_search(const SimpleGraph& x, const AutReport& report);

/// The left translation L_g acting on the vertices of BCay.
Permutation translation_permutation(const BipartiteIncidenceGraph& x, const FiniteGroup& g, Element e);
/// The side-swapping automorphism f_phi built from a swap isomorphism.
Permutation swap_permutation(const BipartiteIncidenceGraph& x, const CellFamily& f, const SwapIsomorphism& s);
/// Translations plus f_phi, when the family has a swap isomorphism.
std::vector<std::vector<Permutation>> constructive_generators(const BipartiteIncidenceGraph& x, const CellFamily& f);

/// |N_AH(G)|: side-preserving automorphisms of BCay normalizing the left
/// translations, counted by enumeration. Requires |G| <= 12.
std::uint64_t hypergraph_normalizer_order(const CellFamily& f);

}  // namespace bcay
