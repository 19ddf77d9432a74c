#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcay/canon.hpp"
#include "bcay/cells.hpp"
#include "bcay/graph.hpp"

namespace bcay {

// ---- difference sets ------------------------------------------------------

/// Whether the differences d d'^-1 (Side::right) or d^-1 d' (Side::left) with
/// d != d' are pairwise distinct.
bool differences_distinct(const FiniteGroup& g, ElementSet d, Side side);

/// Every non-identity element is d d'^-1 for exactly lambda pairs. For
/// lambda = 1 the left-difference form is checked as well and a disagreement
/// throws Error.
bool is_difference_set(const FiniteGroup& g, ElementSet d, int lambda);

/// D d^-1 for the least d in D, so the result contains the identity.
struct ShiftedSet {
  ElementSet set;
  Element shift = 0;  // the d used; 0 when D already held the identity
};
ShiftedSet normalize_difference_set(const FiniteGroup& g, ElementSet d);

/// Points G and blocks {Dg}; points are vertices 0..n-1, blocks follow in
/// lexicographic order.
SimpleGraph development_graph(const FiniteGroup& g, ElementSet d);

struct DiffsetFamilies {
  CellFamily pi_d;      // {d^-1 D : d in D}
  CellFamily pi_d_inv;  // {d D^-1 : d in D}
  /// dev(D), dev(D^-1) and both BCay graphs share one certificate. Only
  /// evaluated when both families are bcay-valid.
  std::optional<bool> four_way_isomorphic;
};
/// Requires the identity in D (InvalidArgument otherwise).
DiffsetFamilies diffset_to_families(GroupPtr group, ElementSet d);

// ---- designs ---------------------------------------------------------------

struct DesignReport {
  int v = 0, k = 0, lambda = 0, r = 0, b = 0;
  bool is_design = false;
  bool is_symmetric = false;
};

/// Points 0..points-1, blocks the remaining vertices. k and r are 0 when
/// block sizes or replication numbers vary.
DesignReport two_design_check(const SimpleGraph& x, int points);
DesignReport two_design_check(const BipartiteIncidenceGraph& x);

// ---- finite geometries -----------------------------------------------------

/// One-dimensional subspaces of F_q^n on the additive group Z_p^(mn).
/// Requires q^n <= 64.
CellFamily ag_family(int n, int q);

/// Lines through the point <1> of PG(n-1, q) in Singer form, on
/// Z_((q^n-1)/(q-1)). Requires n >= 3 and q^n <= 64.
CellFamily pg_family(int n, int q);

// ---- two cells -------------------------------------------------------------

struct TwoCellReport {
  int kase = 0;  // 1: both cells subgroups; 2: S1 u S1x form
  ElementSet c1, c2;
  ElementSet s1, s2;
  std::optional<Element> x;
  std::vector<Element> x_candidates;  // every valid x, ascending
  /// For abelian groups: "cycle" or "subdivided K_{m,m}".
  std::optional<std::string> shape;
};

/// Requires a bcay-valid family with two cells; `first` picks the cell that
/// plays C1. The reported x has least element order among the candidates.
TwoCellReport classify_two_cell(const CellFamily& f, int first = 0);

// ---- conversions -----------------------------------------------------------

struct BipartiteCayleyConversion {
  GroupPtr kernel;                 // G0, as its own group
  std::vector<Element> embedding;  // embedding[i] = G-index of G0 element i
  CellFamily family;               // on G0
  bool certified = false;          // BCay(G0, pi) has Cay(G, S)'s certificate
};

/// Cay(G, S) bipartite of girth >= 6 as BCay(G0, pi) with cells s_i S.
/// Throws InvalidArgument when not bipartite, ShortCycle when girth < 6.
BipartiteCayleyConversion bipartite_cayley_to_bcay(const GroupPtr& group, ElementSet s);

struct BiCayleyConversion {
  CellFamily family;
  bool certified = false;
};

/// BiCay(G, 0, 0, S) as BCay(G, pi) with cells s_i^-1 S. Rejects |S| < 2
/// (InvalidArgument) and girth < 6 (ShortCycle).
BiCayleyConversion bicay_to_bcay(const GroupPtr& group, ElementSet s);

struct DihedralCertificate {
  GroupPtr group;  // dih(G)
  ElementSet connection;
  bool certified = false;
};

/// For abelian beta-regular families: T = {(c^-1, 1) : c in C1} in dih(G),
/// with Cay(dih(G), T) checked against BCay(G, pi).
DihedralCertificate dihedral_certificate(const CellFamily& f);

}  // namespace bcay
