#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcay/group.hpp"

namespace bcay {

enum class Validity { generic, t_axiom, bcay_valid };

std::string to_string(Validity v);

/// The first axiom a family fails, with a witness.
struct Violation {
  enum class Kind { none, missing_translate, size_mismatch, fat_intersection };
  Kind kind = Kind::none;
  ElementSet cell;     // offending cell
  Element element = 0; // s with s^-1 C missing (missing_translate)
  ElementSet other;    // the missing translate, or the second cell

  [[nodiscard]] std::string describe() const;
};

/// A canonical collection of cells over a group with its validity stage.
struct CellFamily {
  GroupPtr group;
  std::vector<ElementSet> cells;  // sorted lexicographically, no duplicates
  Validity validity = Validity::generic;
  Violation violation;
  int ell = 0;
  int k = 0;  // common cell size, 0 when sizes differ
  /// Every non-identity element lies in exactly this many cells, if constant.
  std::optional<int> lambda;

  [[nodiscard]] const FiniteGroup& g() const { return *group; }
  [[nodiscard]] bool valid() const { return validity == Validity::bcay_valid; }
};

/// Canonicalize and stage a family. Throws InvalidArgument for an empty family
/// or a cell without the identity.
CellFamily validate_family(GroupPtr group, std::vector<ElementSet> cells);

/// Union of the cells without the identity.
ElementSet connection_set(const CellFamily& f);
bool is_connected(const CellFamily& f);

struct TranslateClass {
  ElementSet representative;        // least member
  std::vector<ElementSet> members;  // {s^-1 C : s in C}, sorted
};

struct BetaReport {
  std::vector<TranslateClass> classes;
  bool beta_transitive = false;
  std::vector<ElementSet> stabilizers;  // C n C^-1, one per cell in family order
  bool beta_regular = false;
};

/// The translate classes {s^-1 C : s in C} of a bcay-valid family.
BetaReport translate_classes(const CellFamily& f);
/// {s^-1 C : s in C}, sorted.
std::vector<ElementSet> translate_class_of(const FiniteGroup& g, ElementSet c);
/// All x with xC = C, by direct scan.
ElementSet stabilizer_bruteforce(const FiniteGroup& g, ElementSet c);

/// pi* = {g C1^-1 : g in C1} with C1 the least cell. Requires beta-regularity.
CellFamily dual_family(const CellFamily& f);
/// Cells C x {e} for C in f1 and {e} x C for C in f2 on G1 x G2.
CellFamily product_family(const CellFamily& f1, const CellFamily& f2);
/// Size-r intersections C n C', or nullopt when there are none.
std::optional<CellFamily> intersect_families(const CellFamily& f1, const CellFamily& f2, int r);

/// Automorphisms of G permuting the cells.
std::vector<GroupMap> family_automorphisms(const CellFamily& f);

struct SwapIsomorphism {
  GroupMap phi;
  ElementSet image;      // phi(C1), a cell of the dual family
  Element g_phi = 0;     // phi(C1) = g_phi C1^-1
  bool involution = false;
};

/// A group automorphism carrying the least cell onto a dual cell. Prefers
/// involutions with g_phi = e, then involutions, then any; ties broken by
/// lexicographic image order. Requires beta-regularity.
std::optional<SwapIsomorphism> swap_isomorphism(const CellFamily& f);

/// {{e, s, ..., s^(t-1)} : s in S}. With require_uniform, rejects t above the
/// order of some s.
CellFamily t_cayley_family(GroupPtr group, ElementSet s, int t, bool require_uniform = false);

}  // namespace bcay
