#include "bcay/cells.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bcay/error.hpp"

namespace bcay {

std::string to_string(Validity v) {
  switch (v) {
    case Validity::generic: return "generic";
    case Validity::t_axiom: return "t_axiom";
    case Validity::bcay_valid: return "bcay_valid";
  }
  return "?";
}

std::string Violation::describe() const {
  switch (kind) {
    case Kind::none: return "none";
    case Kind::missing_translate:
      return "missing translate: C=" + to_string(cell) + ", s=" + std::to_string(element) + ", s^-1 C=" + to_string(other);
    case Kind::size_mismatch:
      return "size mismatch: " + to_string(cell) + " vs " + to_string(other);
    case Kind::fat_intersection:
      return "cells " + to_string(cell) + " and " + to_string(other) + " share " + to_string(cell & other);
  }
  return "?";
}

CellFamily validate_family(GroupPtr group, std::vector<ElementSet> cells) {
  if (!group) throw InvalidArgument("family has no group");
  if (cells.empty()) throw InvalidArgument("family has no cells");
  const FiniteGroup& g = *group;
  for (const auto& c : cells) {
    if (!c.is_subset_of(g.all())) throw InvalidArgument("cell " + to_string(c) + " has elements outside the group");
    if (!c.contains(0)) throw InvalidArgument("cell " + to_string(c) + " does not contain the identity");
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  CellFamily f;
  f.group = std::move(group);
  f.cells = std::move(cells);
  f.ell = static_cast<int>(f.cells.size());
  f.k = f.cells.front().size();
  for (const auto& c : f.cells)
    if (c.size() != f.k) f.k = 0;

  std::vector<int> count(g.order(), 0);
  for (const auto& c : f.cells) c.for_each([&](Element x) { ++count[x]; });
  if (g.order() > 1) {
    const int first = count[1];
    bool constant = true;
    for (int x = 2; x < g.order(); ++x) constant = constant && count[x] == first;
    if (constant) f.lambda = first;
  }

  auto contains_cell = [&](ElementSet c) { return std::binary_search(f.cells.begin(), f.cells.end(), c); };
  for (const auto& c : f.cells) {
    for (Element s : c.members()) {
      const ElementSet t = translate_set(g, g.inv(s), c);
      if (!contains_cell(t)) {
        f.violation = {Violation::Kind::missing_translate, c, s, t};
        return f;
      }
    }
  }
  f.validity = Validity::t_axiom;
  for (const auto& c : f.cells)
    if (c.size() != f.cells.front().size()) {
      f.violation = {Violation::Kind::size_mismatch, f.cells.front(), 0, c};
      return f;
    }
  for (std::size_t i = 0; i < f.cells.size(); ++i)
    for (std::size_t j = i + 1; j < f.cells.size(); ++j)
      if ((f.cells[i] & f.cells[j]) != ElementSet::singleton(0)) {
        f.violation = {Violation::Kind::fat_intersection, f.cells[i], 0, f.cells[j]};
        return f;
      }
  f.validity = Validity::bcay_valid;
  return f;
}

ElementSet connection_set(const CellFamily& f) {
  ElementSet s;
  for (const auto& c : f.cells) s = s | c;
  s.erase(0);
  return s;
}

bool is_connected(const CellFamily& f) {
  return generated_subgroup(f.g(), connection_set(f)) == f.g().all();
}

std::vector<ElementSet> translate_class_of(const FiniteGroup& g, ElementSet c) {
  std::vector<ElementSet> out;
  c.for_each([&](Element s) { out.push_back(translate_set(g, g.inv(s), c)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet stabilizer_bruteforce(const FiniteGroup& g, ElementSet c) {
  ElementSet out;
  for (int x = 0; x < g.order(); ++x)
    if (translate_set(g, x, c) == c) out.insert(x);
  return out;
}

namespace {

void require_valid(const CellFamily& f, const char* what) {
  if (!f.valid()) throw InvalidArgument(std::string(what) + " needs a bcay-valid family");
}

}  // namespace

BetaReport translate_classes(const CellFamily& f) {
  require_valid(f, "translate_classes");
  const FiniteGroup& g = f.g();
  BetaReport r;
  std::set<ElementSet> seen;
  for (const auto& c : f.cells) {
    if (seen.count(c)) continue;
    TranslateClass tc;
    tc.members = translate_class_of(g, c);
    tc.representative = tc.members.front();
    for (const auto& m : tc.members) seen.insert(m);
    r.classes.push_back(std::move(tc));
  }
  r.beta_transitive = r.classes.size() == 1;
  bool trivial = true;
  for (const auto& c : f.cells) {
    const ElementSet st = c & inverse_set(g, c);
    r.stabilizers.push_back(st);
    trivial = trivial && st == ElementSet::singleton(0);
  }
  r.beta_regular = r.beta_transitive && trivial;
  return r;
}

namespace {

std::vector<ElementSet> dual_cells(const FiniteGroup& g, ElementSet c1) {
  const ElementSet inv = inverse_set(g, c1);
  std::vector<ElementSet> out;
  c1.for_each([&](Element x) { out.push_back(translate_set(g, x, inv)); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CellFamily dual_family(const CellFamily& f) {
  if (!translate_classes(f).beta_regular) throw InvalidArgument("dual family needs a beta-regular family");
  CellFamily d = validate_family(f.group, dual_cells(f.g(), f.cells.front()));
  if (!d.valid()) throw Error("dual family failed validation: " + d.violation.describe());
  return d;
}

CellFamily product_family(const CellFamily& f1, const CellFamily& f2) {
  require_valid(f1, "product_family");
  require_valid(f2, "product_family");
  if (f1.k != f2.k) throw InvalidArgument("product_family needs equal cell sizes");
  auto g = direct_product(f1.group, f2.group);
  const int n2 = f2.g().order();
  std::vector<ElementSet> cells;
  for (const auto& c : f1.cells) {
    ElementSet x;
    c.for_each([&](Element a) { x.insert(a * n2); });
    cells.push_back(x);
  }
  for (const auto& c : f2.cells) cells.push_back(c);  // (e, b) has index b
  return validate_family(std::move(g), std::move(cells));
}

std::optional<CellFamily> intersect_families(const CellFamily& f1, const CellFamily& f2, int r) {
  if (f1.group != f2.group && f1.g().table() != f2.g().table())
    throw InvalidArgument("intersect_families needs families on the same group");
  if (f1.validity == Validity::generic || f2.validity == Validity::generic)
    throw InvalidArgument("intersect_families needs T-axiom families");
  std::vector<ElementSet> cells;
  for (const auto& a : f1.cells)
    for (const auto& b : f2.cells)
      if ((a & b).size() == r) cells.push_back(a & b);
  if (cells.empty()) return std::nullopt;
  return validate_family(f1.group, std::move(cells));
}

namespace {

bool permutes_cells(const CellFamily& f, const GroupMap& phi) {
  for (const auto& c : f.cells)
    if (!std::binary_search(f.cells.begin(), f.cells.end(), map_set(phi, c))) return false;
  return true;
}

}  // namespace

std::vector<GroupMap> family_automorphisms(const CellFamily& f) {
  std::vector<GroupMap> out;
  for (auto& phi : group_automorphisms(f.g()))
    if (permutes_cells(f, phi)) out.push_back(std::move(phi));
  return out;
}

std::optional<SwapIsomorphism> swap_isomorphism(const CellFamily& f) {
  if (!translate_classes(f).beta_regular) throw InvalidArgument("swap_isomorphism needs a beta-regular family");
  const FiniteGroup& g = f.g();
  const ElementSet c1 = f.cells.front();
  const ElementSet c1inv = inverse_set(g, c1);
  const auto duals = dual_cells(g, c1);
  std::optional<SwapIsomorphism> best;
  auto rank = [](const SwapIsomorphism& s) { return (s.involution ? 0 : 2) + (s.g_phi == 0 ? 0 : 1); };
  for (auto& phi : group_automorphisms(g)) {
    const ElementSet img = map_set(phi, c1);
    if (!std::binary_search(duals.begin(), duals.end(), img)) continue;
    SwapIsomorphism s;
    s.image = img;
    // img = x C1^-1 for the unique x in C1 with x C1^-1 = img; x is the
    // element of img whose inverse-translate contains e
    c1.for_each([&](Element x) {
      if (translate_set(g, x, c1inv) == img) s.g_phi = x;
    });
    s.involution = map_order(phi) == 2;
    s.phi = std::move(phi);
    if (!best || rank(s) < rank(*best)) best = std::move(s);
    if (rank(*best) == 0) break;
  }
  return best;
}

CellFamily t_cayley_family(GroupPtr group, ElementSet s, int t, bool require_uniform) {
  const FiniteGroup& g = *group;
  if (s.contains(0)) throw InvalidArgument("t-Cayley connection set contains the identity");
  if (s.empty()) throw InvalidArgument("t-Cayley connection set is empty");
  if (t < 2) throw InvalidArgument("t must be at least 2");
  int max_order = 0;
  s.for_each([&](Element x) { max_order = std::max(max_order, g.element_order(x)); });
  if (t > max_order) throw InvalidArgument("t exceeds every element order in S");
  std::vector<ElementSet> cells;
  bool short_cell = false;
  s.for_each([&](Element x) {
    if (g.element_order(x) < t) short_cell = true;
    ElementSet c = ElementSet::singleton(0);
    Element p = 0;
    for (int i = 1; i < t; ++i) {
      p = g.mul(p, x);
      c.insert(p);
    }
    cells.push_back(c);
  });
  if (require_uniform && short_cell) throw InvalidArgument("t exceeds the order of some element of S");
  return validate_family(std::move(group), std::move(cells));
}

}  // namespace bcay
