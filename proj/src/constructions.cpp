#include "bcay/constructions.hpp"

#include <algorithm>
#include <set>

#include "bcay/error.hpp"
#include "bcay/field.hpp"

namespace bcay {

bool differences_distinct(const FiniteGroup& g, ElementSet d, Side side) {
  const auto m = d.members();
  ElementSet seen;
  for (Element a : m)
    for (Element b : m) {
      if (a == b) continue;
      const Element x = side == Side::right ? g.mul(a, g.inv(b)) : g.mul(g.inv(a), b);
      if (seen.contains(x)) return false;
      seen.insert(x);
    }
  return true;
}

bool is_difference_set(const FiniteGroup& g, ElementSet d, int lambda) {
  std::vector<int> count(g.order(), 0);
  const auto m = d.members();
  for (Element a : m)
    for (Element b : m)
      if (a != b) ++count[g.mul(a, g.inv(b))];
  bool ok = true;
  for (int x = 1; x < g.order() && ok; ++x) ok = count[x] == lambda;
  if (lambda == 1) {
    const bool right = differences_distinct(g, d, Side::right);
    if (right != differences_distinct(g, d, Side::left))
      throw Error("left and right difference injectivity disagree for " + to_string(d));
  }
  return ok;
}

ShiftedSet normalize_difference_set(const FiniteGroup& g, ElementSet d) {
  if (d.empty()) throw InvalidArgument("difference set must be non-empty");
  if (d.contains(0)) return {d, 0};
  const Element m = d.min();
  return {translate_set(g, g.inv(m), d, Side::right), m};
}

SimpleGraph development_graph(const FiniteGroup& g, ElementSet d) {
  std::set<ElementSet> blocks;
  for (Element x = 0; x < g.order(); ++x) blocks.insert(translate_set(g, x, d, Side::right));
  const int n = g.order();
  SimpleGraph x(n + static_cast<int>(blocks.size()));
  int i = 0;
  for (ElementSet b : blocks) {
    b.for_each([&](Element p) { x.add_edge(p, n + i); });
    ++i;
  }
  return x;
}

DiffsetFamilies diffset_to_families(GroupPtr group, ElementSet d) {
  const FiniteGroup& g = *group;
  if (!d.contains(0)) throw InvalidArgument("difference set " + to_string(d) + " must contain the identity");
  const ElementSet dinv = inverse_set(g, d);
  std::vector<ElementSet> a, b;
  d.for_each([&](Element x) {
    a.push_back(translate_set(g, g.inv(x), d));
    b.push_back(translate_set(g, x, dinv));
  });
  DiffsetFamilies out{validate_family(group, std::move(a)), validate_family(group, std::move(b)), std::nullopt};
  if (out.pi_d.valid() && out.pi_d_inv.valid()) {
    const auto c = canonical_certificate(development_graph(g, d));
    out.four_way_isomorphic = canonical_certificate(development_graph(g, dinv)) == c &&
                              canonical_certificate(build_bcay(out.pi_d).graph) == c &&
                              canonical_certificate(build_bcay(out.pi_d_inv).graph) == c;
  }
  return out;
}

DesignReport two_design_check(const SimpleGraph& x, int points) {
  DesignReport r;
  r.v = points;
  r.b = x.order() - points;
  const int k0 = r.b > 0 ? x.degree(points) : 0;
  bool uniform = r.b > 0;
  for (int v = points; v < x.order() && uniform; ++v) uniform = x.degree(v) == k0;
  r.k = uniform ? k0 : 0;
  const int r0 = points > 0 ? x.degree(0) : 0;
  bool regular = points > 0;
  for (int v = 0; v < points && regular; ++v) regular = x.degree(v) == r0;
  r.r = regular ? r0 : 0;

  std::optional<int> lambda;
  bool constant = points >= 2;
  std::vector<int> common(points);
  for (int u = 0; u < points && constant; ++u) {
    std::fill(common.begin(), common.end(), 0);
    for (int blk : x.neighbors(u))
      for (int w : x.neighbors(blk))
        if (w > u) ++common[w];
    for (int w = u + 1; w < points && constant; ++w) {
      if (!lambda) lambda = common[w];
      constant = common[w] == *lambda;
    }
  }
  r.lambda = constant && lambda ? *lambda : 0;
  r.is_design = r.k > 0 && r.lambda > 0;
  r.is_symmetric = r.is_design && r.b == r.v;
  return r;
}

DesignReport two_design_check(const BipartiteIncidenceGraph& x) { return two_design_check(x.graph, x.gamma_size); }

namespace {

std::pair<int, int> require_prime_power(int q) {
  const auto pm = prime_power(q);
  if (pm.first == 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return pm;
}

GroupPtr elementary_abelian(int p, int rank) {
  std::vector<GroupPtr> factors(rank, cyclic(p));
  return rank == 1 ? factors.front() : direct_product(factors);
}

}  // namespace

CellFamily ag_family(int n, int q) {
  const auto [p, m] = require_prime_power(q);
  if (n < 1) throw InvalidArgument("affine dimension must be positive");
  int size = 1;
  for (int i = 0; i < n; ++i) {
    size *= q;
    if (size > FiniteGroup::kMaxOrder) throw InvalidArgument("q^n must be at most 64");
  }
  const FiniteFieldTable f(p, m);
  auto group = elementary_abelian(p, m * n);

  // a vector is n field elements, first coordinate most significant
  auto coord = [&](int v, int i) {
    for (int j = n - 1; j > i; --j) v /= q;
    return v % q;
  };
  auto scale = [&](int c, int v) {
    int out = 0;
    for (int i = 0; i < n; ++i) out = out * q + f.mul(c, coord(v, i));
    return out;
  };
  std::set<ElementSet> lines;
  for (int v = 1; v < size; ++v) {
    ElementSet line;
    for (int c = 0; c < q; ++c) line.insert(scale(c, v));
    lines.insert(line);
  }
  return validate_family(std::move(group), {lines.begin(), lines.end()});
}

CellFamily pg_family(int n, int q) {
  const auto [p, m] = require_prime_power(q);
  if (n < 3) throw InvalidArgument("projective families need n >= 3");
  int total = 1;
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > FiniteGroup::kMaxOrder) throw InvalidArgument("q^n must be at most 64");
  }
  const FiniteFieldTable f(p, m * n);
  const int points = (total - 1) / (q - 1);

  // F_q sits inside F_{q^n} as 0 and the powers alpha^(j * points)
  std::vector<int> subfield{0};
  for (int j = 0; j < q - 1; ++j) subfield.push_back(f.antilog(j * points));

  std::set<ElementSet> lines;
  for (int i = 1; i < points; ++i) {
    ElementSet line{0};
    const int ai = f.antilog(i);
    for (int c : subfield) line.insert(f.log(f.add(c, ai)) % points);
    lines.insert(line);
  }
  return validate_family(cyclic(points), {lines.begin(), lines.end()});
}

TwoCellReport classify_two_cell(const CellFamily& f, int first) {
  if (!f.valid()) throw InvalidArgument("classify_two_cell needs a bcay-valid family");
  if (f.cells.size() != 2) throw InvalidArgument("classify_two_cell needs exactly two cells");
  if (first != 0 && first != 1) throw InvalidArgument("first must be 0 or 1");
  const FiniteGroup& g = f.g();
  TwoCellReport r;
  r.c1 = f.cells[first];
  r.c2 = f.cells[1 - first];
  if (is_subgroup(g, r.c1) && is_subgroup(g, r.c2)) {
    r.kase = 1;
    r.s1 = r.c1;
    r.s2 = r.c2;
  } else {
    r.c1.for_each([&](Element x) {
      if (translate_set(g, g.inv(x), r.c1) == r.c2) r.x_candidates.push_back(x);
    });
    if (r.x_candidates.empty()) throw Error("two-cell family fits neither case");
    r.kase = 2;
    r.s1 = stabilizer_bruteforce(g, r.c1);
    r.s2 = stabilizer_bruteforce(g, r.c2);
    r.x = *std::min_element(r.x_candidates.begin(), r.x_candidates.end(), [&](Element a, Element b) {
      return std::pair(g.element_order(a), a) < std::pair(g.element_order(b), b);
    });
  }
  if (g.abelian() && is_connected(f)) {
    if (r.kase == 2)
      r.shape = "cycle";
    else {
      const int mm = g.order() / f.k;
      r.shape = "subdivided K_{" + std::to_string(mm) + "," + std::to_string(mm) + "}";
    }
  }
  return r;
}

namespace {

void require_girth_six(const SimpleGraph& x, const std::string& what) {
  const auto gi = girth(x);
  if (gi && *gi < 6) throw ShortCycle(what + " has girth " + std::to_string(*gi), shortest_cycle(x));
}

}  // namespace

BipartiteCayleyConversion bipartite_cayley_to_bcay(const GroupPtr& group, ElementSet s) {
  const FiniteGroup& g = *group;
  if (s.contains(0) || inverse_set(g, s) != s)
    throw InvalidArgument("connection set must be inverse-closed without the identity");
  const auto phi = bipartition_homomorphism(g, s);
  if (!phi) throw InvalidArgument("Cay(G, S) is not bipartite");
  const SimpleGraph cay = build_cayley(g, s);
  require_girth_six(cay, "Cay(G, S)");

  BipartiteCayleyConversion out;
  ElementSet kernel;
  for (Element x = 0; x < g.order(); ++x)
    if ((*phi)(x) == 0) kernel.insert(x);
  out.kernel = subgroup_as_group(g, kernel, "ker", &out.embedding);
  std::vector<Element> back(g.order(), -1);
  for (std::size_t i = 0; i < out.embedding.size(); ++i) back[out.embedding[i]] = static_cast<Element>(i);

  std::vector<ElementSet> cells;
  s.for_each([&](Element si) {
    ElementSet c;
    s.for_each([&](Element sj) { c.insert(back[g.mul(si, sj)]); });
    cells.push_back(c);
  });
  out.family = validate_family(out.kernel, std::move(cells));
  if (!out.family.valid())
    throw Error("converted family is not bcay-valid: " + out.family.violation.describe());
  out.certified = canonical_certificate(build_bcay(out.family).graph) == canonical_certificate(cay);
  return out;
}

BiCayleyConversion bicay_to_bcay(const GroupPtr& group, ElementSet s) {
  const FiniteGroup& g = *group;
  if (s.size() < 2) throw InvalidArgument("bi-Cayley conversion needs |S| >= 2");
  const SimpleGraph x = build_bicayley(g, s);
  require_girth_six(x, "BiCay(G, 0, 0, S)");
  std::vector<ElementSet> cells;
  s.for_each([&](Element si) { cells.push_back(translate_set(g, g.inv(si), s)); });
  BiCayleyConversion out{validate_family(group, std::move(cells)), false};
  if (!out.family.valid())
    throw Error("converted family is not bcay-valid: " + out.family.violation.describe());
  out.certified = canonical_certificate(build_bcay(out.family).graph) == canonical_certificate(x);
  return out;
}

DihedralCertificate dihedral_certificate(const CellFamily& f) {
  if (!f.g().abelian()) throw InvalidArgument("dihedral certificate needs an abelian group");
  if (!f.valid() || !translate_classes(f).beta_regular)
    throw InvalidArgument("dihedral certificate needs a beta-regular family");
  const FiniteGroup& g = f.g();
  DihedralCertificate out;
  out.group = generalized_dihedral(f.group);
  // dih(G) element (x, h) has index 2x + h
  f.cells.front().for_each([&](Element c) { out.connection.insert(2 * g.inv(c) + 1); });
  out.certified = canonical_certificate(build_cayley(*out.group, out.connection)) ==
                  canonical_certificate(build_bcay(f).graph);
  return out;
}

}  // namespace bcay
