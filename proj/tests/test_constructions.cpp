#include <doctest.h>

#include <algorithm>

#include "bcay/cayley.hpp"
#include "bcay/constructions.hpp"
#include "bcay/enumeration.hpp"
#include "bcay/error.hpp"
#include "bcay/field.hpp"
#include "support/oracle.hpp"

using namespace bcay;

namespace {

ElementSet by_label(const FiniteGroup& g, std::initializer_list<const char*> labels) {
  ElementSet s;
  for (const char* l : labels) s.insert(*g.find(l));
  return s;
}

CellFamily fano() {
  return validate_family(parse_group("Z7"), {ElementSet{0, 1, 3}, ElementSet{0, 2, 6}, ElementSet{0, 4, 5}});
}

CanonicalCertificate heawood() { return canonical_certificate(build_bcay(fano()).graph); }

// multiset count of d d'^-1 over ordered pairs of distinct elements
bool difference_set_bruteforce(const FiniteGroup& g, ElementSet d, int lambda) {
  std::vector<int> hits(g.order(), 0);
  d.for_each([&](Element a) { d.for_each([&](Element b) { if (a != b) ++hits[g.mul(a, g.inv(b))]; }); });
  return std::all_of(hits.begin() + 1, hits.end(), [&](int h) { return h == lambda; });
}

}  // namespace

TEST_CASE("finite fields") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
    CAPTURE(q);
    const auto [p, m] = prime_power(q);
    REQUIRE(p > 0);
    const FiniteFieldTable f(p, m);
    CHECK(f.size() == q);
    CHECK(f.antilog(0) == 1);
    std::vector<char> seen(q, 0);
    for (int i = 0; i < q - 1; ++i) {
      const int x = f.antilog(i);
      CHECK(x != 0);
      CHECK_FALSE(seen[x]);
      seen[x] = 1;
      CHECK(f.log(x) == i);
    }
    for (int a = 1; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      for (int b = 1; b < q; ++b) CHECK(f.mul(a, b) == f.antilog(f.log(a) + f.log(b)));
    }
  }
  CHECK(prime_power(6).first == 0);
  CHECK(prime_power(12).first == 0);
  CHECK(is_prime(61));
  CHECK_FALSE(is_prime(63));
}

TEST_CASE("difference sets") {
  const auto z7 = parse_group("Z7");
  CHECK(is_difference_set(*z7, ElementSet{0, 1, 3}, 1));
  CHECK_FALSE(is_difference_set(*z7, ElementSet{0, 1, 2}, 1));
  CHECK(is_difference_set(*z7, z7->all(), 7));
  CHECK(is_difference_set(*parse_group("Z13"), ElementSet{0, 1, 3, 9}, 1));

  const ShiftedSet s = normalize_difference_set(*z7, ElementSet{1, 2, 4});
  CHECK(s.shift == 1);
  CHECK(s.set == ElementSet{0, 1, 3});
}

TEST_CASE("left and right difference injectivity agree") {
  for (const auto& g : catalog(1, 10))
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << g->order()); m += 2) {
      const ElementSet d(m);
      if (d.size() > 4) continue;
      CHECK(differences_distinct(*g, d, Side::left) == differences_distinct(*g, d, Side::right));
      CHECK(is_difference_set(*g, d, 1) == difference_set_bruteforce(*g, d, 1));
    }
}

TEST_CASE("difference set families") {
  const auto z7 = parse_group("Z7");
  const DiffsetFamilies f = diffset_to_families(z7, ElementSet{0, 1, 3});
  CHECK(f.pi_d.cells == fano().cells);
  CHECK(f.pi_d_inv.valid());
  CHECK(f.four_way_isomorphic == true);
  CHECK(canonical_certificate(development_graph(*z7, ElementSet{0, 1, 3})) == heawood());

  const DiffsetFamilies bad = diffset_to_families(z7, ElementSet{0, 1, 2});
  CHECK_FALSE(bad.pi_d.valid());
  CHECK(bad.pi_d.violation.kind == Violation::Kind::fat_intersection);
  CHECK_THROWS_AS(diffset_to_families(z7, ElementSet{1, 2, 4}), InvalidArgument);
}

TEST_CASE("every planar difference set up to order 16 gives four isomorphic graphs") {
  int found = 0;
  for (const auto& g : catalog(7, 16))
    for (int k = 3; k * (k - 1) <= g->order() - 1; ++k)
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << g->order()); m += 2) {
        const ElementSet d(m);
        if (d.size() != k || !difference_set_bruteforce(*g, d, 1)) continue;
        ++found;
        const DiffsetFamilies f = diffset_to_families(g, d);
        CHECK(f.pi_d.valid());
        CHECK(f.four_way_isomorphic == true);
      }
  CHECK(found > 0);
}

TEST_CASE("designs") {
  const DesignReport fano_d = two_design_check(build_bcay(fano()));
  CHECK(fano_d.is_design);
  CHECK(fano_d.v == 7);
  CHECK(fano_d.k == 3);
  CHECK(fano_d.lambda == 1);
  CHECK(fano_d.is_symmetric);

  const DesignReport ag = two_design_check(build_bcay(ag_family(2, 3)));
  CHECK(ag.is_design);
  CHECK(ag.v == 9);
  CHECK(ag.k == 3);
  CHECK(ag.lambda == 1);
  CHECK(ag.b == 12);
  CHECK_FALSE(ag.is_symmetric);

  const DesignReport k4 = two_design_check(build_bcay(ag_family(2, 2)));
  CHECK(k4.is_design);
  CHECK(k4.v == 4);
  CHECK(k4.k == 2);

  // lambda = 1 exactly when S(pi) is everything but the identity
  for (const auto& g : catalog(7, 13))
    for (const auto& r : enumerate_group(g).records) {
      const DesignReport d = two_design_check(build_bcay(r.family));
      CHECK((d.is_design && d.lambda == 1) == (connection_set(r.family) == g->all() - ElementSet{0}));
    }
}

TEST_CASE("affine geometries") {
  const CellFamily ag = ag_family(2, 3);
  CHECK(ag.valid());
  CHECK(ag.ell == 4);
  CHECK(ag.k == 3);
  const ClassificationRecord r = classify(ag);
  CHECK(r.aut_order == 432);
  CHECK(r.orbit_count == 2);
  CHECK(r.is_cayley == false);
  for (auto [n, q] : {std::pair{2, 2}, {2, 4}, {3, 2}, {2, 5}, {3, 3}, {2, 7}, {2, 8}}) {
    const CellFamily f = ag_family(n, q);
    int qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    CHECK(f.valid());
    CHECK(f.g().order() == qn);
    CHECK(f.ell == (qn - 1) / (q - 1));
    CHECK(static_cast<int>(build_bcay(f).beta.size()) == qn / q * (qn - 1) / (q - 1));
  }
  CHECK_THROWS_AS(ag_family(2, 6), InvalidArgument);
  CHECK_THROWS_AS(ag_family(4, 3), InvalidArgument);
}

TEST_CASE("projective geometries") {
  CHECK(canonical_certificate(build_bcay(pg_family(3, 2)).graph) == heawood());
  const CellFamily p42 = pg_family(4, 2);
  CHECK(p42.g().order() == 15);
  CHECK(p42.ell == 7);
  CHECK(p42.k == 3);
  const ClassificationRecord r = classify(p42);
  CHECK(r.aut_order == 20160);
  // the Singer group has three orbits on lines: 15 + 15 + a 5-line spread
  CHECK(translate_classes(p42).classes.size() == 3);
  CHECK(r.girth == 6);
  const CellFamily p33 = pg_family(3, 3);
  CHECK(p33.ell == 4);
  CHECK(p33.k == 4);
  CHECK(two_design_check(build_bcay(p33)).is_symmetric);
  CHECK(pg_family(3, 4).g().order() == 21);
  for (ElementSet c : pg_family(3, 3).cells) CHECK(c.contains(0));
  CHECK_THROWS_AS(pg_family(2, 3), InvalidArgument);
  CHECK_THROWS_AS(pg_family(3, 6), InvalidArgument);
  CHECK_THROWS_AS(pg_family(3, 7), InvalidArgument);
}

TEST_CASE("two-cell families") {
  const auto s4 = parse_group("S4");
  const CellFamily f = validate_family(
      s4, {by_label(*s4, {"e", "(12)", "(134)", "(1342)"}), by_label(*s4, {"e", "(24)", "(143)", "(1243)"})});
  REQUIRE(f.valid());
  const int first = f.cells[0].contains(*s4->find("(12)")) ? 0 : 1;
  const TwoCellReport r = classify_two_cell(f, first);
  CHECK(r.kase == 2);
  CHECK(r.x == *s4->find("(134)"));
  CHECK(r.s1 == by_label(*s4, {"e", "(12)"}));
  CHECK(r.s2 == by_label(*s4, {"e", "(24)"}));

  const auto z33 = parse_group("Z3^2");
  const TwoCellReport c1 = classify_two_cell(validate_family(z33, {ElementSet{0, 1, 2}, ElementSet{0, 3, 6}}));
  CHECK(c1.kase == 1);
  CHECK(c1.shape == std::string("subdivided K_{3,3}"));

  const auto g21 = parse_group("Z7:Z3");
  const CellFamily ex = validate_family(g21, {by_label(*g21, {"e", "b", "b^2"}), by_label(*g21, {"e", "a^2b", "a^6b^2"})});
  CHECK(classify_two_cell(ex).kase == 1);
  CHECK_THROWS_AS(classify_two_cell(fano()), InvalidArgument);
}

TEST_CASE("bipartite Cayley graphs to incidence graphs") {
  const auto d7 = parse_group("D7");
  const BipartiteCayleyConversion c = bipartite_cayley_to_bcay(d7, by_label(*d7, {"b", "ab", "a^3b"}));
  CHECK(c.certified);
  CHECK(c.kernel->order() == 7);
  CHECK(canonical_certificate(build_bcay(c.family).graph) == heawood());

  const auto z6 = parse_group("Z6");
  const BipartiteCayleyConversion c6 = bipartite_cayley_to_bcay(z6, ElementSet{1, 5});
  CHECK(c6.certified);
  CHECK(c6.kernel->order() == 3);
  CHECK(c6.family.k == 2);

  try {
    bipartite_cayley_to_bcay(z6, ElementSet{1, 3, 5});
    FAIL("girth-4 input accepted");
  } catch (const ShortCycle& e) {
    CHECK(e.cycle.size() == 4);
  }
  CHECK_THROWS_AS(bipartite_cayley_to_bcay(z6, ElementSet{1, 2, 4, 5}), InvalidArgument);
}

TEST_CASE("bi-Cayley graphs to incidence graphs") {
  const BiCayleyConversion c = bicay_to_bcay(parse_group("Z7"), ElementSet{1, 2, 4});
  CHECK(c.certified);
  CHECK(c.family.cells == fano().cells);
  CHECK_THROWS_AS(bicay_to_bcay(parse_group("Z7"), ElementSet{1}), InvalidArgument);
  CHECK_THROWS_AS(bicay_to_bcay(parse_group("Z7"), ElementSet{0, 1, 2}), ShortCycle);
}

TEST_CASE("dihedral certificates") {
  const DihedralCertificate d = dihedral_certificate(fano());
  CHECK(d.certified);
  CHECK(d.group->order() == 14);
  const SimpleGraph x = build_cayley(*d.group, d.connection);
  CHECK(canonical_certificate(x) == heawood());

  for (const auto& g : catalog(7, 16)) {
    if (!g->abelian()) continue;
    for (const auto& r : enumerate_group(g).records) {
      if (!r.beta_regular) continue;
      CAPTURE(r.group);
      const DihedralCertificate c = dihedral_certificate(r.family);
      CHECK(c.certified);
      const SimpleGraph y = build_cayley(*c.group, c.connection);
      CHECK(regular_subgroup_search(y, automorphism_group(y)).is_cayley);
    }
  }
  CHECK_THROWS_AS(dihedral_certificate(classify(ag_family(2, 3)).family), InvalidArgument);
}

TEST_CASE("the quaternion family is Cayley through its swap involution") {
  const auto q = parse_group("Q8");
  const CellFamily f = validate_family(
      q, {by_label(*q, {"1", "i", "-j"}), by_label(*q, {"1", "-i", "k"}), by_label(*q, {"1", "j", "-k"})});
  const ClassificationRecord r = classify(f);
  CHECK(r.is_cayley == true);
  CHECK(r.aut_order == 96);
}
