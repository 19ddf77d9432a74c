#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "bcay/enumeration.hpp"
#include "bcay/graph.hpp"
#include "bcay/perm.hpp"
#include "bcay/spectrum.hpp"
#include "support/oracle.hpp"

using namespace bcay;

namespace {

CellFamily fano() {
  return validate_family(parse_group("Z7"), {ElementSet{0, 1, 3}, ElementSet{0, 2, 6}, ElementSet{0, 4, 5}});
}

CellFamily labelled(const std::string& group, std::vector<std::vector<const char*>> cells) {
  auto g = parse_group(group);
  std::vector<ElementSet> out;
  for (const auto& c : cells) {
    ElementSet s;
    for (const char* l : c) s.insert(*g->find(l));
    out.push_back(s);
  }
  return validate_family(g, out);
}

std::vector<ClassificationRecord> records_up_to(int order) {
  std::vector<ClassificationRecord> out;
  for (const auto& g : catalog(1, order))
    for (auto& r : enumerate_group(g).records) out.push_back(std::move(r));
  return out;
}

SimpleGraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  SimpleGraph x(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) x.add_edge(u, v);
  return x;
}

}  // namespace

TEST_CASE("incidence graph shape") {
  const auto x = build_bcay(fano());
  CHECK(x.graph.order() == 14);
  CHECK(x.graph.edge_count() == 21);
  CHECK(x.beta_size() == 7);
  CHECK(canonical_certificate(x.graph) ==
        canonical_certificate(oracle::incidence_graph(fano().g(), fano().cells)));
}

TEST_CASE("NN^T = A + ell I on every enumerated graph") {
  for (const auto& r : records_up_to(16)) {
    CAPTURE(r.group);
    CHECK(biadjacency_identity_check(build_bcay(r.family), r.family));
    CHECK(oracle::biadjacency_identity_holds(r.family.g(), r.family.cells));
  }
}

TEST_CASE("girth agrees with breadth-first search") {
  for (const auto& r : records_up_to(16)) {
    CAPTURE(r.group);
    CHECK(r.girth == oracle::girth(build_bcay(r.family).graph));
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const SimpleGraph x = random_graph(rng, 12, 0.2);
    const int g = oracle::girth(x);
    CHECK(girth(x).value_or(0) == g);
    const auto c = shortest_cycle(x);
    CHECK(static_cast<int>(c.size()) == g);
  }
}

TEST_CASE("spectra agree with a dense symmetric solver") {
  for (const auto& r : records_up_to(16)) {
    CAPTURE(r.group);
    const auto x = build_bcay(r.family);
    const SpectrumSummary ref = cluster_eigenvalues(oracle::eigenvalues(x.graph));
    CHECK(spectra_agree(ref, spectrum_direct(x.graph)));
    CHECK(spectra_agree(ref, spectrum_via_underlying(r.family)));
  }
}

TEST_CASE("Heawood spectrum") {
  const SpectrumSummary s = spectrum_direct(build_bcay(fano()).graph);
  CHECK(s.total() == 14);
  CHECK(s.multiplicity(3.0) == 1);
  CHECK(s.multiplicity(-3.0) == 1);
  CHECK(s.multiplicity(std::sqrt(2.0)) == 6);
  CHECK(s.multiplicity(-std::sqrt(2.0)) == 6);
  CHECK(symmetric_about_zero(s));
}

TEST_CASE("Jacobi solver matches Eigen") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const SimpleGraph x = random_graph(rng, 15, 0.3);
    const auto ref = oracle::eigenvalues(x);
    auto j = jacobi_eigen(adjacency_matrix(x)).values;
    std::vector<double> got(j.data(), j.data() + j.size());
    std::sort(got.begin(), got.end());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(ref[i]).epsilon(1e-7));
  }
}

TEST_CASE("subgroup families on the group of order 21") {
  const CellFamily ex68 =
      labelled("Z7:Z3", {{"e", "b", "b^2"}, {"e", "ab", "a^3b^2"}, {"e", "a^2b", "a^6b^2"}});
  REQUIRE(ex68.valid());
  CHECK(girth(build_bcay(ex68).graph) == 8);

  const CellFamily ex73 = labelled("Z7:Z3", {{"e", "b", "b^2"}, {"e", "a^2b", "a^6b^2"}});
  REQUIRE(ex73.valid());
  const auto x = build_bcay(ex73);
  CHECK(girth(x.graph) == 12);
  const auto [hg, hb] = halved_graphs(x);
  CHECK(canonical_certificate(hb) == canonical_certificate(build_bcay(fano()).graph));
}

TEST_CASE("certificates decide isomorphism on small enumerated graphs") {
  std::vector<SimpleGraph> graphs;
  for (const auto& r : records_up_to(16)) {
    const auto x = build_bcay(r.family);
    if (x.graph.order() <= 20) graphs.push_back(x.graph);
  }
  REQUIRE(graphs.size() >= 2);
  std::mt19937_64 rng(13);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::vector<int> perm(graphs[i].order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const SimpleGraph y = graphs[i].relabeled(perm);
    CHECK(canonical_certificate(y) == canonical_certificate(graphs[i]));
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      CHECK((canonical_certificate(graphs[i]) == canonical_certificate(graphs[j])) ==
            oracle::isomorphic_bruteforce(graphs[i], graphs[j]));
  }
}

TEST_CASE("certificates on random graph pairs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const int n = 6 + t % 5;
    const SimpleGraph a = random_graph(rng, n, 0.4);
    const SimpleGraph b = random_graph(rng, n, 0.4);
    CHECK((canonical_certificate(a) == canonical_certificate(b)) == oracle::isomorphic_bruteforce(a, b));
  }
}

TEST_CASE("automorphism group orders agree with brute force") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    const SimpleGraph x = random_graph(rng, 5 + t % 8, t % 2 ? 0.3 : 0.6);
    const AutReport a = automorphism_group(x);
    CHECK(a.order == oracle::automorphism_count_bruteforce(x));
    for (const auto& p : a.generators) CHECK(is_graph_automorphism(x, p));
    CHECK(enumerate_group(x.order(), a.generators).size() == a.order);
  }
  SimpleGraph cycle(12);
  for (int i = 0; i < 12; ++i) cycle.add_edge(i, (i + 1) % 12);
  CHECK(automorphism_group(cycle).order == 24);
}

TEST_CASE("halved graphs of the Heawood graph") {
  const auto [hg, hb] = halved_graphs(build_bcay(fano()));
  CHECK(hg.order() == 7);
  CHECK(hb.order() == 7);
  for (int v = 0; v < 7; ++v) CHECK(hg.degree(v) == 6);
}
