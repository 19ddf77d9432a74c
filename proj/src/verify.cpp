#include "bcay/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "bcay/cayley.hpp"
#include "bcay/constructions.hpp"
#include "bcay/error.hpp"
#include "bcay/io.hpp"

namespace bcay {

void SuiteResult::expect(bool cond, const std::string& what) {
  ++checks;
  if (!cond) failures.push_back(what);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"golden", "incidence", "spectrum", "cells",
                                              "cayley", "normalizer", "geometry"};
  return names;
}

namespace {

std::string tag(const ClassificationRecord& r) {
  std::string cells;
  for (ElementSet c : r.family.cells) cells += to_string(c);
  return r.group + " " + format_record(r, true) + " " + cells;
}

void golden_suite(SuiteResult& s, const std::vector<EnumerationReport>& reports, const VerifyOptions& o) {
  int pair_total = 0;
  bool pair_seen = false;
  for (const auto& rep : reports) {
    std::optional<int> count = golden_count_for(rep.group);
    std::vector<GoldenRow> rows = golden_rows_for(rep.group);
    if (o.golden_dir) {
      auto doc = read_golden_file(*o.golden_dir, rep.group);
      if (doc) std::tie(count, rows) = golden_from_json(*doc);
    }
    s.expect(rep.complete, rep.group + ": enumeration incomplete (budget)");
    if (count_quarantined(rep.group)) {
      pair_total += rep.count;
      pair_seen = true;
      count.reset();
    }
    const GroupComparison c = compare_report(rep, count, rows);
    s.expect(c.count_ok(), rep.group + ": count " + std::to_string(c.count) + ", published " +
                               (c.expected_count ? std::to_string(*c.expected_count) : "?"));
    if (!c.rows_checked) continue;
    std::string diff;
    for (const auto& m : c.missing) diff += " -" + format_row(m);
    for (const auto* e : c.extra) diff += " +" + format_record(*e, rows.front().girth.has_value());
    s.expect(c.rows_ok(), rep.group + ": rows differ:" + diff);
  }
  if (pair_seen && std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.group == "Z8xZ2"; }) &&
      std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.group == "Z8:Z2"; }))
    s.expect(pair_total == kQuarantinedPairTotal,
             "Z8xZ2 + Z8:Z2 count " + std::to_string(pair_total) + ", published " +
                 std::to_string(kQuarantinedPairTotal));
}

void incidence_suite(SuiteResult& s, const ClassificationRecord& r) {
  const auto x = build_bcay(r.family);
  s.expect(biadjacency_identity_check(x, r.family), tag(r) + ": NN^T != A + ell I");
  s.expect(r.girth >= 6, tag(r) + ": girth below 6");
  bool degrees = true;
  for (int v = 0; v < x.gamma_size; ++v) degrees = degrees && x.graph.degree(v) == r.ell;
  for (int i = 0; i < x.beta_size(); ++i) degrees = degrees && x.graph.degree(x.beta_vertex(i)) == r.k;
  s.expect(degrees, tag(r) + ": not (ell,k)-biregular");
  s.expect(is_connected(x.graph), tag(r) + ": disconnected");
  if (r.family.g().abelian() && r.beta_transitive && r.ell >= 3)
    s.expect(r.girth == 6, tag(r) + ": abelian beta-transitive with girth " + std::to_string(r.girth));
}

void spectrum_suite(SuiteResult& s, const ClassificationRecord& r) {
  const SpectrumSummary via = spectrum_via_underlying(r.family);
  s.expect(spectra_agree(via, r.spectrum), tag(r) + ": formula " + format_spectrum(via) + " vs direct " +
                                               format_spectrum(r.spectrum));
  s.expect(symmetric_about_zero(r.spectrum), tag(r) + ": spectrum not symmetric");
  const int n = r.family.g().order();
  const int b = n * r.ell / r.k;
  s.expect(r.spectrum.multiplicity(std::sqrt(static_cast<double>(r.ell * r.k))) == 1,
           tag(r) + ": sqrt(ell k) not simple");
  s.expect(r.spectrum.multiplicity(0.0) >= b - n, tag(r) + ": fewer than b - n zero eigenvalues");
}

void cells_suite(SuiteResult& s, const ClassificationRecord& r) {
  const CellFamily& f = r.family;
  const FiniteGroup& g = f.g();
  const BetaReport beta = translate_classes(f);
  for (std::size_t i = 0; i < f.cells.size(); ++i) {
    const ElementSet c = f.cells[i];
    const ElementSet direct = c & inverse_set(g, c);
    s.expect(stabilizer_bruteforce(g, c) == direct, tag(r) + ": stabilizer of " + to_string(c));
    s.expect(beta.stabilizers[i] == direct, tag(r) + ": reported stabilizer of " + to_string(c));
  }
  const auto x = build_bcay(f);
  std::set<int> orbit_ids(x.beta_class.begin(), x.beta_class.end());
  s.expect(orbit_ids.size() == beta.classes.size(), tag(r) + ": translate classes vs G-orbits on beta");
  if (g.dedekind() && r.beta_transitive) s.expect(r.ell == r.k, tag(r) + ": Dedekind beta-transitive with ell != k");
  if (r.beta_regular) {
    const CellFamily d = dual_family(f);
    s.expect(d.valid(), tag(r) + ": dual family invalid");
    if (d.valid()) {
      s.expect(canonical_certificate(build_bcay(d).graph) == r.certificate, tag(r) + ": dual graph not isomorphic");
      const CellFamily dd = dual_family(d);
      s.expect(dd.valid() && canonical_certificate(build_bcay(dd).graph) == r.certificate,
               tag(r) + ": double dual not isomorphic");
    }
  }
}

void cayley_suite(SuiteResult& s, const ClassificationRecord& r) {
  s.expect(r.is_cayley.has_value(), tag(r) + ": Cayley property undetermined");
  if (r.beta_regular) {
    s.expect(r.is_cayley.value_or(false), tag(r) + ": beta-regular but not Cayley");
    const auto [hg, hb] = halved_graphs(build_bcay(r.family));
    try {
      s.expect(regular_subgroup_search(hb, automorphism_group(hb)).is_cayley, tag(r) + ": H_beta not Cayley");
    } catch (const InvalidArgument&) {
    }
    if (r.family.g().abelian()) {
      const DihedralCertificate d = dihedral_certificate(r.family);
      s.expect(d.certified, tag(r) + ": dihedral certificate not isomorphic");
    }
  }
}

void normalizer_suite(SuiteResult& s, const ClassificationRecord& r) {
  const auto n = hypergraph_normalizer_order(r.family);
  const auto expect = static_cast<std::uint64_t>(r.family.g().order()) * family_automorphisms(r.family).size();
  s.expect(n == expect, tag(r) + ": normalizer " + std::to_string(n) + " vs " + std::to_string(expect));
}

void geometry_suite(SuiteResult& s) {
  const CellFamily pg = pg_family(3, 2);
  const auto z7 = parse_group("Z7");
  const DiffsetFamilies ds = diffset_to_families(z7, ElementSet{0, 1, 3});
  const CellFamily fano = validate_family(z7, {ElementSet{0, 1, 3}, ElementSet{0, 2, 6}, ElementSet{0, 4, 5}});
  const auto cert = canonical_certificate(build_bcay(fano).graph);
  s.expect(canonical_certificate(build_bcay(pg).graph) == cert, "pg(3,2) is not the Fano incidence graph");
  s.expect(canonical_certificate(build_bcay(ds.pi_d).graph) == cert, "difference set {0,1,3} is not Fano");
  s.expect(ds.four_way_isomorphic.value_or(false), "difference set families not four-way isomorphic");
  const DesignReport d7 = two_design_check(build_bcay(fano));
  s.expect(d7.is_design && d7.v == 7 && d7.k == 3 && d7.lambda == 1, "Fano is not a 2-(7,3,1) design");

  const CellFamily ag = ag_family(2, 3);
  const ClassificationRecord r = classify(ag);
  s.expect(r.ell == 4 && r.k == 3 && r.is_cayley == false && r.aut_order == 432 && r.orbit_count == 2,
           "ag(2,3) classified as " + format_record(r, false));
  const DesignReport d9 = two_design_check(build_bcay(ag));
  s.expect(d9.is_design && d9.v == 9 && d9.k == 3 && d9.lambda == 1, "ag(2,3) is not a 2-(9,3,1) design");

  for (auto [n, q] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 2}}) {
    const CellFamily f = pg_family(n, q);
    const DesignReport d = two_design_check(build_bcay(f));
    s.expect(f.valid() && d.is_design && d.lambda == 1 && d.is_symmetric == (n == 3),
             "pg(" + std::to_string(n) + "," + std::to_string(q) + ") is not a 2-design of lines");
  }
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const std::string&)>& progress) {
  std::vector<std::string> wanted = options.only.empty() ? suite_names() : options.only;
  for (const auto& w : wanted)
    if (std::find(suite_names().begin(), suite_names().end(), w) == suite_names().end())
      throw InvalidArgument("unknown suite '" + w + "'");
  auto on = [&](const std::string& n) { return std::find(wanted.begin(), wanted.end(), n) != wanted.end(); };

  std::vector<EnumerationReport> reports;
  const bool need_records = std::any_of(wanted.begin(), wanted.end(), [](const auto& n) { return n != "geometry"; });
  if (need_records)
    for (const auto& g : catalog(1, options.max_order)) {
      reports.push_back(enumerate_group(g, options.enumeration));
      if (progress)
        progress(g->name() + ": " + std::to_string(reports.back().count) + " graphs");
    }

  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) {
    if (!on(name)) continue;
    SuiteResult s;
    s.name = name;
    if (name == "golden") {
      golden_suite(s, reports, options);
    } else if (name == "geometry") {
      geometry_suite(s);
    } else {
      for (const auto& rep : reports)
        for (const auto& r : rep.records) {
          if (name == "incidence") incidence_suite(s, r);
          if (name == "spectrum") spectrum_suite(s, r);
          if (name == "cells") cells_suite(s, r);
          if (name == "cayley") cayley_suite(s, r);
          if (name == "normalizer" && r.family.g().order() <= 12) normalizer_suite(s, r);
        }
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace bcay
