#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "bcay/cayley.hpp"
#include "bcay/constructions.hpp"
#include "bcay/error.hpp"
#include "bcay/io.hpp"
#include "bcay/verify.hpp"

#ifndef BCAY_GOLDEN_DIR
#define BCAY_GOLDEN_DIR ""
#endif

using namespace bcay;

namespace {

enum Exit { kOk = 0, kFail = 1, kValidation = 2, kBudget = 3, kUnknownGroup = 4, kMalformed = 5 };

struct Options {
  std::string group;
  std::string cells;
  std::string file;
  std::string format = "text";
  double budget_seconds = 300.0;
  int workers = 1;
  int max_order = 16;
  std::string golden_dir = BCAY_GOLDEN_DIR;
  std::string emit_golden;
  std::vector<std::string> only;
  std::vector<std::string> args;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

// --group/--cells, then --file (or "-"), then stdin.
CellFamily load_family(const Options& o) {
  if (!o.cells.empty()) {
    if (o.group.empty()) throw FamilyFormatError("--cells needs --group");
    return parse_cells(parse_group(o.group), o.cells);
  }
  if (!o.file.empty() && o.file != "-") {
    std::ifstream in(o.file);
    if (!in) throw FamilyFormatError("cannot read " + o.file);
    return parse_family(read_all(in));
  }
  return parse_family(read_all(std::cin));
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

bool cyclic_group(const FiniteGroup& g) {
  for (Element e = 0; e < g.order(); ++e)
    if (g.element_order(e) == g.order()) return true;
  return false;
}

int table_of(const FiniteGroup& g) { return cyclic_group(g) ? 2 : g.abelian() ? 3 : 4; }

// ---- commands ---------------------------------------------------------------

int cmd_groups(const Options& o) {
  json out = json::array();
  for (const auto& g : catalog(1, 64)) {
    json j{{"name", g->name()}, {"order", g->order()}, {"abelian", g->abelian()}};
    if (auto c = golden_count_for(g->name())) j["published_count"] = *c;
    out.push_back(j);
  }
  if (o.format == "json") {
    print(out);
  } else {
    for (const auto& j : out)
      std::cout << j["name"].get<std::string>() << '\t' << j["order"].get<int>() << '\t'
                << (j["abelian"].get<bool>() ? "abelian" : "non-abelian") << '\n';
  }
  return kOk;
}

int cmd_validate(const Options& o) {
  const CellFamily f = load_family(o);
  print(family_to_json(f));
  return f.valid() ? kOk : kValidation;
}

int reject_invalid(const CellFamily& f) {
  print(json{{"error", "validation"}, {"validity", to_string(f.validity)}, {"violation", violation_to_json(f)}});
  std::cerr << "family is not bcay-valid: " << f.violation.describe() << '\n';
  return kValidation;
}

int cmd_build(const Options& o) {
  const CellFamily f = load_family(o);
  if (!f.valid()) return reject_invalid(f);
  const auto x = build_bcay(f);
  if (o.format == "dot")
    std::cout << graph_to_dot(x);
  else
    print(graph_to_json(x));
  return kOk;
}

int cmd_spectrum(const Options& o) {
  const CellFamily f = load_family(o);
  if (!f.valid()) return reject_invalid(f);
  const SpectrumSummary direct = spectrum_direct(build_bcay(f).graph);
  const SpectrumSummary via = spectrum_via_underlying(f);
  if (o.format == "json") {
    print(json{{"direct", spectrum_to_json(direct)},
               {"formula", spectrum_to_json(via)},
               {"agree", spectra_agree(direct, via)}});
  } else {
    std::cout << "direct:  " << format_spectrum(direct) << "\nformula: " << format_spectrum(via) << '\n';
  }
  return spectra_agree(direct, via) ? kOk : kFail;
}

int cmd_classify(const Options& o) {
  const CellFamily f = load_family(o);
  if (!f.valid()) return reject_invalid(f);
  const ClassificationRecord r = classify(f);
  if (o.format == "json")
    print(record_to_json(r));
  else if (o.format == "csv")
    std::cout << csv_header() << '\n' << record_to_csv(r) << '\n';
  else
    std::cout << r.group << ' ' << format_record(r, true) << '\n';
  return kOk;
}

int cmd_enumerate(const Options& o) {
  if (o.group.empty()) throw InvalidArgument("enumerate needs --group");
  const auto g = parse_group(o.group);
  const EnumerationReport rep = enumerate_group(g, {o.budget_seconds, o.workers});
  if (o.format == "json") {
    print(report_to_json(rep));
  } else if (o.format == "csv") {
    std::cout << csv_header() << '\n';
    for (const auto& r : rep.records) std::cout << record_to_csv(r) << '\n';
  } else {
    std::cout << rep.group << ": " << rep.count << (rep.complete ? "" : " (incomplete)") << '\n';
    for (const auto& r : rep.records) std::cout << "  " << format_record(r, !g->abelian()) << '\n';
  }
  if (!rep.complete) {
    std::cerr << "budget of " << o.budget_seconds << " s exhausted; output is partial\n";
    return kBudget;
  }
  return kOk;
}

int cmd_tables(const Options& o) {
  if (!o.emit_golden.empty()) {
    std::filesystem::create_directories(o.emit_golden);
    for (const auto& c : golden_counts()) {
      std::ofstream out(o.emit_golden + "/" + golden_file_stem(c.group) + ".json");
      out << golden_to_json(c.group).dump(2) << '\n';
    }
    std::cerr << "wrote " << golden_counts().size() << " files to " << o.emit_golden << '\n';
    return kOk;
  }
  if (o.max_order > 16) throw InvalidArgument("tables covers orders up to 16");

  std::vector<EnumerationReport> reports;
  std::vector<GroupPtr> groups;
  bool complete = true;
  for (const auto& g : catalog(1, o.max_order)) {
    if (!golden_count_for(g->name())) continue;
    groups.push_back(g);
    reports.push_back(enumerate_group(g, {o.budget_seconds, o.workers}));
    complete = complete && reports.back().complete;
  }

  std::cout << "Table 1: non-isomorphic non-trivial Cayley incidence graphs\n";
  std::cout << "group\torder\tcount\tpublished\n";
  for (std::size_t i = 0; i < groups.size(); ++i)
    std::cout << groups[i]->name() << '\t' << groups[i]->order() << '\t' << reports[i].count << '\t'
              << *golden_count_for(groups[i]->name()) << '\n';
  const char* titles[] = {"", "", "Table 2: cyclic groups", "Table 3: abelian non-cyclic groups",
                          "Table 4: non-abelian groups"};
  for (int t = 2; t <= 4; ++t) {
    std::cout << '\n' << titles[t] << '\n';
    std::cout << (t == 4 ? "group\tl\tk\tgirth\tCayley\t|Aut|\torbits\n" : "group\tl\tk\tCayley\t|Aut|\torbits\n");
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (table_of(*groups[i]) != t) continue;
      for (const auto& r : reports[i].records) {
        std::cout << r.group << '\t' << r.ell << '\t' << r.k << '\t';
        if (t == 4) std::cout << r.girth << '\t';
        std::cout << (r.is_cayley ? (*r.is_cayley ? "Yes" : "No") : "?") << '\t' << r.aut_order << '\t'
                  << r.orbit_count << '\n';
      }
    }
  }

  std::cout << "\nDiscrepancies against published data\n";
  int diffs = 0;
  int pair_total = 0;
  for (const auto& rep : reports) {
    std::optional<int> count = golden_count_for(rep.group);
    std::vector<GoldenRow> rows = golden_rows_for(rep.group);
    if (!o.golden_dir.empty())
      if (auto doc = read_golden_file(o.golden_dir, rep.group)) std::tie(count, rows) = golden_from_json(*doc);
    if (count_quarantined(rep.group)) {
      pair_total += rep.count;
      count.reset();
    }
    const GroupComparison c = compare_report(rep, count, rows);
    if (!c.count_ok()) {
      ++diffs;
      std::cout << rep.group << ": count " << c.count << ", published " << *c.expected_count << '\n';
    }
    for (const auto& m : c.missing) {
      ++diffs;
      std::cout << rep.group << ": published row " << format_row(m) << (m.printed_as ? " (printed as " + *m.printed_as + ")" : "")
                << " not found\n";
    }
    for (const auto* e : c.extra) {
      ++diffs;
      std::cout << rep.group << ": computed row " << format_record(*e, !rows.empty() && rows.front().girth.has_value())
                << " not published\n";
    }
  }
  if (o.max_order >= 16) {
    std::cout << "Z8xZ2 + Z8:Z2: " << pair_total << ", published " << kQuarantinedPairTotal << '\n';
    if (pair_total != kQuarantinedPairTotal) ++diffs;
  }
  for (const auto& n : golden_notes())
    if (parse_group(n.group)->order() <= o.max_order) std::cout << "note " << n.group << ": " << n.note << '\n';
  std::cout << diffs << " discrepancies\n";
  return complete ? kOk : kBudget;
}

json certified_family(const CellFamily& f, bool certified) {
  json j = family_to_json(f);
  j["certified"] = certified;
  return j;
}

int cmd_construct(const Options& o) {
  const auto& a = o.args;
  if (a.empty()) throw InvalidArgument("construct needs a kind: fano, heawood, ag, pg, diffset, tcayley, bicay");
  auto need = [&](std::size_t n) {
    if (a.size() != n + 1) throw InvalidArgument("construct " + a[0] + " takes " + std::to_string(n) + " arguments");
  };
  auto z7_fano = [] {
    return validate_family(parse_group("Z7"), {ElementSet{0, 1, 3}, ElementSet{0, 2, 6}, ElementSet{0, 4, 5}});
  };
  const std::string& kind = a[0];
  if (kind == "fano") {
    need(0);
    print(family_to_json(z7_fano()));
  } else if (kind == "heawood") {
    need(0);
    const auto x = build_bcay(z7_fano());
    if (o.format == "dot")
      std::cout << graph_to_dot(x, "heawood");
    else
      print(graph_to_json(x));
  } else if (kind == "ag" || kind == "pg") {
    need(2);
    const int n = std::stoi(a[1]), q = std::stoi(a[2]);
    print(family_to_json(kind == "ag" ? ag_family(n, q) : pg_family(n, q)));
  } else if (kind == "diffset") {
    need(2);
    const auto g = parse_group(a[1]);
    const ShiftedSet d = normalize_difference_set(*g, parse_set(*g, a[2]));
    if (d.shift != 0) std::cerr << "shifted by " << g->label(d.shift) << "^-1 to contain the identity\n";
    const DiffsetFamilies fs = diffset_to_families(g, d.set);
    json j = family_to_json(fs.pi_d);
    j["difference_set"] = cells_to_json({d.set});
    j["shift"] = d.shift;
    j["inverse_family"] = cells_to_json(fs.pi_d_inv.cells);
    j["four_way_isomorphic"] = fs.four_way_isomorphic ? json(*fs.four_way_isomorphic) : json(nullptr);
    print(j);
  } else if (kind == "tcayley") {
    need(3);
    const auto g = parse_group(a[1]);
    print(family_to_json(t_cayley_family(g, parse_set(*g, a[2]), std::stoi(a[3]))));
  } else if (kind == "bicay") {
    need(2);
    const auto g = parse_group(a[1]);
    const BiCayleyConversion c = bicay_to_bcay(g, parse_set(*g, a[2]));
    print(certified_family(c.family, c.certified));
  } else {
    throw InvalidArgument("unknown construction '" + kind + "'");
  }
  return kOk;
}

int cmd_convert(const Options& o) {
  const auto& a = o.args;
  if (a.empty()) throw InvalidArgument("convert needs a kind: bipartite-cayley, bicayley, dual, dihedral");
  const std::string& kind = a[0];
  if (kind == "bipartite-cayley" || kind == "bicayley") {
    if (a.size() != 3) throw InvalidArgument("convert " + kind + " takes a group and a connection set");
    const auto g = parse_group(a[1]);
    const ElementSet s = parse_set(*g, a[2]);
    if (kind == "bicayley") {
      const BiCayleyConversion c = bicay_to_bcay(g, s);
      print(certified_family(c.family, c.certified));
    } else {
      const BipartiteCayleyConversion c = bipartite_cayley_to_bcay(g, s);
      json j = certified_family(c.family, c.certified);
      j["embedding"] = c.embedding;
      print(j);
    }
    return kOk;
  }
  const CellFamily f = load_family(o);
  if (!f.valid()) return reject_invalid(f);
  if (kind == "dual") {
    print(family_to_json(dual_family(f)));
  } else if (kind == "dihedral") {
    const DihedralCertificate d = dihedral_certificate(f);
    print(json{{"group", group_to_json(*d.group)},
               {"connection", cells_to_json({d.connection}).front()},
               {"certified", d.certified}});
  } else {
    throw InvalidArgument("unknown conversion '" + kind + "'");
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  VerifyOptions v;
  v.max_order = o.max_order;
  v.only = o.only;
  if (!o.golden_dir.empty()) v.golden_dir = o.golden_dir;
  v.enumeration = {o.budget_seconds, o.workers};
  const auto results = run_verification(v, [](const std::string& line) { std::cerr << line << '\n'; });
  bool ok = true;
  json out = json::array();
  for (const auto& s : results) {
    ok = ok && s.ok();
    if (o.format == "json") {
      out.push_back(json{{"suite", s.name}, {"checks", s.checks}, {"failures", s.failures}});
      continue;
    }
    std::cout << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << s.checks - s.failures.size() << "/" << s.checks
              << " checks\n";
    for (const auto& f : s.failures) std::cout << "  " << f << '\n';
  }
  if (o.format == "json") print(out);
  return ok ? kOk : kFail;
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"error", kind}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley incidence graphs: construction, validation, classification and enumeration"};
  app.require_subcommand(1);
  Options o;

  auto family_flags = [&](CLI::App* c) {
    c->add_option("--group", o.group, "group descriptor, e.g. C7, D4, Dic4, C7:C3");
    c->add_option("--cells", o.cells, "cells as JSON, e.g. [[0,1,3],[0,2,6],[0,4,5]]");
    c->add_option("--file", o.file, "family JSON file, '-' for stdin");
  };
  auto format_flag = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format)->check(CLI::IsMember(allowed));
  };
  auto run_flags = [&](CLI::App* c) {
    c->add_option("--budget-seconds", o.budget_seconds, "time budget per group");
    c->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
  };

  std::map<std::string, int (*)(const Options&)> handlers;
  auto sub = [&](const std::string& name, const std::string& help, int (*fn)(const Options&)) {
    handlers[name] = fn;
    return app.add_subcommand(name, help);
  };

  format_flag(sub("groups", "list the group catalog", cmd_groups), {"text", "json"});
  auto* validate = sub("validate", "check the axioms of a cell family", cmd_validate);
  family_flags(validate);
  auto* build = sub("build", "build the incidence graph", cmd_build);
  family_flags(build);
  format_flag(build, {"json", "dot"});
  auto* spectrum = sub("spectrum", "spectrum, direct and from the underlying Cayley graph", cmd_spectrum);
  family_flags(spectrum);
  format_flag(spectrum, {"text", "json"});
  auto* cls = sub("classify", "classify one family", cmd_classify);
  family_flags(cls);
  format_flag(cls, {"text", "json", "csv"});
  auto* en = sub("enumerate", "enumerate all graphs over one group", cmd_enumerate);
  en->add_option("--group", o.group)->required();
  format_flag(en, {"text", "json", "csv"});
  run_flags(en);
  auto* tables = sub("tables", "reproduce the classification tables", cmd_tables);
  tables->add_option("--max-order", o.max_order)->check(CLI::Range(1, 16));
  tables->add_option("--golden-dir", o.golden_dir);
  tables->add_option("--emit-golden", o.emit_golden, "write the embedded published data as JSON files");
  run_flags(tables);
  auto* construct = sub("construct", "fano | heawood | ag N Q | pg N Q | diffset G SET | tcayley G SET T | bicay G SET",
                        cmd_construct);
  construct->allow_extras();
  format_flag(construct, {"text", "json", "dot"});
  auto* convert = sub("convert", "bipartite-cayley G S | bicayley G S | dual | dihedral", cmd_convert);
  convert->allow_extras();
  family_flags(convert);
  auto* verify = sub("verify", "run the invariant suites", cmd_verify);
  verify->add_option("--max-order", o.max_order)->check(CLI::Range(1, 16));
  verify->add_option("--only", o.only, "suites: golden incidence spectrum cells cayley normalizer geometry")
      ->delimiter(',');
  verify->add_option("--golden-dir", o.golden_dir);
  format_flag(verify, {"text", "json"});
  run_flags(verify);
  verify->preparse_callback([&](std::size_t) { o.max_order = 12; });

  CLI11_PARSE(app, argc, argv);

  auto* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  // bracketed sets such as [1,2,4] must reach the handlers verbatim
  if (name == "construct" || name == "convert") o.args = chosen->remaining();
  try {
    return handlers.at(name)(o);
  } catch (const UnknownGroup& e) {
    print(error_json("unknown_group", e.what()));
    std::cerr << e.what() << '\n';
    return kUnknownGroup;
  } catch (const FamilyFormatError& e) {
    print(error_json("malformed_input", e.what()));
    std::cerr << e.what() << '\n';
    return kMalformed;
  } catch (const ShortCycle& e) {
    json j = error_json("short_cycle", e.what());
    j["cycle"] = e.cycle;
    print(j);
    std::cerr << e.what() << '\n';
    return kValidation;
  } catch (const InvalidArgument& e) {
    print(error_json("invalid_argument", e.what()));
    std::cerr << e.what() << '\n';
    return kValidation;
  } catch (const Error& e) {
    print(error_json("error", e.what()));
    std::cerr << e.what() << '\n';
    return kFail;
  } catch (const std::logic_error& e) {
    print(error_json("invalid_argument", e.what()));
    std::cerr << e.what() << '\n';
    return kValidation;
  }
}
