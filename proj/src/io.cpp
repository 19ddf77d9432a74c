#include "bcay/io.hpp"

#include <fstream>
#include <sstream>

#include "bcay/error.hpp"

namespace bcay {

namespace {

const char* kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::none: return "none";
    case Violation::Kind::missing_translate: return "missing_translate";
    case Violation::Kind::size_mismatch: return "size_mismatch";
    case Violation::Kind::fat_intersection: return "fat_intersection";
  }
  return "?";
}

json set_to_json(ElementSet s) {
  json a = json::array();
  s.for_each([&](Element e) { a.push_back(e); });
  return a;
}

Element element_from_json(const FiniteGroup& g, const json& v) {
  if (v.is_number_integer()) {
    const auto e = v.get<long long>();
    if (e < 0 || e >= g.order())
      throw FamilyFormatError("element " + std::to_string(e) + " is outside 0.." + std::to_string(g.order() - 1));
    return static_cast<Element>(e);
  }
  if (v.is_string()) {
    if (auto e = g.find(v.get<std::string>())) return *e;
    throw FamilyFormatError("no element labelled '" + v.get<std::string>() + "' in " + g.name());
  }
  throw FamilyFormatError("cell entries must be integers or element labels");
}

std::vector<ElementSet> cells_from_json(const FiniteGroup& g, const json& j) {
  if (!j.is_array() || j.empty()) throw FamilyFormatError("\"cells\" must be a non-empty array of arrays");
  std::vector<ElementSet> cells;
  for (const auto& c : j) {
    if (!c.is_array()) throw FamilyFormatError("each cell must be an array");
    ElementSet s;
    for (const auto& v : c) s.insert(element_from_json(g, v));
    cells.push_back(s);
  }
  return cells;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FamilyFormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

GroupPtr group_from_json(const json& j) {
  if (j.is_string()) return parse_group(j.get<std::string>());
  const json* table = nullptr;
  std::string name = "raw";
  if (j.is_array()) {
    table = &j;
  } else if (j.is_object() && j.contains("table")) {
    table = &j.at("table");
    if (j.contains("name") && j.at("name").is_string()) name = j.at("name").get<std::string>();
  } else {
    throw FamilyFormatError("\"group\" must be a descriptor string or a multiplication table");
  }
  try {
    return from_table(table->get<std::vector<std::vector<Element>>>(), name);
  } catch (const json::exception& e) {
    throw FamilyFormatError(std::string("malformed multiplication table: ") + e.what());
  }
}

json group_to_json(const FiniteGroup& g) {
  try {
    if (parse_group(g.name())->table() == g.table()) return g.name();
  } catch (const Error&) {
  }
  return json{{"name", g.name()}, {"table", g.table()}};
}

CellFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("cells"))
    throw FamilyFormatError("family documents need \"group\" and \"cells\"");
  auto group = group_from_json(j.at("group"));
  return validate_family(group, cells_from_json(*group, j.at("cells")));
}

CellFamily parse_family(const std::string& text) { return family_from_json(parse_json_text(text)); }

CellFamily parse_cells(const GroupPtr& group, const std::string& text) {
  return validate_family(group, cells_from_json(*group, parse_json_text(text)));
}

ElementSet parse_set(const FiniteGroup& g, const std::string& text) {
  const json j = parse_json_text(text);
  if (!j.is_array()) throw FamilyFormatError("a set must be a JSON array");
  ElementSet s;
  for (const auto& v : j) s.insert(element_from_json(g, v));
  return s;
}

json cells_to_json(const std::vector<ElementSet>& cells) {
  json a = json::array();
  for (ElementSet c : cells) a.push_back(set_to_json(c));
  return a;
}

json family_to_json(const CellFamily& f) {
  json j{{"group", group_to_json(f.g())}, {"cells", cells_to_json(f.cells)}, {"validity", to_string(f.validity)}};
  j["ell"] = f.ell;
  j["k"] = f.k;
  if (f.validity != Validity::bcay_valid) j["violation"] = violation_to_json(f);
  return j;
}

json violation_to_json(const CellFamily& f) {
  const Violation& v = f.violation;
  json j{{"kind", kind_name(v.kind)}, {"description", v.describe()}};
  if (v.kind == Violation::Kind::none) return j;
  j["cell"] = set_to_json(v.cell);
  if (v.kind == Violation::Kind::missing_translate) {
    j["element"] = v.element;
    j["missing"] = set_to_json(v.other);
  } else {
    j["other"] = set_to_json(v.other);
  }
  return j;
}

json graph_to_json(const BipartiteIncidenceGraph& x) {
  json gamma = json::array();
  for (int v = 0; v < x.gamma_size; ++v)
    gamma.push_back(v < static_cast<int>(x.graph.labels.size()) ? json(x.graph.labels[v]) : json(v));
  json beta = json::array();
  for (ElementSet b : x.beta) beta.push_back(set_to_json(b));
  json edges = json::array();
  for (int i = 0; i < x.beta_size(); ++i)
    x.beta[i].for_each([&](Element g) { edges.push_back(json::array({g, i})); });
  return json{{"gamma", gamma}, {"beta", beta}, {"edges", edges}};
}

std::string graph_to_dot(const BipartiteIncidenceGraph& x, const std::string& name) {
  std::ostringstream o;
  o << "graph \"" << name << "\" {\n";
  for (int v = 0; v < x.gamma_size; ++v) {
    const std::string label = v < static_cast<int>(x.graph.labels.size()) ? x.graph.labels[v] : std::to_string(v);
    o << "  g" << v << " [shape=circle, label=\"" << label << "\"];\n";
  }
  for (int i = 0; i < x.beta_size(); ++i) o << "  b" << i << " [shape=box, label=\"" << to_string(x.beta[i]) << "\"];\n";
  for (int i = 0; i < x.beta_size(); ++i) x.beta[i].for_each([&](Element g) { o << "  g" << g << " -- b" << i << ";\n"; });
  o << "}\n";
  return o.str();
}

json spectrum_to_json(const SpectrumSummary& s) {
  json a = json::array();
  for (const auto& [v, m] : s.clusters) a.push_back(json{{"value", v}, {"multiplicity", m}});
  return json{{"clusters", a}, {"text", format_spectrum(s)}};
}

json record_to_json(const ClassificationRecord& r) {
  json j;
  j["group"] = r.group;
  j["ell"] = r.ell;
  j["k"] = r.k;
  j["girth"] = r.girth;
  j["cayley"] = r.is_cayley ? json(*r.is_cayley) : json(nullptr);
  j["cayley_method"] = r.cayley_method;
  j["aut_order"] = r.aut_order;
  j["orbits"] = r.orbit_count;
  j["beta_transitive"] = r.beta_transitive;
  j["beta_regular"] = r.beta_regular;
  j["spectrum"] = format_spectrum(r.spectrum);
  j["cells"] = cells_to_json(r.family.cells);
  j["certificate"] = to_hex(r.certificate);
  return j;
}

json report_to_json(const EnumerationReport& r) {
  json recs = json::array();
  for (const auto& x : r.records) recs.push_back(record_to_json(x));
  return json{{"group", r.group}, {"count", r.count}, {"complete", r.complete}, {"records", recs}};
}

json design_to_json(const DesignReport& d) {
  return json{{"v", d.v}, {"k", d.k},         {"lambda", d.lambda},        {"r", d.r},
              {"b", d.b}, {"is_design", d.is_design}, {"is_symmetric", d.is_symmetric}};
}

std::string csv_header() {
  return "group,ell,k,girth,cayley,aut_order,orbits,beta_transitive,beta_regular,spectrum,cells";
}

std::string record_to_csv(const ClassificationRecord& r) {
  std::ostringstream o;
  std::string cells;
  for (ElementSet c : r.family.cells) cells += (cells.empty() ? "" : " ") + to_string(c);
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  o << quote(r.group) << ',' << r.ell << ',' << r.k << ',' << r.girth << ','
    << (r.is_cayley ? (*r.is_cayley ? "Yes" : "No") : "?") << ',' << r.aut_order << ',' << r.orbit_count << ','
    << (r.beta_transitive ? "yes" : "no") << ',' << (r.beta_regular ? "yes" : "no") << ','
    << quote(format_spectrum(r.spectrum)) << ',' << quote(cells);
  return o.str();
}

json golden_to_json(const std::string& group) {
  json rows = json::array();
  for (const auto& r : golden_rows_for(group)) {
    json row{{"table", r.table}, {"ell", r.ell}, {"k", r.k}};
    if (r.girth) row["girth"] = *r.girth;
    row["cayley"] = r.cayley;
    row["aut_order"] = r.aut_order;
    row["orbits"] = r.orbits;
    if (r.printed_as) row["printed_as"] = *r.printed_as;
    rows.push_back(row);
  }
  json j{{"group", group}};
  if (auto c = golden_count_for(group)) j["count"] = *c;
  j["rows"] = rows;
  return j;
}

std::string golden_file_stem(const std::string& group) {
  std::string out;
  for (char c : group) {
    if (c == '(' || c == ')') continue;
    out += c == ':' ? '_' : c;
  }
  return out;
}

std::optional<json> read_golden_file(const std::string& dir, const std::string& group) {
  std::ifstream in(dir + "/" + golden_file_stem(group) + ".json");
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw FamilyFormatError("golden file for " + group + " is malformed: " + e.what());
  }
}

std::pair<std::optional<int>, std::vector<GoldenRow>> golden_from_json(const json& j) {
  try {
    std::optional<int> count;
    if (j.contains("count")) count = j.at("count").get<int>();
    std::vector<GoldenRow> rows;
    for (const auto& r : j.at("rows")) {
      GoldenRow row;
      row.group = j.at("group").get<std::string>();
      row.table = r.value("table", 0);
      row.ell = r.at("ell").get<int>();
      row.k = r.at("k").get<int>();
      if (r.contains("girth")) row.girth = r.at("girth").get<int>();
      row.cayley = r.at("cayley").get<bool>();
      row.aut_order = r.at("aut_order").get<std::uint64_t>();
      row.orbits = r.at("orbits").get<int>();
      if (r.contains("printed_as")) row.printed_as = r.at("printed_as").get<std::string>();
      rows.push_back(row);
    }
    return {count, rows};
  } catch (const json::exception& e) {
    throw FamilyFormatError(std::string("malformed golden document: ") + e.what());
  }
}

}  // namespace bcay
