#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bcay/constructions.hpp"
#include "bcay/enumeration.hpp"
#include "bcay/golden.hpp"

namespace bcay {

using json = nlohmann::ordered_json;

/// A descriptor string, a bare table, or {"name": ..., "table": [[...]]}.
/// Throws UnknownGroup or FamilyFormatError.
GroupPtr group_from_json(const json& j);
/// The catalog descriptor when the group parses back to the same table,
/// otherwise {"name", "table"}.
json group_to_json(const FiniteGroup& g);

/// {"group": ..., "cells": [[...], ...]}; cell entries are indices or element
/// labels. Throws FamilyFormatError for malformed documents.
CellFamily family_from_json(const json& j);
CellFamily parse_family(const std::string& text);
/// Cells given inline against an already resolved group.
CellFamily parse_cells(const GroupPtr& group, const std::string& text);
/// A single element set, e.g. "[1,2,4]" or "[\"b\",\"ab\"]"; no axioms checked.
ElementSet parse_set(const FiniteGroup& g, const std::string& text);
json cells_to_json(const std::vector<ElementSet>& cells);
json family_to_json(const CellFamily& f);
json violation_to_json(const CellFamily& f);

json graph_to_json(const BipartiteIncidenceGraph& x);
std::string graph_to_dot(const BipartiteIncidenceGraph& x, const std::string& name = "bcay");

json spectrum_to_json(const SpectrumSummary& s);
json record_to_json(const ClassificationRecord& r);
json report_to_json(const EnumerationReport& r);
json design_to_json(const DesignReport& d);

/// group,ell,k,girth,cayley,aut_order,orbits, then the remaining fields.
std::string csv_header();
std::string record_to_csv(const ClassificationRecord& r);

json golden_to_json(const std::string& group);
/// Reads <dir>/<file_stem(group)>.json; nullopt when absent.
std::optional<json> read_golden_file(const std::string& dir, const std::string& group);
/// Published count and rows from a golden file document.
std::pair<std::optional<int>, std::vector<GoldenRow>> golden_from_json(const json& j);
/// File name used for a group's golden file, e.g. "(Z4xZ2):Z2" -> "Z4xZ2_Z2".
std::string golden_file_stem(const std::string& group);

}  // namespace bcay
