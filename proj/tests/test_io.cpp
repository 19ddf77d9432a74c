#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "bcay/error.hpp"
#include "bcay/io.hpp"
#include "bcay/verify.hpp"

using namespace bcay;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(BCAY_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("bcay_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("family documents round-trip") {
  const CellFamily f = parse_family(R"({"group": "C7", "cells": [[0,3,1],[0,2,6],[5,4,0]]})");
  CHECK(f.valid());
  const json j = family_to_json(f);
  CHECK(j["group"] == "Z7");
  CHECK(j["cells"] == json::parse("[[0,1,3],[0,2,6],[0,4,5]]"));
  CHECK(family_from_json(j).cells == f.cells);

  const CellFamily q = parse_family(R"({"group": "Q8", "cells": [["1","i","-j"],["1","-i","k"],["1","j","-k"]]})");
  CHECK(q.valid());

  const CellFamily raw = parse_family(R"({"group": [[0,1,2],[1,2,0],[2,0,1]], "cells": [[0,1,2]]})");
  CHECK(raw.g().order() == 3);
  CHECK(family_from_json(family_to_json(raw)).g().table() == raw.g().table());
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_family("{"), FamilyFormatError);
  CHECK_THROWS_AS(parse_family(R"({"group": "Z7"})"), FamilyFormatError);
  CHECK_THROWS_AS(parse_family(R"({"group": "Z7", "cells": [[0, 9]]})"), FamilyFormatError);
  CHECK_THROWS_AS(parse_family(R"({"group": "Z7", "cells": [["x"]]})"), FamilyFormatError);
  CHECK_THROWS_AS(parse_family(R"({"group": "Nope", "cells": [[0]]})"), UnknownGroup);
  CHECK(parse_set(*parse_group("Z7"), "[1,2,4]") == ElementSet{1, 2, 4});
}

TEST_CASE("violations carry witnesses") {
  const json j = family_to_json(parse_cells(parse_group("Z5"), "[[0,1,2],[0,3,4]]"));
  CHECK(j["validity"] == "generic");
  CHECK(j["violation"]["kind"] == "missing_translate");
  CHECK(j["violation"]["cell"] == json::parse("[0,1,2]"));
  CHECK(j["violation"]["element"] == 1);
  CHECK(j["violation"]["missing"] == json::parse("[0,1,4]"));
}

TEST_CASE("graph and record serialization") {
  const CellFamily f = parse_family(R"({"group": "Z7", "cells": [[0,1,3],[0,2,6],[0,4,5]]})");
  const auto x = build_bcay(f);
  const json g = graph_to_json(x);
  CHECK(g["gamma"].size() == 7);
  CHECK(g["beta"].size() == 7);
  CHECK(g["edges"].size() == 21);
  CHECK(graph_to_dot(x).find("g0 -- b") != std::string::npos);
  const ClassificationRecord r = classify(f);
  const json rj = record_to_json(r);
  CHECK(rj["aut_order"] == 336);
  CHECK(rj["cayley"] == true);
  CHECK(record_to_csv(r).rfind("\"Z7\",3,3,6,Yes,336,1,", 0) == 0);
}

TEST_CASE("golden files match the embedded data") {
  std::size_t files = 0;
  for (const auto& c : golden_counts()) {
    CAPTURE(c.group);
    const auto doc = read_golden_file(BCAY_GOLDEN_DIR, c.group);
    REQUIRE(doc.has_value());
    ++files;
    CHECK(*doc == golden_to_json(c.group));
    const auto [count, rows] = golden_from_json(*doc);
    CHECK(count == c.count);
    CHECK(rows.size() == golden_rows_for(c.group).size());
  }
  CHECK(files == golden_counts().size());
}

TEST_CASE("a corrupted golden file makes the golden suite fail with a diff") {
  const auto dir = scratch("golden");
  for (const auto& c : golden_counts()) {
    std::ofstream(dir / (golden_file_stem(c.group) + ".json")) << golden_to_json(c.group).dump();
  }
  json z7 = golden_to_json("Z7");
  z7["count"] = 2;
  std::ofstream(dir / "Z7.json") << z7.dump();
  json z9 = golden_to_json("Z9");
  z9["rows"][0]["aut_order"] = 1;
  std::ofstream(dir / "Z9.json") << z9.dump();

  VerifyOptions o;
  o.max_order = 9;
  o.only = {"golden"};
  o.golden_dir = dir.string();
  const auto res = run_verification(o);
  REQUIRE(res.size() == 1);
  CHECK_FALSE(res[0].ok());
  bool count_diff = false, row_diff = false;
  for (const auto& f : res[0].failures) {
    count_diff = count_diff || f.find("Z7: count 1, published 2") != std::string::npos;
    row_diff = row_diff || (f.find("Z9: rows differ") != std::string::npos && f.find("-(") != std::string::npos);
  }
  CHECK(count_diff);
  CHECK(row_diff);
  std::filesystem::remove_all(dir);
}

TEST_CASE("command-line exit codes") {
  const Run e = run_cli("enumerate --group C7 --format json");
  CHECK(e.status == 0);
  CHECK(json::parse(e.out)["count"] == 1);

  const Run v = run_cli("validate --group C5 --cells \"[[0,1,2],[0,3,4]]\"");
  CHECK(v.status == 2);
  const json w = json::parse(v.out)["violation"];
  CHECK(w["cell"] == json::parse("[0,1,2]"));
  CHECK(w["element"] == 1);
  CHECK(w["missing"] == json::parse("[0,1,4]"));

  const Run c = run_cli("construct pg 3 2 | " + std::string(BCAY_CLI) + " classify --format json");
  CHECK(c.status == 0);
  const json rec = json::parse(c.out);
  CHECK(rec["ell"] == 3);
  CHECK(rec["k"] == 3);
  CHECK(rec["girth"] == 6);
  CHECK(rec["cayley"] == true);

  CHECK(run_cli("enumerate --group Nope").status == 4);
  CHECK(run_cli("validate --group C7 --cells \"[[0,1\"").status == 5);
  CHECK(run_cli("enumerate --group Z15 --budget-seconds 1e-9").status == 3);
  CHECK(run_cli("convert bipartite-cayley Z6 \"[1,3,5]\"").status == 2);
  CHECK(run_cli("verify --only geometry").status == 0);
}

TEST_CASE("command-line output is deterministic") {
  const Run a = run_cli("enumerate --group Dic4 --format csv --workers 1");
  const Run b = run_cli("enumerate --group Dic4 --format csv --workers 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}
