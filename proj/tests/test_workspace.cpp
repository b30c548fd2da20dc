#include <doctest.h>

#include <json.hpp>

#include "gvk/errors.hpp"
#include "gvk/workspace.hpp"

using gvk::Int;
using gvk::Rat;
using json = nlohmann::ordered_json;

namespace {

json minimal_doc() {
    return json::parse(R"({
      "format": 1,
      "geometry": {"label": "cy", "rank": 2, "dim": 3, "canonical_pairing": [0, 0]},
      "truncation": {"weights": [1, 1], "cutoff": 8},
      "tables": [
        {"kind": "GV", "n": 0, "insertion_degrees": [],
         "entries": [[[1, 0], "3"], [[2, 0], "-1/2"], [[0, 1], "2"]]}
      ]
    })");
}

}  // namespace

TEST_CASE("a minimal workspace loads") {
    const auto ws = gvk::workspace_from_json(minimal_doc());
    CHECK(ws.geometry.rank() == 2);
    CHECK(ws.geometry.dim() == 3);
    CHECK(ws.truncation.cutoff() == 8);
    REQUIRE(ws.tables.size() == 1);
    const auto& t = ws.tables[0];
    CHECK(t.kind == gvk::TableKind::GV);
    CHECK(t.entries.size() == 3);
    CHECK(t.entries.at(gvk::CurveClass({Int(2), Int(0)})) == Rat(-1, 2));
    CHECK(!ws.ring);
}

TEST_CASE("serialization round-trips byte for byte") {
    auto doc = minimal_doc();
    doc["ring"] = json{{"builtin", "P3"}};
    doc["kclasses"] = json{{"builtin", "line-bundles"}};
    const auto ws = gvk::workspace_from_json(doc);
    const json first = gvk::workspace_to_json(ws);
    const auto reloaded = gvk::workspace_from_json(first);
    const json second = gvk::workspace_to_json(reloaded);
    CHECK(first.dump(2) == second.dump(2));
    REQUIRE(reloaded.ring.has_value());
    CHECK(reloaded.ring->dimension() == 3);
    REQUIRE(reloaded.kclasses.has_value());
    CHECK(reloaded.kclasses->classes.size() == 4);
}

TEST_CASE("explicit ring blocks round-trip") {
    auto doc = minimal_doc();
    doc["ring"] = json::parse(R"({
      "label": "P1",
      "basis": [{"name": "1", "degree": 0}, {"name": "H", "degree": 1}],
      "products": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]]],
      "top": 1,
      "tangent_chern": [["0", "2"]]
    })");
    const auto ws = gvk::workspace_from_json(doc);
    REQUIRE(ws.ring.has_value());
    CHECK(ws.ring->dimension() == 1);
    CHECK(gvk::todd_class(*ws.ring) == gvk::RingElem{Rat(1), Rat(1)});
    const json out = gvk::workspace_to_json(ws);
    const auto reloaded = gvk::workspace_from_json(out);
    CHECK(gvk::workspace_to_json(reloaded).dump(2) == out.dump(2));
}

TEST_CASE("unknown fields are rejected") {
    auto doc = minimal_doc();
    doc["extra"] = 1;
    CHECK_THROWS_AS(gvk::workspace_from_json(doc), gvk::ParseError);
    auto doc2 = minimal_doc();
    doc2["geometry"]["spin"] = true;
    CHECK_THROWS_AS(gvk::workspace_from_json(doc2), gvk::ParseError);
}

TEST_CASE("floats and unreduced rationals are rejected") {
    auto doc = minimal_doc();
    doc["truncation"]["cutoff"] = 8.5;
    CHECK_THROWS_AS(gvk::workspace_from_json(doc), gvk::ParseError);

    auto doc2 = minimal_doc();
    doc2["tables"][0]["entries"][0][1] = "2/4";
    CHECK_THROWS_AS(gvk::workspace_from_json(doc2), gvk::ParseError);

    auto doc3 = minimal_doc();
    doc3["tables"][0]["entries"][0][1] = "4/2";
    CHECK_THROWS_AS(gvk::workspace_from_json(doc3), gvk::ParseError);

    auto doc4 = minimal_doc();
    doc4["tables"][0]["entries"][0][1] = 3;  // numbers are not rationals
    CHECK_THROWS_AS(gvk::workspace_from_json(doc4), gvk::ParseError);

    auto doc5 = minimal_doc();
    doc5["tables"][0]["entries"][0][1] = "1/0";
    CHECK_THROWS_AS(gvk::workspace_from_json(doc5), gvk::ParseError);
}

TEST_CASE("odd insertion degrees are rejected") {
    auto doc = minimal_doc();
    doc["tables"][0]["n"] = 1;
    doc["tables"][0]["insertion_degrees"] = json::array({3});
    CHECK_THROWS_AS(gvk::workspace_from_json(doc), gvk::ParseError);
    doc["tables"][0]["insertion_degrees"] = json::array({2});
    CHECK_NOTHROW(gvk::workspace_from_json(doc));
}

TEST_CASE("format field is required and checked") {
    auto doc = minimal_doc();
    doc["format"] = 2;
    CHECK_THROWS_AS(gvk::workspace_from_json(doc), gvk::ParseError);
    auto doc2 = minimal_doc();
    doc2.erase("format");
    CHECK_THROWS_AS(gvk::workspace_from_json(doc2), gvk::ParseError);
}

TEST_CASE("validation collects one issue per table") {
    auto doc = minimal_doc();
    // table 0: fine. table 1: missing divisor entry. table 2: bad rational.
    doc["tables"].push_back(json::parse(
        R"({"kind": "GV", "n": 0, "insertion_degrees": [],
            "entries": [[[2, 2], "1"]]})"));
    doc["tables"].push_back(json::parse(
        R"({"kind": "GW", "n": 0, "insertion_degrees": [],
            "entries": [[[1, 0], "0.5"]]})"));
    std::optional<gvk::Workspace> ws;
    const auto issues = gvk::validate_workspace_json(doc, &ws);
    REQUIRE(issues.size() == 2);
    CHECK(issues[0].where == "tables[1]");
    CHECK(issues[1].where == "tables[2]");
    CHECK(!ws.has_value());
}

TEST_CASE("semi-positivity violations are reported") {
    auto doc = minimal_doc();
    doc["geometry"]["canonical_pairing"] = json::array({0, 1});
    const auto issues = gvk::validate_workspace_json(doc);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].where == "geometry");
    CHECK(issues[0].message.find("semi-positivity") != std::string::npos);
}

TEST_CASE("duplicate classes are rejected") {
    auto doc = minimal_doc();
    doc["tables"][0]["entries"].push_back(json::parse(R"([[1, 0], "7"])"));
    CHECK_THROWS_AS(gvk::workspace_from_json(doc), gvk::ParseError);
}

TEST_CASE("degenerate ring blocks are reported") {
    auto doc = minimal_doc();
    doc["ring"] = json::parse(R"({
      "label": "degenerate",
      "basis": [{"name": "1", "degree": 0}, {"name": "A", "degree": 1},
                {"name": "T", "degree": 2}],
      "products": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [0, 2, [[2, "1"]]]],
      "top": 2,
      "tangent_chern": [["0", "0", "0"], ["0", "0", "0"]]
    })");
    const auto issues = gvk::validate_workspace_json(doc);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].where == "ring");
}

TEST_CASE("a table converts to a normalized Novikov series") {
    auto doc = minimal_doc();
    doc["tables"][0]["entries"].push_back(json::parse(R"([[3, 0], "0"])"));
    const auto ws = gvk::workspace_from_json(doc);
    const auto series = gvk::series_from_table(ws.tables[0]);
    CHECK(series.constant_term() == 0);
    CHECK(series.terms().size() == 3);  // the explicit zero entry drops out
    CHECK(series.coeff(gvk::CurveClass({Int(2), Int(0)})) == Rat(-1, 2));
    CHECK(series.coeff(gvk::CurveClass({Int(3), Int(0)})) == 0);
}

TEST_CASE("reports serialize with contributions") {
    const auto ws = gvk::workspace_from_json(minimal_doc());
    gvk::TransformReport report;
    gvk::gw_from_gv(ws.tables[0], &report);
    const json doc = gvk::report_to_json(report);
    CHECK(doc["from"] == "GV");
    CHECK(doc["to"] == "GW");
    REQUIRE(doc["entries"].size() == 3);
    const std::string text = gvk::report_to_text(report);
    CHECK(text.find("divisor sum") != std::string::npos);
    bool found = false;
    for (const auto& e : doc["entries"])
        for (const auto& c : e["contributions"])
            if (c["r"] == 2) found = true;
    CHECK(found);
}
