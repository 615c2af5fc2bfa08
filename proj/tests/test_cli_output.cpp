// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// Structural validation of the JSON output conventions against the shipped
// schema: every integer is a decimal string (the values exceed 2^63), rows
// carry the fixed column set, and the schema file itself stays in sync.

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <fstream>
#include <regex>

#include "rdb/bounds.hpp"

using namespace rdb;
using json = nlohmann::json;

namespace {

json load_schema() {
  std::ifstream in(std::string(RDB_SOURCE_DIR) + "/schemas/output.schema.json");
  REQUIRE(in.good());
  return json::parse(in);
}

// Mirrors the serialization in tools/rdb.cpp.
json row_to_json(const BoundsRow& r) {
  json j;
  j["m"] = std::to_string(r.m);
  j["G"] = dec(r.G_value);
  j["F"] = dec(r.F_value);
  j["ratio"] = r.ratio;
  j["G_witness_d"] =
      r.G_witness_d ? json(std::to_string(*r.G_witness_d)) : json(nullptr);
  j["F_witness_d"] =
      r.F_witness_d ? json(std::to_string(*r.F_witness_d)) : json(nullptr);
  j["G_witness"] = r.G_witness;
  j["F_witness"] = r.F_witness;
  return j;
}

void check_pattern(const json& value, const std::string& pattern) {
  REQUIRE(value.is_string());
  CHECK(std::regex_match(value.get<std::string>(), std::regex(pattern)));
}

}  // namespace

TEST_CASE("schema file is well formed and names the row columns", "[cli]") {
  json schema = load_schema();
  CHECK(schema.at("required") == json::array({"manifest"}));
  const json& row_req =
      schema.at("properties").at("rows").at("items").at("required");
  for (const char* col : {"m", "G", "F", "ratio", "G_witness_d", "F_witness_d",
                          "G_witness", "F_witness"})
    CHECK(std::find(row_req.begin(), row_req.end(), json(col)) !=
          row_req.end());
  const json& man_req = schema.at("properties").at("manifest").at("required");
  for (const char* key : {"command", "seed", "precision", "tolerances",
                          "version", "timestamp"})
    CHECK(std::find(man_req.begin(), man_req.end(), json(key)) !=
          man_req.end());
}

TEST_CASE("table rows serialize per the schema constraints", "[cli]") {
  json schema = load_schema();
  const json& props =
      schema.at("properties").at("rows").at("items").at("properties");
  for (const BoundsRow& r : bounds_table(13, 21)) {
    json j = row_to_json(r);
    for (const char* key : {"m", "G", "F"})
      check_pattern(j.at(key),
                    props.at(key).at("pattern").get<std::string>());
    check_pattern(j.at("ratio"),
                  props.at("ratio").at("pattern").get<std::string>());
    for (const char* key : {"G_witness_d", "F_witness_d"}) {
      const json& v = j.at(key);
      if (!v.is_null())
        check_pattern(v, props.at(key).at("pattern").get<std::string>());
    }
    CHECK(j.at("G_witness").is_string());
    CHECK(j.at("F_witness").is_string());
  }
}

TEST_CASE("big values survive the string serialization", "[cli]") {
  // G(17) does not fit in 64 bits times anything reasonable; the decimal
  // string must round-trip exactly.
  BoundsRow r = bounds_row(17);
  json j = row_to_json(r);
  CHECK(Natural(j.at("G").get<std::string>()) == r.G_value);
  CHECK(Natural(j.at("F").get<std::string>()) == r.F_value);
  CHECK(j.at("G").get<std::string>() == "348489762717");
  CHECK(j.at("F").get<std::string>() == "871782912001");
}
