// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "metro/catalog.hpp"
#include "metro/schema_io.hpp"

namespace metro {
namespace {

using testing::fixture_names;
using testing::fixture_path;
using testing::read_file;

TEST(SchemaIo, FixturesRoundTripByteExact) {
  for (const auto& name : fixture_names()) {
    SCOPED_TRACE(name);
    auto text = read_file(fixture_path(name));
    auto doc = parse_model(text);
    ASSERT_TRUE(doc) << to_string(doc.error());
    auto m = build_model(doc->parts);
    ASSERT_TRUE(m) << to_string(m.error());
    EXPECT_EQ(serialize_model(*m), text);
  }
}

TEST(SchemaIo, SyntaxErrorHasPosition) {
  auto r = parse_model("{\n  \"schema_version\": \"1\",\n  oops\n}");
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().code, "E-SYNTAX");
  EXPECT_EQ(r.error().subject.substr(0, 2), "3:");
}

TEST(SchemaIo, BadVersion) {
  auto j = nlohmann::json::parse(read_file(fixture_path("l3vpn.metromodel.json")));
  j["schema_version"] = "9";
  auto r = parse_model(j.dump());
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().code, "E-BAD-VERSION");
}

TEST(SchemaIo, UnknownKeyRejected) {
  auto j = nlohmann::json::parse(read_file(fixture_path("l3vpn.metromodel.json")));
  j["elements"][0]["colour"] = "blue";
  auto r = parse_model(j.dump());
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().code, "E-UNKNOWN-KEY");
  EXPECT_NE(r.error().subject.find("colour"), std::string::npos);
}

TEST(SchemaIo, MissingFieldRejected) {
  auto j = nlohmann::json::parse(read_file(fixture_path("l3vpn.metromodel.json")));
  j["sites"][0].erase("has_power");
  auto r = parse_model(j.dump());
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().code, "E-MISSING-FIELD");
  EXPECT_NE(r.error().subject.find("has_power"), std::string::npos);
}

TEST(SchemaIo, BadEnumValue) {
  auto j = nlohmann::json::parse(read_file(fixture_path("l3vpn.metromodel.json")));
  j["layers"][0]["kind"] = "ether";
  auto r = parse_model(j.dump());
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().code, "E-BAD-VALUE");
}

TEST(SchemaIo, OptionalFieldsDefault) {
  auto j = nlohmann::json::parse(read_file(fixture_path("amplifier.metromodel.json")));
  j.erase("metadata");
  for (auto& s : j["sites"]) s.erase("space_rank");
  auto r = parse_model(j.dump());
  ASSERT_TRUE(r) << to_string(r.error());
  EXPECT_TRUE(r->parts.metadata.name.empty());
}

TEST(SchemaIo, TemplatesRoundTrip) {
  for (const auto& info : list_templates()) {
    for (bool integrated : {false, true}) {
      SCOPED_TRACE(std::string(info.name));
      auto doc = instantiate_template(info.id, {.integrated_cpe = integrated});
      auto text = serialize_document(doc);
      auto back = parse_model(text);
      ASSERT_TRUE(back) << to_string(back.error());
      EXPECT_EQ(serialize_document(*back), text);
      auto m = build_model(back->parts);
      ASSERT_TRUE(m) << to_string(m.error());
      auto canonical = serialize_model(*m);
      auto again = parse_model(canonical);
      ASSERT_TRUE(again);
      EXPECT_EQ(serialize_model(testing::build_or_throw(again->parts)), canonical);
    }
  }
}

}  // namespace
}  // namespace metro
