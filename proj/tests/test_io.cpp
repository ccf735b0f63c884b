#include "doctest.h"

#include "covlab/io.hpp"
#include "helpers.hpp"

using namespace covlab;
using namespace covlab::testutil;

TEST_CASE("parse topology") {
  InstanceDocument d = parse_instance(R"({"kind":"topology","points":2,"opens":[[],[0],[0,1]]})");
  CHECK(d.kind == "topology");
  REQUIRE(d.topology.has_value());
  CHECK(*d.topology == sierpinski());
  CHECK_THROWS_AS(parse_instance(R"({"kind":"topology","points":2,"opens":[[],[0]]})"),
                  ValidationError);
}

TEST_CASE("parse family and collection") {
  InstanceDocument d = parse_instance(R"({"kind":"family","ground":2,"sets":[[0],[1]]})");
  REQUIRE(d.family.has_value());
  CHECK(*d.family == fam(2, {{0}, {1}}));
  InstanceDocument c =
      parse_instance(R"({"kind":"collection","ground":2,"families":[[[0],[0,1]]]})");
  REQUIRE(c.collection.has_value());
  CHECK(*c.collection == coll(2, {principal_ultrafilter(0, 2)}));
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"kind":"widget"})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"kind":"family","ground":2,"sets":[[1,0]]})"),
                  ParseError);  // not ascending
  CHECK_THROWS_AS(parse_instance(R"({"kind":"family","ground":2,"sets":[[0,0]]})"),
                  ParseError);  // duplicate member
  CHECK_THROWS_AS(parse_instance(R"({"kind":"family","ground":2,"sets":[[0],[0]]})"),
                  ParseError);  // duplicate set
  CHECK_THROWS_AS(parse_instance(R"({"kind":"family","ground":2,"sets":[[2]]})"),
                  ParseError);  // out of ground
}

TEST_CASE("round trip is canonical") {
  std::string text = R"({"kind":"family","ground":2,"sets":[[0],[1],[0,1]]})";
  std::string once = serialize_instance(parse_instance(text));
  std::string twice = serialize_instance(parse_instance(once));
  CHECK(once == twice);
  std::string topo_text = R"({"kind":"topology","points":2,"opens":[[],[0],[0,1]]})";
  CHECK(serialize_instance(parse_instance(topo_text)) ==
        serialize_instance(parse_instance(serialize_instance(parse_instance(topo_text)))));
}

TEST_CASE("value serializers") {
  CHECK(subset_to_json(msk({0, 2})) == json::array({0, 2}));
  CHECK(subset_from_json(json::array({0, 2}), 3) == msk({0, 2}));
  CHECK(family_from_json(family_to_json(fam(3, {{1, 2}, {0}}))) == fam(3, {{0}, {1, 2}}));
  PointSequence seq(2, {1, 0});
  CHECK(point_sequence_from_json(point_sequence_to_json(seq)) == seq);
  SubsetSequence ss(2, 2, {msk({0}), msk({0, 1})});
  CHECK(subset_sequence_from_json(subset_sequence_to_json(ss)) == ss);
}

TEST_CASE("render_json") {
  json j = {{"b", 1}, {"a", 2}};
  CHECK(render_json(j, false) == R"({"a":2,"b":1})" "\n");
  CHECK(render_json(j, true) == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
}

TEST_CASE("instance bundles") {
  InstanceDocument d = parse_instance(
      R"({"kind":"instance-bundle","items":{
            "space":{"kind":"topology","points":2,"opens":[[],[0],[0,1]]},
            "B":{"kind":"family","ground":1,"sets":[[0]]}}})");
  CHECK(d.kind == "instance-bundle");
  CHECK(d.bundle["items"].contains("space"));
}
