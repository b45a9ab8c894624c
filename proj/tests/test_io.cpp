#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "rainbow/catalog.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/io.hpp"

using namespace rainbow;

TEST_CASE("family files round-trip") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    const SetFamily f = oracle::random_family(1 + round % 7, 0.4, rng);
    std::stringstream s;
    write_family(s, f);
    CHECK(read_family(s) == f);
  }
  std::istringstream text("# comment\nn=3\n1\n3\n\n7\n");
  CHECK(read_family(text) == SetFamily(3, {1, 3, 7}));
}

TEST_CASE("family parse errors") {
  std::istringstream no_header("1\n2\n");
  CHECK_THROWS_AS(read_family(no_header), ParseError);
  std::istringstream bad_hex("n=3\nzz\n");
  CHECK_THROWS_AS(read_family(bad_hex), ParseError);
  std::istringstream too_big("n=2\nf\n");
  CHECK_THROWS_AS(read_family(too_big), ParseError);
}

TEST_CASE("coloring files round-trip") {
  for (const Coloring& c : {butterfly_coloring(4), Coloring::monochromatic(2), broom_chain_coloring(5, 2)}) {
    std::stringstream s;
    write_coloring(s, c);
    CHECK(read_coloring(s) == c);
  }
  std::istringstream raw("n=1\n7\n3\n");
  const Coloring c = read_coloring(raw);
  CHECK(c.color_count() == 2);
  CHECK(c(0) == 0);
  std::istringstream short_list("n=2\n0\n1\n2\n");
  CHECK_THROWS_AS(read_coloring(short_list), ParseError);
}

TEST_CASE("poset JSON round-trip") {
  for (const char* id : {"crown:3", "diamond", "spider:2x3", "x", "antichain:3", "boolean:3"}) {
    const Poset p = catalog(id);
    const Poset q = poset_from_json(poset_to_json(p));
    CHECK(q.same_order(p));
    CHECK(q.labels() == p.labels());
  }
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"n": 2, "covers": [[0, 1, 2]]})")), ParseError);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"n": 2, "covers": [[0, 1], [1, 0]]})")), CycleDetected);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"covers": []})")), ParseError);
}

TEST_CASE("embedding JSON uses labels and hex masks") {
  CopyEmbedding e{catalog("chain:2"), {0x1, 0x3}, CopyMode::kStrong};
  const Json j = embedding_to_json(e);
  CHECK(j["mode"] == "strong");
  CHECK(j["images"]["c1"] == "0x1");
  CHECK(j["images"]["c2"] == "0x3");
}

TEST_CASE("generator specs") {
  CHECK(resolve_family("layer:5:2") == layer(5, 2));
  CHECK(resolve_family("middle:6:1") == middle_layers(6, 1));
  CHECK(resolve_family("full:3").size() == 8);
  CHECK(resolve_family("kt:5") == katona_tarjan_family(5));
  CHECK(resolve_coloring("butterfly:4") == butterfly_coloring(4));
  CHECK(resolve_coloring("broom:6:3") == broom_chain_coloring(6, 3));
  CHECK(resolve_coloring("lowertriv:middle:4:1").color_count() == 7);
  CHECK(resolve_coloring("distinct:3").color_count() == 8);
  CHECK(resolve_poset("crown:4").size() == 8);
  CHECK_THROWS_AS(resolve_family("/no/such/file"), ParseError);
  CHECK_THROWS_AS(resolve_poset("/no/such/file.json"), ParseError);
}
