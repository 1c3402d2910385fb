#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ualg/error.hpp"
#include "ualg/io.hpp"

using namespace ualg;
namespace fx = ualg::fixtures;

TEST_CASE("json algebra round trip") {
  Algebra a = fx::c3_with_cycle();
  CHECK(parse_algebra_json(emit_algebra_json(a)) == a);

  Algebra parsed = parse_algebra_json(
      R"({"size": 3, "binary": [[[1,2,3],[2,3,1],[3,1,2]]], "unary": [[3,1,2]]})");
  CHECK(parsed == a);

  CHECK_THROWS_AS(parse_algebra_json("{"), ParseError);
  CHECK_THROWS_AS(parse_algebra_json(R"({"binary": []})"), ParseError);
  CHECK_THROWS_AS(
      parse_algebra_json(R"({"size": 2, "binary": [[[1,3],[1,1]]]})"),
      EntryOutOfRange);
}

TEST_CASE("nested-list algebra format") {
  Algebra a = fx::c3_with_cycle();
  std::string text = "[ [3, 1, 2], [ [1, 2, 3], [2, 3, 1], [3, 1, 2] ] ]";
  CHECK(parse_algebra_gap(text) == a);
  CHECK(emit_algebra_gap(a) ==
        "[ [ 3, 1, 2 ], [ [ 1, 2, 3 ], [ 2, 3, 1 ], [ 3, 1, 2 ] ] ]\n");
  CHECK(parse_algebra_gap(emit_algebra_gap(a)) == a);

  // a flat list is unary, depth decides
  Algebra unary_only = parse_algebra_gap("[ [2, 1] ]");
  CHECK(unary_only.size == 2);
  CHECK(unary_only.binary.empty());
  CHECK(unary_only.unary == std::vector<UnaryTable>{{2, 1}});

  Algebra one = parse_algebra_gap("[ [[1]] ]");
  CHECK(one.size == 1);
  CHECK(one.binary.size() == 1);

  CHECK_THROWS_AS(parse_algebra_gap("[ ]"), ParseError);
  CHECK_THROWS_AS(parse_algebra_gap("[ [1, 2] "), ParseError);
  CHECK_THROWS_AS(parse_algebra_gap("[ [1, x] ]"), ParseError);
}

TEST_CASE("parse_algebra detects the format") {
  Algebra a = fx::c4();
  CHECK(parse_algebra(emit_algebra_json(a)) == a);
  CHECK(parse_algebra(emit_algebra_gap(a)) == a);
  CHECK_THROWS_AS(parse_algebra("   "), ParseError);
}

TEST_CASE("round trips hold for random algebras") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    int nb = static_cast<int>(rng() % 3);
    int nu = static_cast<int>(rng() % 3);
    Algebra a = fx::random_algebra(rng, n, nb, nu);
    CHECK(parse_algebra_json(emit_algebra_json(a)) == a);
    if (nb + nu > 0) {
      CHECK(parse_algebra_gap(emit_algebra_gap(a)) == a);
    }
  }
}

TEST_CASE("partition and mapping text forms") {
  Partition p = Partition::from_forest({-2, -1, -2, -1, 3, 1});
  CHECK(forest_string(p) == "[ -2, -1, -2, -1, 3, 1 ]");
  CHECK(blocks_string(p) == "[ [ 1, 6 ], [ 2 ], [ 3, 5 ], [ 4 ] ]");
  CHECK(mapping_string(Mapping({1, 1, 1, 2, 3, 3})) == "[ 1, 1, 1, 2, 3, 3 ]");
  CHECK(int_list_string({}) == "[]");
}
