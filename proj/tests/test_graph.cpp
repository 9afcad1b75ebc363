#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wsbm/graph.hpp"
#include "wsbm/rng.hpp"

using namespace wsbm;

namespace {

WeightedGraph parse(const std::string& text, EdgeListOptions opts = {}) {
  std::istringstream in(text);
  return parse_edge_list(in, opts);
}

}  // namespace

TEST_CASE("weighted graph invariants") {
  Eigen::MatrixXd ok = Eigen::MatrixXd::Zero(3, 3);
  ok(0, 1) = ok(1, 0) = 2.0;
  CHECK_NOTHROW(WeightedGraph{ok});

  Eigen::MatrixXd small = Eigen::MatrixXd::Zero(2, 2);
  CHECK_THROWS_AS(WeightedGraph{small}, InputError);

  Eigen::MatrixXd diag = ok;
  diag(1, 1) = 1.0;
  CHECK_THROWS_AS(WeightedGraph{diag}, InputError);

  Eigen::MatrixXd asym = ok;
  asym(0, 2) = 5.0;
  CHECK_THROWS_AS(WeightedGraph{asym}, InputError);
}

TEST_CASE("edge list parsing") {
  SUBCASE("basic 1-indexed with comments, commas, extra tokens") {
    WeightedGraph g = parse("# header\n1,2,1.5\n2 3 2.0 1618033988\n\n1 3 0.25\n");
    CHECK(g.n() == 3);
    CHECK(g(0, 1) == 1.5);
    CHECK(g(1, 2) == 2.0);
    CHECK(g(0, 2) == 0.25);
  }

  SUBCASE("0-indexed") {
    EdgeListOptions o;
    o.index_base = 0;
    WeightedGraph g = parse("0 1 1\n1 2 1\n0 3 1\n", o);
    CHECK(g.n() == 4);
    CHECK(g(0, 3) == 1.0);
  }

  SUBCASE("missing pairs default to zero") {
    WeightedGraph g = parse("1 2 1\n3 4 1\n");
    CHECK(g.n() == 4);
    CHECK(g(0, 2) == 0.0);
    CHECK(g(1, 3) == 0.0);
  }

  SUBCASE("duplicate policies") {
    CHECK(parse("1 2 1\n2 1 2\n1 3 1\n").operator()(0, 1) == 3.0);  // Sum default
    EdgeListOptions o;
    o.duplicates = DuplicatePolicy::Max;
    CHECK(parse("1 2 1\n2 1 2\n1 3 1\n", o)(0, 1) == 2.0);
    o.duplicates = DuplicatePolicy::Last;
    CHECK(parse("1 2 5\n2 1 2\n1 3 1\n", o)(0, 1) == 2.0);
    o.duplicates = DuplicatePolicy::Error;
    CHECK_THROWS_AS(parse("1 2 1\n2 1 2\n1 3 1\n", o), InputError);
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(parse("1 1 2.0\n1 2 1\n1 3 1\n"), InputError);  // self-loop
    CHECK_THROWS_AS(parse("1 2\n"), InputError);                    // malformed
    CHECK_THROWS_AS(parse("1 2 1\n"), InputError);                  // < 3 nodes
    EdgeListOptions o;
    o.index_base = 1;
    CHECK_THROWS_AS(parse("0 2 1\n2 3 1\n", o), InputError);  // below base
  }
}

TEST_CASE("serialize round trip is bitwise") {
  RngStream rng(5, 0);
  const int n = 17;
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) w(i, j) = w(j, i) = rng.normal();
  WeightedGraph g(w);
  std::ostringstream out;
  serialize_edge_list(g, out);
  WeightedGraph back = parse(out.str());
  REQUIRE(back.n() == n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(back(i, j) == g(i, j));
}

TEST_CASE("dichotomize") {
  WeightedGraph g = parse("1 2 0.5\n2 3 1.5\n1 3 2.5\n");
  WeightedGraph b = dichotomize(g, 1.0);
  CHECK(b(0, 1) == 0.0);
  CHECK(b(1, 2) == 1.0);
  CHECK(b(0, 2) == 1.0);

  SUBCASE("strict inequality at the threshold") {
    WeightedGraph at = dichotomize(g, 0.5);
    CHECK(at(0, 1) == 0.0);  // 0.5 > 0.5 is false
  }

  SUBCASE("monotone in t0") {
    RngStream rng(9, 0);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(10, 10);
    for (int i = 0; i < 10; ++i)
      for (int j = i + 1; j < 10; ++j) w(i, j) = w(j, i) = rng.uniform();
    WeightedGraph rg(w);
    WeightedGraph lo = dichotomize(rg, 0.3), hi = dichotomize(rg, 0.6);
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) CHECK(hi(i, j) <= lo(i, j));
  }
}

TEST_CASE("elementwise power") {
  WeightedGraph g = parse("1 2 2\n2 3 -3\n1 3 0.5\n");
  CHECK(elementwise_power(g, 1) == g.weights());
  Eigen::MatrixXd p2 = elementwise_power(g, 2);
  CHECK(p2(0, 1) == 4.0);
  CHECK(p2(1, 2) == 9.0);
  CHECK(p2(0, 2) == 0.25);
  Eigen::MatrixXd p3 = elementwise_power(g, 3);
  CHECK(p3(1, 2) == -27.0);
  CHECK_THROWS_AS(elementwise_power(g, 0), InputError);
}

// The real-network example requires the aves wildbird dataset, which is not
// redistributed here; point WSBM_AVES_PATH at the edge-list file to enable.
TEST_CASE("aves wildbird network shape") {
  const char* path = std::getenv("WSBM_AVES_PATH");
  if (!path) return;  // skip
  std::ifstream in(path);
  REQUIRE(in.good());
  WeightedGraph g = parse_edge_list(in);
  CHECK(g.n() == 145);
  int nonzero = 0;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (g(i, j) != 0.0) ++nonzero;
  CHECK(nonzero == 2512);
}
