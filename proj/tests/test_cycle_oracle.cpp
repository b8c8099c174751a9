#include <doctest.h>

#include <random>
#include <stdexcept>

#include "joindet/cycle_oracle.hpp"
#include "joindet/int_matrix.hpp"
#include "joindet/join_algebra.hpp"
#include "joindet/random_graphs.hpp"

using namespace joindet;

TEST_CASE("known determinants") {
  CHECK(det_permutations(make_path(2)) == -1);
  CHECK(det_cycle_covers(make_path(2)) == -1);
  CHECK(det_permutations(make_complete(4)) == -3);
  CHECK(det_cycle_covers(make_complete(4)) == -3);
  CHECK(det_permutations(make_path(4, {1, 3, 2, 4})) == 1);
  CHECK(det_cycle_covers(make_path(4, {1, 3, 2, 4})) == 1);
  CHECK(det_permutations(make_edgeless(3)) == 0);
  CHECK(det_cycle_covers(make_edgeless(3)) == 0);
  CHECK(det_cycle_covers(disjoint_union(make_path(2), make_path(2))) == 1);
}

TEST_CASE("isolated vertices kill every cover") {
  CHECK(det_cycle_covers(disjoint_union(make_complete(3), make_edgeless(1))) ==
        0);
  CHECK(det_permutations(disjoint_union(make_complete(3), make_edgeless(1))) ==
        0);
  // Boundary vertex 4 loses its only partner.
  CHECK(det_cycle_covers(delete_vertices(make_identity(1), {1})) == 0);
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(det_permutations(make_complete(11)), std::invalid_argument);
  CHECK_THROWS_AS(det_cycle_covers(make_complete(11)), std::invalid_argument);
  CHECK_NOTHROW(det_cycle_covers(make_complete(10)));
}

TEST_CASE("agreement with exact elimination") {
  std::mt19937_64 rng(60901);
  const int densities[] = {200, 500, 800};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = random_int(rng, 1, 8);
    const Digraph g = random_digraph(rng, n, densities[trial % 3]);
    const mpz_class d = graph_det(g);
    CHECK(det_permutations(g) == d);
    CHECK(det_cycle_covers(g) == d);
  }
}
