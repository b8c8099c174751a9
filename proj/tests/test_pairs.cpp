#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "joindet/int_matrix.hpp"
#include "joindet/pairs.hpp"
#include "test_helpers.hpp"

using namespace joindet;

TEST_CASE("pair counts are central binomial coefficients") {
  const std::size_t expected[] = {2, 6, 20, 70, 252};
  for (int arity = 1; arity <= 5; ++arity)
    CHECK(enumerate_pairs(arity).size() == expected[arity - 1]);
  CHECK_THROWS_AS(enumerate_pairs(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_pairs(13), std::invalid_argument);
}

TEST_CASE("canonical tables for small arity") {
  const auto t1 = enumerate_pairs(1);
  REQUIRE(t1.size() == 2);
  CHECK(t1[0] == ModPair{});
  CHECK(t1[1] == ModPair{{1}, {}});

  const auto t2 = enumerate_pairs(2);
  REQUIRE(t2.size() == 6);
  CHECK(t2[0] == ModPair{});
  CHECK(t2[1] == ModPair{{1}, {}});
  CHECK(t2[2] == ModPair{{2}, {}});
  CHECK(t2[3] == ModPair{{1, 2}, {}});
  CHECK(t2[4] == ModPair{{}, {{2, 1}}});
  CHECK(t2[5] == ModPair{{}, {{1, 2}}});
}

TEST_CASE("enumeration matches an independent brute force") {
  for (int arity = 1; arity <= 4; ++arity) {
    const auto table = enumerate_pairs(arity);
    std::set<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>>
        normalized;
    for (const ModPair& p : table) {
      auto handles = p.handles;
      std::sort(handles.begin(), handles.end());
      normalized.emplace(p.removals, handles);
    }
    CHECK(normalized.size() == table.size());
    CHECK(normalized == testutil::brute_force_pairs(arity));
  }
}

TEST_CASE("allowability predicate") {
  CHECK(is_allowable({{1, 2}, {3, 4}}, 4, {}));
  CHECK(!is_allowable({{1, 4}, {2, 3}}, 4, {}));
  CHECK(!is_allowable({{1, 2}, {2, 3}}, 3, {}));
  CHECK(is_allowable({}, 1, {1}));
  CHECK(!is_allowable({{1, 2}}, 2, {2}));
  CHECK(!is_allowable({{1, 5}}, 4, {}));
  CHECK(!is_allowable({{1, 1}}, 2, {}));
}

TEST_CASE("conjugation") {
  const ModPair p{{4}, {{1, 3}, {2, 5}}};
  const ModPair expected{{-4}, {{-3, -1}, {-5, -2}}};
  CHECK(conjugate_pair(p) == expected);
  CHECK(conjugate_pair(ModPair{}) == ModPair{});
  for (const ModPair& q : enumerate_pairs(3))
    CHECK(conjugate_pair(conjugate_pair(q)) == q);
}

TEST_CASE("pair signs and the sign matrix") {
  CHECK(pair_sign(ModPair{}) == 1);
  CHECK(pair_sign(ModPair{{1}, {}}) == -1);
  CHECK(pair_sign(ModPair{{1, 2}, {}}) == 1);
  CHECK(pair_sign(ModPair{{}, {{2, 1}}}) == -1);

  CHECK(build_sign_matrix(1) == IntMatrix::diagonal({1, -1}));
  CHECK(build_sign_matrix(2) == IntMatrix::diagonal({1, -1, -1, 1, -1, -1}));
  for (int arity = 1; arity <= 4; ++arity) {
    const IntMatrix e = build_sign_matrix(arity);
    CHECK(mat_mul(e, e) == IntMatrix::identity(e.rows()));
  }
}

TEST_CASE("pair formatting") {
  CHECK(format_pair(ModPair{}) == "(\xE2\x88\x85,\xE2\x88\x85)");
  CHECK(format_pair(ModPair{{1}, {}}) == "({1},\xE2\x88\x85)");
  CHECK(format_pair(ModPair{{}, {{2, 1}}}) == "(\xE2\x88\x85,{[2,1]})");
  CHECK(format_pair(ModPair{{1, 2}, {}}) == "({1,2},\xE2\x88\x85)");
  CHECK(format_pair_sign(ModPair{}) == "+1");
  CHECK(format_pair_sign(ModPair{{1}, {}}) == "\xE2\x88\x92"
                                              "1");
}

TEST_CASE("modification application") {
  const Digraph p4t = make_path(4, {1, 3, 2, 4});
  CHECK(apply_modification(p4t, ModPair{}, ModPair{}) == p4t);

  // Removing label 1 directly and label 3 (= -2 resolved) through the
  // conjugate slot leaves a P2.
  const Digraph cut =
      apply_modification(p4t, ModPair{{1}, {}}, ModPair{{2}, {}});
  CHECK(graph_det(cut) == -1);

  CHECK(apply_modification(make_complete(5), ModPair{}, ModPair{{1}, {}}) ==
        make_complete(4));

  // Handles from both slots: direct ones first, then conjugated ones,
  // all anchored to the original labels.
  const Digraph g = make_path(6);
  const Digraph mod = apply_modification(g, ModPair{{}, {{1, 2}}},
                                         ModPair{{}, {{1, 2}}});
  CHECK(mod.order() == 8);
  CHECK(mod.has_edge(1, 7));
  CHECK(mod.has_edge(7, 2));
  // conjugate of [1,2] is [-2,-1]: source 5, target 6
  CHECK(mod.has_edge(5, 8));
  CHECK(mod.has_edge(8, 6));

  // Below order 2j the two removal sets can collide; that is a
  // precondition violation.
  CHECK_THROWS_AS(apply_modification(make_path(2), ModPair{{1}, {}},
                                     ModPair{{2}, {}}),
                  std::invalid_argument);
}
