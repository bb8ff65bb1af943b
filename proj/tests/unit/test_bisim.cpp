#include <doctest.h>

#include <algorithm>

#include "hda/bisim/bisim.hpp"
#include "hda/core/errors.hpp"
#include "hda/core/torus.hpp"
#include "hda/unfold/unfold.hpp"
#include "support.hpp"

using namespace hda;
using hda::test::fixture;

namespace {

Morphism by_name(const Hda& from, const Hda& to) {
  std::map<std::string, std::string> table;
  for (CubeId x = 0; x < from.size(); ++x) table.emplace(from.cubes.name(x), from.cubes.name(x));
  return morphism_from_names(from.cubes, to.cubes, table);
}

std::size_t oracle_depth(const Hda& X, const Hda& Y) { return std::max(*full_depth(X), *full_depth(Y)); }

}  // namespace

TEST_CASE("open map examples") {
  const Hda left = fixture("filled_square");
  const Hda right = fixture("hollow_square");
  CHECK(open_map_check(left, left, identity_morphism(left.cubes)).open);

  const auto inc = open_map_check(right, left, by_name(right, left));
  CHECK_FALSE(inc.open);
  REQUIRE(inc.counterexample);
  CHECK(right.cubes.name(inc.counterexample->x1) == "a");
  CHECK(left.cubes.name(inc.counterexample->y2) == "ab");
  CHECK(inc.counterexample->k == 1);

  const Unfolding U = unfold(right, 5);
  CHECK(open_map_check(U.tree, right, U.projection).open);
}

TEST_CASE("bisimilarity examples") {
  const Hda left = fixture("filled_square");
  const Hda right = fixture("hollow_square");
  const auto d = bisimilar(left, right);
  CHECK_FALSE(d.bisimilar);
  CHECK(d.witness.empty());
  REQUIRE(d.initial_defect);
  CHECK(d.initial_defect->kind == PairDefect::Kind::forth);
  CHECK(left.cubes.name(d.initial_defect->witness) == "a");
  CHECK(d.stats.deletions <= left.size() * right.size());

  const auto same = bisimilar(left, left);
  CHECK(same.bisimilar);
  CHECK(std::find(same.witness.begin(), same.witness.end(), CubePair{left.initial, left.initial}) !=
        same.witness.end());

  const auto cycles = bisimilar(fixture("two_cycle"), fixture("three_cycle"));
  CHECK(cycles.bisimilar);
  CHECK(cycles.stats.deletions == 0);
  CHECK(check_bisim_relation(fixture("two_cycle"), fixture("three_cycle"), cycles.witness).ok);

  CHECK(bisimilar(fixture("square_path"), fixture("square_path")).bisimilar);
}

TEST_CASE("labeled bisimilarity examples") {
  const Hda ab = fixture("ab_square");
  const Hda ac = fixture("ac_square");
  CHECK(bisimilar(ab, ac).bisimilar);
  CHECK_FALSE(labeled_bisimilar(ab, ac).bisimilar);
  CHECK(labeled_bisimilar(ab, ab).bisimilar);
  CHECK_THROWS_AS(labeled_bisimilar(ab, fixture("square_path")), ModelError);
  CHECK_THROWS_AS(labeled_bisimilar(ab, fixture("filled_square")), ModelError);  // events differ

  const auto hp = hp_bisimilar(ab, ac, true);
  CHECK_FALSE(hp.bisimilar);
  CHECK_FALSE(hp.justification.empty());
  CHECK(hp_bisimilar(fixture("two_cycle"), fixture("three_cycle")).bisimilar);
  CHECK_FALSE(hp_bisimilar(fixture("filled_square"), fixture("hollow_square")).bisimilar);
}

TEST_CASE("relation re-check rejects broken relations") {
  const Hda X = fixture("two_cycle");
  const Hda Y = fixture("three_cycle");
  const auto d = bisimilar(X, Y);
  REQUIRE(d.bisimilar);
  CHECK_FALSE(check_bisim_relation(X, Y, {}).ok);
  auto missing_edge = d.witness;
  missing_edge.erase(std::remove_if(missing_edge.begin(), missing_edge.end(),
                                    [&](const CubePair& p) { return X.cubes.dim(p.first) == 1; }),
                     missing_edge.end());
  CHECK_FALSE(check_bisim_relation(X, Y, missing_edge).ok);
  auto mixed = d.witness;
  mixed.emplace_back(X.cubes.at("x"), Y.cubes.at("f1"));
  CHECK_FALSE(check_bisim_relation(X, Y, mixed).ok);
}

TEST_CASE("oracle examples") {
  const auto fig1 = hp_oracle(fixture("filled_square"), fixture("hollow_square"), 5);
  CHECK(fig1.verdict == OracleVerdict::not_bisimilar);
  CHECK(fig1.exact);
  const auto same = hp_oracle(fixture("filled_square"), fixture("filled_square"), 5);
  CHECK(same.verdict == OracleVerdict::bisimilar);
  const auto cycles = hp_oracle(fixture("two_cycle"), fixture("three_cycle"), 6);
  CHECK(cycles.verdict == OracleVerdict::inconclusive);
  CHECK_FALSE(cycles.exact);
  CHECK(hp_oracle(fixture("ab_square"), fixture("ac_square"), 5, true).verdict == OracleVerdict::not_bisimilar);
  CHECK(hp_oracle(fixture("ab_square"), fixture("ac_square"), 5, false).verdict == OracleVerdict::bisimilar);
  CHECK(to_string(OracleVerdict::inconclusive) == "inconclusive");
}

TEST_CASE("decisions are symmetric and certified") {
  std::mt19937_64 rng(41);
  std::size_t yes = 0, no = 0;
  for (int round = 0; round < 80; ++round) {
    const bool labeled = round % 2 == 0;
    const auto opts = hda::test::small_options(round % 3 != 0, labeled);
    const Hda X = random_hda(rng, opts);
    const Hda Y = round % 4 == 0 ? random_hda(rng, opts) : hda::test::delete_maximal_cube(rng, X);
    const auto xy = labeled ? labeled_bisimilar(X, Y) : bisimilar(X, Y);
    const auto yx = labeled ? labeled_bisimilar(Y, X) : bisimilar(Y, X);
    CHECK(xy.bisimilar == yx.bisimilar);
    CHECK(xy.stats.deletions <= X.size() * Y.size());
    if (xy.bisimilar) {
      ++yes;
      CHECK(check_bisim_relation(X, Y, xy.witness, labeled).ok);
      std::vector<CubePair> flipped;
      for (auto [a, b] : xy.witness) flipped.emplace_back(b, a);
      std::sort(flipped.begin(), flipped.end());
      CHECK(flipped == yx.witness);
      const RelationSpan span = relation_span(X, Y, xy.witness);
      CHECK(check_pointed_morphism(span.relation, X, span.left).ok);
      CHECK(check_pointed_morphism(span.relation, Y, span.right).ok);
      CHECK(open_map_check(span.relation, X, span.left).open);
      CHECK(open_map_check(span.relation, Y, span.right).open);
    } else {
      ++no;
      CHECK(xy.initial_defect);
    }
  }
  CHECK(yes > 5);
  CHECK(no > 5);
}

TEST_CASE("isomorphic and padded copies are bisimilar") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 50; ++round) {
    const bool labeled = round % 2 == 0;
    const Hda X = random_hda(rng, hda::test::small_options(round % 3 != 0, labeled));
    auto decide = [&](const Hda& a, const Hda& b) { return labeled ? labeled_bisimilar(a, b) : bisimilar(a, b); };
    CHECK(decide(X, hda::test::shuffled_copy(rng, X)).bisimilar);
    CHECK(decide(X, hda::test::duplicate_maximal_cube(rng, X)).bisimilar);
    const Hda padded = hda::test::with_unreachable_part(X);
    const auto d = decide(X, padded);
    CHECK(d.bisimilar);
    CHECK(d.stats.universe >= decide(X, X).stats.universe);
  }
}

TEST_CASE("an HDA is bisimilar to its unfolding") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 40; ++round) {
    const bool labeled = round % 2 == 0;
    const Hda X = random_hda(rng, hda::test::small_options(true, labeled));
    const Unfolding U = unfold(X, *full_depth(X));
    CHECK(open_map_check(U.tree, X, U.projection).open);
    CHECK((labeled ? labeled_bisimilar(U.tree, X) : bisimilar(U.tree, X)).bisimilar);
  }
}

TEST_CASE("decision agrees with the unfolding oracle on acyclic pairs") {
  std::mt19937_64 rng(44);
  std::size_t agreed_true = 0, agreed_false = 0;
  for (int round = 0; round < 60; ++round) {
    const bool labeled = round % 2 == 0;
    auto opts = hda::test::small_options(true, labeled);
    opts.max_cubes = 20;
    const Hda X = random_hda(rng, opts);
    Hda Y;
    switch (round % 4) {
      case 0: Y = random_hda(rng, opts); break;
      case 1: Y = hda::test::delete_maximal_cube(rng, X); break;
      case 2: Y = hda::test::duplicate_maximal_cube(rng, X); break;
      default: Y = hda::test::shuffled_copy(rng, X); break;
    }
    const auto d = labeled ? labeled_bisimilar(X, Y) : bisimilar(X, Y);
    const auto o = hp_oracle(X, Y, oracle_depth(X, Y), labeled);
    REQUIRE(o.exact);
    CHECK((o.verdict == OracleVerdict::bisimilar) == d.bisimilar);
    (d.bisimilar ? agreed_true : agreed_false)++;
  }
  CHECK(agreed_true > 5);
  CHECK(agreed_false > 5);
}

TEST_CASE("torus against itself and a relabeled copy") {
  const Hda T = torus({"a", "b"}, 2);
  CHECK(labeled_bisimilar(T, T).bisimilar);
  const Hda U = torus({"a"}, 2);
  CHECK_THROWS_AS(labeled_bisimilar(T, U), ModelError);
  // Unlabeled, every cube of either torus can move along every coordinate.
  CHECK(bisimilar(T, U).bisimilar);
}
