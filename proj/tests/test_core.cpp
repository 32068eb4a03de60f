#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "coxdepth/group.hpp"

using namespace coxdepth;

namespace {

SignedPermutation sp(std::vector<int> w) { return SignedPermutation(std::move(w)); }

// Test-only oracle: shortest-word distance by breadth-first search over the
// simple generators, independent of everything in the library except the
// generator action itself.
int bfs_word_length(const SignedPermutation& target, const GroupContext& ctx) {
  std::map<SignedPermutation, int> dist;
  SignedPermutation e = SignedPermutation::identity(ctx.rank);
  dist.emplace(e, 0);
  std::vector<SignedPermutation> frontier{e};
  const int lo = ctx.family == Family::A ? 1 : 0;
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& u : frontier) {
      for (int s = lo; s < lo + ctx.generator_count(); ++s) {
        SignedPermutation v = apply_simple(u, s, ctx.family);
        if (dist.emplace(v, dist.at(u) + 1).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return dist.at(target);
}

}  // namespace

TEST_CASE("context basics") {
  CHECK(GroupContext(Family::A, 4).generator_count() == 3);
  CHECK(GroupContext(Family::B, 4).generator_count() == 4);
  CHECK(GroupContext(Family::D, 4).generator_count() == 4);
  CHECK(GroupContext(Family::D, 1).generator_count() == 0);
  CHECK(GroupContext(Family::A, 4).order() == 24);
  CHECK(GroupContext(Family::B, 2).order() == 8);
  CHECK(GroupContext(Family::D, 3).order() == 24);
  CHECK_THROWS_AS(GroupContext(Family::B, 0), std::invalid_argument);
}

TEST_CASE("parse accepts valid windows and rejects bad ones") {
  GroupContext b3(Family::B, 3);
  SignedPermutation w = parse_window("-2,1,3", b3);
  CHECK(w(1) == -2);
  CHECK(w(2) == 1);
  CHECK(w(3) == 3);
  CHECK(w(-1) == 2);

  CHECK(parse_window("1,2,3", b3) == SignedPermutation::identity(3));
  CHECK(parse_window("1,2,3", GroupContext(Family::A, 3)) == SignedPermutation::identity(3));

  CHECK_THROWS_AS(parse_window("-2,1,3", GroupContext(Family::D, 3)), std::domain_error);
  CHECK_THROWS_AS(parse_window("-2,1,3", GroupContext(Family::A, 3)), std::domain_error);
  CHECK_THROWS_AS(parse_window("1,2", b3), std::invalid_argument);
  CHECK_THROWS_AS(parse_window("1,1,3", b3), std::invalid_argument);
  CHECK_THROWS_AS(parse_window("0,1,2", b3), std::invalid_argument);
  CHECK_THROWS_AS(parse_window("1,4,2", b3), std::invalid_argument);
  CHECK_THROWS_AS(parse_window("1,x,3", b3), std::invalid_argument);
  CHECK_THROWS_AS(parse_window("", GroupContext(Family::B, 1)), std::invalid_argument);
}

TEST_CASE("compose follows the sign rule") {
  SignedPermutation u = sp({-2, 1});
  SignedPermutation v = sp({2, 1});
  CHECK(compose(u, v) == sp({1, -2}));

  GroupContext b3(Family::B, 3);
  for_each_element(b3, [&](const SignedPermutation& w) {
    CHECK(compose(w, SignedPermutation::identity(3)) == w);
    CHECK(compose(w, w.inverse()) == SignedPermutation::identity(3));
    CHECK(compose(w.inverse(), w) == SignedPermutation::identity(3));
    CHECK(w.inverse().inverse() == w);
  });
  CHECK_THROWS_AS(compose(u, SignedPermutation::identity(3)), std::invalid_argument);
}

TEST_CASE("right multiplication by reflections acts on the window") {
  SignedPermutation w = sp({-3, 1, 4, 2});
  CHECK(apply_reflection(w, Reflection::swap(1, 2)) == sp({1, -3, 4, 2}));
  CHECK(apply_reflection(w, Reflection::bar_swap(1, 2)) == sp({-1, 3, 4, 2}));
  CHECK(apply_reflection(sp({3, -1, 4, 2}), Reflection::bar_fix(2)) == sp({3, 1, 4, 2}));
}

TEST_CASE("reflections are involutions") {
  GroupContext b3(Family::B, 3);
  auto reflections = all_reflections(b3);
  CHECK(reflections.size() == 9);  // n^2
  for_each_element(b3, [&](const SignedPermutation& w) {
    for (const Reflection& t : reflections)
      CHECK(apply_reflection(apply_reflection(w, t), t) == w);
  });
  CHECK(all_reflections(GroupContext(Family::D, 3)).size() == 6);   // n^2 - n
  CHECK(all_reflections(GroupContext(Family::A, 4)).size() == 6);   // n(n-1)/2
}

TEST_CASE("reflection legality per family") {
  CHECK(Reflection::bar_fix(2).legal_in(GroupContext(Family::B, 3)));
  CHECK_FALSE(Reflection::bar_fix(2).legal_in(GroupContext(Family::D, 3)));
  CHECK_FALSE(Reflection::bar_swap(1, 2).legal_in(GroupContext(Family::A, 3)));
  CHECK_FALSE(Reflection::swap(1, 4).legal_in(GroupContext(Family::B, 3)));
  CHECK_THROWS_AS(reflection_word(Reflection::bar_fix(1), GroupContext(Family::D, 2)),
                  std::domain_error);
}

TEST_CASE("reflection words evaluate back to the reflection") {
  GroupContext b2(Family::B, 2);
  CHECK(reflection_word(Reflection::swap(1, 2), b2) == SimpleWord{1});

  // l_S(t_{-1,2}) = 3 in B_2, confirmed against the BFS oracle.
  SignedPermutation bar12 = Reflection::bar_swap(1, 2).as_permutation(2);
  CHECK(bar12 == sp({-2, -1}));
  CHECK(bfs_word_length(bar12, b2) == 3);
  SimpleWord word = reflection_word(Reflection::bar_swap(1, 2), b2);
  CHECK(word.size() == 3);
  CHECK(evaluate_word(word, b2) == bar12);

  GroupContext d2(Family::D, 2);
  CHECK(reflection_word(Reflection::bar_swap(1, 2), d2) == SimpleWord{0});

  for (Family family : {Family::A, Family::B, Family::D}) {
    GroupContext ctx(family, 4);
    for (const Reflection& t : all_reflections(ctx)) {
      SimpleWord tw = reflection_word(t, ctx);
      SignedPermutation elem = t.as_permutation(4);
      CHECK(evaluate_word(tw, ctx) == elem);
      CHECK(static_cast<int>(tw.size()) == bfs_word_length(elem, ctx));
    }
  }
}

TEST_CASE("reduced words are reduced") {
  for (Family family : {Family::A, Family::B, Family::D}) {
    GroupContext ctx(family, 3);
    for_each_element(ctx, [&](const SignedPermutation& w) {
      SimpleWord word = reduced_word(w, ctx);
      CHECK(evaluate_word(word, ctx) == w);
      CHECK(static_cast<int>(word.size()) == bfs_word_length(w, ctx));
    });
  }
}

TEST_CASE("enumeration sizes and order") {
  CHECK(all_elements(GroupContext(Family::B, 2)).size() == 8);
  CHECK(all_elements(GroupContext(Family::D, 3)).size() == 24);
  CHECK(all_elements(GroupContext(Family::A, 4)).size() == 24);
  CHECK(all_elements(GroupContext(Family::D, 1)).size() == 1);

  std::vector<SignedPermutation> b2 = all_elements(GroupContext(Family::B, 2));
  std::vector<SignedPermutation> expected = {
      sp({-2, -1}), sp({-2, 1}), sp({-1, -2}), sp({-1, 2}),
      sp({1, -2}),  sp({1, 2}),  sp({2, -1}),  sp({2, 1}),
  };
  CHECK(b2 == expected);

  for (int n = 1; n <= 6; ++n) {
    GroupContext ctx(Family::B, n);
    if (ctx.order() > 100000) break;
    std::set<SignedPermutation> seen;
    for_each_element(ctx, [&](const SignedPermutation& w) { seen.insert(w); });
    CHECK(seen.size() == ctx.order());
  }

  CHECK_THROWS_AS(all_elements(GroupContext(Family::B, 12)), std::length_error);
}

TEST_CASE("format is the inverse of parse") {
  GroupContext b3(Family::B, 3);
  CHECK(format_window(sp({-2, 1, 3})) == "-2,1,3");
  for_each_element(b3, [&](const SignedPermutation& w) {
    CHECK(parse_window(format_window(w), b3) == w);
  });
}

TEST_CASE("window codes are distinct") {
  std::set<std::uint64_t> codes;
  GroupContext b4(Family::B, 4);
  for_each_element(b4, [&](const SignedPermutation& w) { codes.insert(window_code(w)); });
  CHECK(codes.size() == b4.order());
}
