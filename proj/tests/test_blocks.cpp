#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxdepth/blocks.hpp"

using namespace coxdepth;

namespace {
SignedPermutation sp(std::vector<int> w) { return SignedPermutation(std::move(w)); }
}

TEST_CASE("direct sum shifts the second summand") {
  CHECK(direct_sum(sp({1}), sp({1})) == sp({1, 2}));
  CHECK(direct_sum(sp({4, -3, 1, -2}), sp({3, 1, -2})) == sp({4, -3, 1, -2, 7, 5, -6}));
  CHECK(direct_sum(sp({-2, 1}), sp({-1})) == sp({-2, 1, -3}));
}

TEST_CASE("type B decomposition") {
  BlockDecomposition dec = b_decompose(sp({4, -3, 1, -2, 7, 5, -6, 9, -8}));
  CHECK(dec.cuts == std::vector<int>{4, 7, 9});
  CHECK(dec.block_count() == 3);
  CHECK(extract_block(sp({4, -3, 1, -2, 7, 5, -6, 9, -8}), 5, 7) == sp({3, 1, -2}));
  CHECK(extract_block(sp({4, -3, 1, -2, 7, 5, -6, 9, -8}), 8, 9) == sp({2, -1}));

  CHECK(b_decompose(sp({-8, 1, 9, 3, 5, 2, -6, 4, 7})).block_count() == 1);

  BlockDecomposition id5 = b_decompose(SignedPermutation::identity(5));
  CHECK(id5.block_count() == 5);
  CHECK(id5.cuts == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("B-oddness") {
  CHECK(oddness_b(sp({4, -3, 1, -2, 7, 5, -6, 9, -8})) == 2);
  CHECK(oddness_b(sp({-1, -2, -3, -4})) == 4);
  CHECK(oddness_b(SignedPermutation::identity(4)) == 0);
}

TEST_CASE("type D decomposition") {
  SignedPermutation w = sp({-2, 1, 3, 4, -5, -7, -8, 6});
  BlockDecomposition dec = d_decompose(w);
  CHECK(dec.cuts == std::vector<int>{5, 8});
  CHECK(extract_block(w, 1, 5) == sp({-2, 1, 3, 4, -5}));
  CHECK(extract_block(w, 6, 8) == sp({-2, -3, 1}));

  CHECK(d_decompose(SignedPermutation::identity(4)).block_count() == 4);
  CHECK(d_decompose(sp({-2, -1})).block_count() == 1);
  CHECK_THROWS_AS(d_decompose(sp({-2, 1})), std::domain_error);
}

TEST_CASE("D-oddness") {
  CHECK(oddness_d(sp({-2, 1, 3, 4, -5, -7, -8, 6})) == 3);
  CHECK(oddness_d(sp({-1, 2, 3, 4, -5})) == 4);  // the oddest element of D_5
  CHECK(oddness_d(SignedPermutation::identity(4)) == 0);
}

TEST_CASE("decomposition round trip and parity structure") {
  for (Family family : {Family::B, Family::D}) {
    GroupContext ctx(family, 6);
    for_each_element(ctx, [&](const SignedPermutation& w) {
      BlockDecomposition dec = family == Family::B ? b_decompose(w) : d_decompose(w);
      SignedPermutation sum = extract_block(w, dec.block_begin(0), dec.block_end(0));
      for (int b = 1; b < dec.block_count(); ++b)
        sum = direct_sum(sum, extract_block(w, dec.block_begin(b), dec.block_end(b)));
      CHECK(sum == w);
    });
  }

  // D-blocks with several B-sub-blocks start and end with odd ones.
  GroupContext d6(Family::D, 6);
  for_each_element(d6, [&](const SignedPermutation& w) {
    BlockDecomposition b = b_decompose(w);
    BlockDecomposition d = d_decompose(w);
    CHECK(2 * oddness_d(w) >= oddness_b(w));
    std::size_t bi = 0;
    for (int di = 0; di < d.block_count(); ++di) {
      std::vector<bool> parities;
      while (bi < b.cuts.size() && b.cuts[bi] <= d.cuts[static_cast<std::size_t>(di)])
        parities.push_back(b.odd_block[bi++]);
      if (parities.size() == 1) {
        CHECK_FALSE(parities.front());
      } else {
        CHECK(parities.front());
        CHECK(parities.back());
        for (std::size_t m = 1; m + 1 < parities.size(); ++m) CHECK_FALSE(parities[m]);
      }
    }
  });
}

TEST_CASE("oddness is additive over direct sums") {
  std::vector<SignedPermutation> b2 = all_elements(GroupContext(Family::B, 2));
  for (const auto& u : b2)
    for (const auto& v : b2)
      CHECK(oddness_b(direct_sum(u, v)) == oddness_b(u) + oddness_b(v));

  std::vector<SignedPermutation> d2 = all_elements(GroupContext(Family::D, 2));
  for (const auto& u : d2)
    for (const auto& v : d2)
      CHECK(oddness_d(direct_sum(u, v)) == oddness_d(u) + oddness_d(v));
}
