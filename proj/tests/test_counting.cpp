#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "coxdepth/counting.hpp"
#include "coxdepth/stats.hpp"

using namespace coxdepth;

TEST_CASE("combinatorial helpers") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(catalan(4) == 14);
  CHECK(catalan(6) == 132);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(5) == 5);
  CHECK(fibonacci(11) == 89);
}

TEST_CASE("depth distributions") {
  CountTable b1 = depth_distribution(GroupContext(Family::B, 1));
  CHECK(b1.counts == std::map<int, std::uint64_t>{{0, 1}, {1, 1}});

  CountTable d4 = depth_distribution(GroupContext(Family::D, 4));
  CHECK(d4.counts.rbegin()->first == 8);
  CHECK(d4.counts.rbegin()->second == 2);
  CHECK(d4.total() == 192);

  CountTable b3 = depth_distribution(GroupContext(Family::B, 3));
  CHECK(b3.total() == 48);
  CHECK(b3.counts.rbegin()->first == 6);
  CHECK(b3.counts.rbegin()->second == 1);
}

TEST_CASE("depth equals length counts match the closed forms") {
  const std::uint64_t expected_b[] = {2, 5, 14, 42};
  for (int n = 1; n <= 4; ++n) {
    GroupContext ctx(Family::B, n);
    CHECK(count_depth_eq_length(ctx) == expected_b[n - 1]);
    CHECK(closed_form_depth_eq_length(ctx) == expected_b[n - 1]);
  }
  const std::uint64_t expected_d[] = {4, 14, 48};
  for (int n = 2; n <= 4; ++n) {
    GroupContext ctx(Family::D, n);
    CHECK(count_depth_eq_length(ctx) == expected_d[n - 2]);
    CHECK(closed_form_depth_eq_length(ctx) == expected_d[n - 2]);
  }
  CHECK_THROWS_AS(closed_form_depth_eq_length(GroupContext(Family::A, 3)), std::domain_error);
  CHECK_THROWS_AS(closed_form_depth_eq_length(GroupContext(Family::D, 1)), std::domain_error);
}

TEST_CASE("boolean counts match the closed forms") {
  const std::uint64_t expected_b[] = {2, 5, 13, 34};
  for (int n = 1; n <= 4; ++n) {
    GroupContext ctx(Family::B, n);
    CHECK(count_boolean(ctx) == expected_b[n - 1]);
    CHECK(closed_form_boolean(ctx) == expected_b[n - 1]);
  }
  // Two independent routes for type D: enumeration against the exact
  // quadratic-field evaluation.
  CHECK(count_boolean(GroupContext(Family::D, 4)) == closed_form_boolean(GroupContext(Family::D, 4)));
  CHECK_THROWS_AS(closed_form_boolean(GroupContext(Family::D, 3)), std::domain_error);
}

TEST_CASE("boolean-by-length counts") {
  CHECK(closed_form_boolean_by_length(GroupContext(Family::B, 3), 0) == 1);
  CHECK(closed_form_boolean_by_length(GroupContext(Family::B, 2), 1) == 2);
  CHECK(count_boolean_by_length(GroupContext(Family::B, 2), 1) == 2);
  CHECK(closed_form_boolean_by_length(GroupContext(Family::D, 1), 0) == 1);
  CHECK(closed_form_boolean_by_length(GroupContext(Family::D, 1), 1) == 0);
  CHECK(count_boolean_by_length(GroupContext(Family::D, 1), 0) == 1);

  for (Family family : {Family::B, Family::D}) {
    GroupContext ctx(family, family == Family::B ? 3 : 4);
    CountTable table = boolean_length_table(ctx);
    std::uint64_t sum = 0;
    int max_k = table.counts.empty() ? 0 : table.counts.rbegin()->first;
    for (int k = 0; k <= max_k; ++k) {
      std::uint64_t enumerated = table.counts.count(k) ? table.counts.at(k) : 0;
      CHECK(enumerated == closed_form_boolean_by_length(ctx, k));
      sum += enumerated;
    }
    CHECK(sum == count_boolean(ctx));
  }
}

TEST_CASE("shallow elements") {
  GroupContext b2(Family::B, 2);
  std::vector<SignedPermutation> shallow = shallow_elements(b2);
  CHECK(shallow.size() == 8);  // every element of B_2 is shallow

  GroupContext b3(Family::B, 3);
  std::vector<SignedPermutation> s3 = shallow_elements(b3);
  CHECK(std::binary_search(s3.begin(), s3.end(), SignedPermutation::identity(3)));
  for (const Reflection& t : all_reflections(b3))
    CHECK(std::binary_search(s3.begin(), s3.end(), t.as_permutation(3)));
}

TEST_CASE("csv output") {
  std::ostringstream out;
  write_csv({depth_distribution(GroupContext(Family::B, 1))}, out);
  CHECK(out.str() == "family,n,statistic,key,count,source\nB,1,depth,0,1,enumerated\nB,1,depth,1,1,enumerated\n");
}
