#include <functional>
#include <set>

#include "support.hpp"

using namespace ehs;

namespace {

// Counts nonincreasing sequences in [0, N]^n by plain nesting.
long nested_count(int n, int N) {
  std::function<long(int, int)> rows = [&](int remaining, int upper) -> long {
    if (remaining == 0) return 1;
    long total = 0;
    for (int v = 0; v <= upper; ++v) total += rows(remaining - 1, v);
    return total;
  };
  return rows(n, N);
}

}  // namespace

TEST_CASE("enumeration") {
  const auto one_row = enumerate(1, 2);
  REQUIRE(one_row.size() == 3);
  CHECK(one_row[0] == Partition({2}, 2));
  CHECK(one_row[1] == Partition({1}, 2));
  CHECK(one_row[2] == Partition({0}, 2));

  const auto two_rows = enumerate(2, 1);
  REQUIRE(two_rows.size() == 3);
  CHECK(two_rows[0] == Partition({1, 1}, 1));
  CHECK(two_rows[1] == Partition({1, 0}, 1));
  CHECK(two_rows[2] == Partition({0, 0}, 1));

  CHECK(enumerate(3, 3).size() == 20);
  CHECK(enumerate(2, 0).size() == 1);

  for (int n = 1; n <= 6; ++n) {
    for (int N = 0; N <= 6; ++N) {
      const auto all = enumerate(n, N);
      CHECK(static_cast<long>(all.size()) == nested_count(n, N));
      CHECK(all.size() == binomial(n + N, n));
      CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    }
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition({3, 2, 0}, 3)) == Partition({2, 2, 1}, 3));
  CHECK(conjugate(Partition({3, 2, 0}, 4)) == Partition({2, 2, 1, 0}, 3));
  CHECK(conjugate(Partition({0, 0}, 2)) == Partition({0, 0}, 2));

  for (int n = 1; n <= 5; ++n) {
    for (int N = 1; N <= 5; ++N) {
      for (const auto& lambda : enumerate(n, N)) {
        const Partition dual = conjugate(lambda);
        CHECK(dual.length() == N);
        CHECK(dual.cap() == n);
        CHECK(dual.boxes() == lambda.boxes());
        CHECK(conjugate(dual) == lambda);
      }
    }
  }
}

TEST_CASE("addable boxes") {
  CHECK(addable_boxes(Partition({0, 0}, 2)) == std::vector<Box>{{1, 1}});
  CHECK(addable_boxes(Partition::full(3, 2)).empty());
  CHECK(addable_boxes(Partition({2, 1, 0}, 3)) == std::vector<Box>{{1, 3}, {2, 2}, {3, 1}});

  CHECK(add_box(Partition({2, 1, 0}, 3), Box{2, 2}) == Partition({2, 2, 0}, 3));
  CHECK_THROWS_AS(add_box(Partition({0, 0}, 2), Box{2, 1}), ConfigError);
}

TEST_CASE("every partition is reachable from zero by adding boxes") {
  for (int n = 1; n <= 4; ++n) {
    for (int N = 1; N <= 4; ++N) {
      std::set<Partition> reached{Partition::zero(n, N)};
      std::vector<Partition> frontier{Partition::zero(n, N)};
      while (!frontier.empty()) {
        const Partition lambda = frontier.back();
        frontier.pop_back();
        for (const Box& box : addable_boxes(lambda)) {
          const Partition next = add_box(lambda, box);
          CHECK(next.boxes() == lambda.boxes() + 1);
          if (reached.insert(next).second) frontier.push_back(next);
        }
      }
      CHECK(reached.size() == binomial(n + N, n));
    }
  }
}

TEST_CASE("partition values") {
  CHECK(Partition({3, 2, 0}, 4).render() == "λ=(3,2,0);n=3;N=4");
  CHECK(Partition({3, 2, 0}, 3) != Partition({3, 2, 0}, 4));
  CHECK(Partition::full(2, 3) == Partition({3, 3}, 3));
  CHECK(Partition({3, 2, 0}, 4).boxes() == 5);

  CHECK_THROWS_AS(Partition({1, 2}, 3), ConfigError);
  CHECK_THROWS_AS(Partition({4, 0}, 3), ConfigError);
  CHECK_THROWS_AS(Partition({0, -1}, 3), ConfigError);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, 0) == 1);
}
