//- Partition construction, enumeration order and coarse-graining.
#include <doctest.h>

#include "gme/errors.hpp"
#include "gme/partition.hpp"
#include "gme/state.hpp"
#include "test_helpers.hpp"

using namespace gme;

TEST_CASE("make_partition canonicalizes and validates") {
  Partition p = make_partition({{2, 0}, {1}});
  CHECK(canonical_label(p) == "AC|B");
  CHECK(p.k() == 2);
  CHECK(p.num_parties() == 3);

  CHECK_THROWS_AS(make_partition({{0, 1}, {1, 2}}), PartitionError);  // overlap
  CHECK_THROWS_AS(make_partition({{0}, {2}}), PartitionError);        // gap
  CHECK_THROWS_AS(make_partition({{0}, {}}), PartitionError);         // empty block
}

TEST_CASE("enumerate_partitions fixed orders") {
  //- Canonical labels list the block holding party A first, so the
  //- "B vs rest" cut renders as AC|B.
  auto three = enumerate_partitions(3, 2);
  REQUIRE(three.size() == 3);
  CHECK(canonical_label(three[0]) == "A|BC");
  CHECK(canonical_label(three[1]) == "AC|B");
  CHECK(three[1].blocks[1] == std::vector<int>{1});  // singleton side is B
  CHECK(canonical_label(three[2]) == "AB|C");

  auto four2 = enumerate_partitions(4, 2);
  REQUIRE(four2.size() == 7);
  const char* expected2[] = {"AB|CD", "A|BCD", "AC|BD", "ABC|D",
                             "AD|BC", "ACD|B", "ABD|C"};
  for (size_t i = 0; i < four2.size(); ++i) {
    CHECK(canonical_label(four2[i]) == expected2[i]);
  }

  auto four3 = enumerate_partitions(4, 3);
  REQUIRE(four3.size() == 6);
  const char* expected3[] = {"A|B|CD", "A|BC|D", "AC|B|D",
                             "AB|C|D", "AD|B|C", "A|BD|C"};
  for (size_t i = 0; i < four3.size(); ++i) {
    CHECK(canonical_label(four3[i]) == expected3[i]);
  }
}

TEST_CASE("enumerate_partitions counts follow Stirling numbers") {
  CHECK(enumerate_partitions(4, 2).size() == 7);
  CHECK(enumerate_partitions(4, 3).size() == 6);
  CHECK(enumerate_partitions(5, 2).size() == 15);   // 2^4 - 1
  CHECK(enumerate_partitions(6, 2).size() == 31);   // 2^5 - 1
  CHECK(enumerate_partitions(5, 3).size() == 25);
  CHECK(enumerate_partitions(6, 3).size() == 90);
  CHECK(enumerate_partitions(6, 4).size() == 65);
  CHECK(enumerate_partitions(4, 4).size() == 1);
  CHECK_THROWS_AS(enumerate_partitions(3, 1), PartitionError);
  CHECK_THROWS_AS(enumerate_partitions(3, 4), PartitionError);
}

TEST_CASE("parse_partition grammar") {
  CHECK(canonical_label(parse_partition("AC|B|D", 4)) == "AC|B|D");
  CHECK(canonical_label(parse_partition("bd | ac", 4)) == "AC|BD");
  CHECK(canonical_label(parse_partition("CB|A", 3)) == "A|BC");
  CHECK_THROWS_AS(parse_partition("A|B", 3), PartitionError);      // missing party
  CHECK_THROWS_AS(parse_partition("A|AB", 2), PartitionError);     // duplicate
  CHECK_THROWS_AS(parse_partition("A|BE", 4), PartitionError);     // out of range
  CHECK_THROWS_AS(parse_partition("", 2), PartitionError);
}

TEST_CASE("canonical_label honors custom party labels") {
  Partition p = make_partition({{0, 2}, {1}, {3}});
  CHECK(canonical_label(p) == "AC|B|D");
  CHECK(canonical_label(p, {"P", "Q", "R", "S"}) == "PR|Q|S");
}

TEST_CASE("coarse_grain merges blocks into parties") {
  PureState ghz4 = named_state(NamedState::GHZ4);
  PureState merged = coarse_grain(ghz4, make_partition({{0, 1}, {2, 3}}));
  REQUIRE(merged.num_parties() == 2);
  CHECK(merged.dims[0] == 4);
  CHECK(merged.dims[1] == 4);
  DensityMatrix half = partial_trace(density_of(merged), {0});
  CHECK(purity(half) == doctest::Approx(0.5).epsilon(1e-12));

  //- Singleton blocks leave the state untouched.
  PureState same = coarse_grain(ghz4, make_partition({{0}, {1}, {2}, {3}}));
  CHECK((same.amplitudes - ghz4.amplitudes).norm() < 1e-15);
}

TEST_CASE("coarse_grain commutes with partial_trace") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 5; ++rep) {
    PureState psi = haar_random_pure({2, 2, 2, 2}, rng);
    Partition cut = make_partition({{0, 1}, {2, 3}});
    DensityMatrix direct = partial_trace(density_of(psi), {0, 1});
    DensityMatrix merged = partial_trace(density_of(coarse_grain(psi, cut)), {0});
    CHECK((direct.matrix - merged.matrix).norm() < 1e-12);
  }
}
