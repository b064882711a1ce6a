#include "helpers.hpp"

#include "schubcell/poset.hpp"
#include "schubcell/tnn.hpp"

#include <doctest.h>

using namespace schubcell;

namespace {

GradedPoset boolean_lattice(std::size_t n) {
  std::vector<std::string> labels;
  for (CoordSet s = 0; s <= full_set(n); ++s) labels.push_back(set_label(s));
  return GradedPoset::from_order(labels, [](std::size_t a, std::size_t b) {
    return is_subset(static_cast<CoordSet>(a), static_cast<CoordSet>(b));
  });
}

GradedPoset chain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GradedPoset::from_order(labels, [](std::size_t a, std::size_t b) { return a <= b; });
}

GradedPoset antichain(std::size_t n) {
  std::vector<std::string> labels(n, "x");
  return GradedPoset::from_order(labels, [](std::size_t a, std::size_t b) { return a == b; });
}

}  // namespace

TEST_CASE("from_order builds covers and ranks") {
  const auto b2 = boolean_lattice(2);
  CHECK(b2.size() == 4);
  CHECK(b2.covers().size() == 4);
  CHECK(b2.rank(3) == 2);
  CHECK(b2.is_graded());
  CHECK(b2.minimum() == 0u);
  CHECK(b2.maximum() == 3u);
  CHECK(b2.interval(0, 3).size() == 4);
  CHECK(b2.strict_lower_set(3).size() == 3);
  CHECK(b2.upper_covers(0).size() == 2);
  CHECK(b2.lower_covers(3).size() == 2);
}

TEST_CASE("from_order rejects non-orders") {
  std::vector<std::string> labels = {"a", "b"};
  CHECK_THROWS_AS(GradedPoset::from_order(labels, [](std::size_t, std::size_t) { return true; }),
                  std::invalid_argument);
  std::vector<std::string> three = {"a", "b", "c"};
  // a < b < c without a < c
  CHECK_THROWS_AS(GradedPoset::from_order(three,
                                          [](std::size_t x, std::size_t y) {
                                            return x == y || (x == 0 && y == 1) || (x == 1 && y == 2);
                                          }),
                  std::invalid_argument);
}

TEST_CASE("is_thin") {
  CHECK(is_thin(boolean_lattice(3)).thin);
  const auto m = from_subspace(testing::r5_example());
  const auto flats = flat_lattice(m);
  const auto result = is_thin(flats);
  CHECK_FALSE(result.thin);
  REQUIRE(result.witness);
  CHECK(flats.label(result.witness->first) == "{}");
  CHECK(flats.label(result.witness->second) == "{1,2,3}");
  CHECK(result.witness_size == 5);
  CHECK(is_thin(las_vergnas_lattice(m)).thin);

  // 0 < a < b < 1 next to 0 < c < 1.
  const auto ungraded = GradedPoset::from_order({"0", "a", "b", "c", "1"}, [](std::size_t x, std::size_t y) {
    return x == y || x == 0 || y == 4 || (x == 1 && y == 2);
  });
  CHECK_FALSE(ungraded.is_graded());
  CHECK_THROWS_AS(is_thin(ungraded), std::domain_error);
}

TEST_CASE("opposite") {
  const auto m = from_subspace(testing::r5_example());
  for (const auto& p : {flat_lattice(m), las_vergnas_lattice(m), boolean_lattice(3)}) {
    CHECK(p.opposite().opposite() == p);
    CHECK(is_thin(p).thin == is_thin(p.opposite()).thin);
  }
}

TEST_CASE("interval posets") {
  const auto m = from_subspace(testing::plane_three());
  const auto ivs = interval_poset(las_vergnas_lattice(m));
  CHECK(ivs.poset.size() == 9);
  std::vector<std::size_t> by_rank(3, 0);
  for (std::size_t i = 0; i < ivs.poset.size(); ++i) ++by_rank[ivs.poset.rank(i)];
  CHECK(by_rank == std::vector<std::size_t>{4, 4, 1});

  CHECK(interval_poset(boolean_lattice(3)).poset.size() == 27);

  const auto big = interval_poset(las_vergnas_lattice(from_subspace(testing::r5_example())));
  std::vector<std::size_t> r5(4, 0);
  for (std::size_t i = 0; i < big.poset.size(); ++i) ++r5[big.poset.rank(i)];
  CHECK(r5 == std::vector<std::size_t>{10, 16, 8, 1});
  CHECK(is_thin(big.poset).thin);
}

TEST_CASE("covector poset of the plane") {
  const auto p = covector_poset(from_subspace(testing::plane_three()));
  CHECK(p.size() == 13);
  CHECK(p.max_rank() == 2);
  CHECK(is_thin(p.with_top("top")).thin);
}

TEST_CASE("order complexes") {
  const auto c = order_complex(chain(3));
  CHECK(c.facets().size() == 1);
  CHECK(c.dimension() == 2);
  const auto a = order_complex(antichain(3));
  CHECK(a.facets().size() == 3);
  CHECK(a.dimension() == 0);

  const auto b3 = boolean_lattice(3);
  std::vector<std::size_t> proper;
  for (std::size_t i = 1; i + 1 < b3.size(); ++i) proper.push_back(i);
  const auto hexagon = order_complex(b3.subposet(proper));
  CHECK(hexagon.face_counts() == std::vector<std::size_t>{6, 6});
  CHECK(trimmed(betti(hexagon)) == BettiVector{1, 1});
  CHECK(order_complex_betti(b3.subposet(proper)) == betti(hexagon));
  CHECK(order_complex_betti(antichain(3)) == BettiVector{3});
  CHECK(order_complex_betti(b3) == BettiVector{1, 0, 0, 0});
  CHECK(order_complex_betti(b3.subposet({})).empty());

  const auto counts = chain_counts(b3);
  CHECK(euler_characteristic(counts) == euler_characteristic(order_complex(b3).face_counts()));
}

TEST_CASE("dot export is deterministic") {
  const auto b2 = boolean_lattice(2);
  const auto dot = b2.to_dot("b2");
  CHECK(dot == boolean_lattice(2).to_dot("b2"));
  CHECK(dot.find("digraph \"b2\"") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
