#include "schubcell/homology.hpp"
#include "schubcell/poset.hpp"

#include <doctest.h>

using namespace schubcell;

TEST_CASE("Betti numbers of small complexes") {
  const SimplicialComplex triangle_boundary({{0, 1}, {1, 2}, {0, 2}});
  CHECK(trimmed(betti(triangle_boundary)) == BettiVector{1, 1});
  const SimplicialComplex triangle({{0, 1, 2}});
  CHECK(betti(triangle) == BettiVector{1, 0, 0});
  const SimplicialComplex two_points({{0}, {1}});
  CHECK(betti(two_points) == BettiVector{2});
  const SimplicialComplex tetra_boundary({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(trimmed(betti(tetra_boundary)) == BettiVector{1, 0, 1});
  CHECK(betti(SimplicialComplex{}).empty());
}

TEST_CASE("facet normalization") {
  const SimplicialComplex k({{2, 1, 0}, {0, 1}, {0, 1, 2}});
  CHECK(k.facets().size() == 1);
  CHECK(k.facets().front() == SimplicialComplex::Simplex{0, 1, 2});
  CHECK(k.face_counts() == std::vector<std::size_t>{3, 3, 1});
  CHECK(k.vertex_count() == 3);
}

TEST_CASE("cones are acyclic") {
  // Cone over a circle.
  const SimplicialComplex cone({{0, 1, 9}, {1, 2, 9}, {2, 3, 9}, {0, 3, 9}});
  CHECK(has_point_homology(betti(cone)));
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic({10, 16, 8, 1}) == 1);
  CHECK(euler_characteristic({1}) == 1);
  CHECK(euler_characteristic({4, 4}) == 0);
  const SimplicialComplex k({{0, 1, 2}, {2, 3}, {4}});
  long chi = 0;
  const auto b = betti(k);
  for (std::size_t i = 0; i < b.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long>(b[i]);
  CHECK(chi == euler_characteristic(k.face_counts()));
  CHECK(boundary_ranks(k).size() == 2);
}

TEST_CASE("sphere and point patterns") {
  CHECK(sphere_betti(-1).empty());
  CHECK(sphere_betti(0) == BettiVector{2});
  CHECK(sphere_betti(2) == BettiVector{1, 0, 1});
  CHECK(has_sphere_homology({1, 0, 1}, 2));
  CHECK(has_sphere_homology({1, 0, 1, 0}, 2));
  CHECK_FALSE(has_sphere_homology({1, 0, 1}, 1));
  CHECK(has_sphere_homology({}, -1));
  CHECK(has_point_homology({1, 0, 0}));
  CHECK_FALSE(has_point_homology({2}));
  CHECK(trimmed({1, 0, 0}) == BettiVector{1});
}
