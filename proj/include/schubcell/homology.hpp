#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace schubcell {

/// A finite simplicial complex given by its facets; all faces are implied.
class SimplicialComplex {
 public:
  using Simplex = std::vector<std::uint32_t>;

  SimplicialComplex() = default;
  /// Sorts each facet, removes duplicates and facets contained in other facets.
  explicit SimplicialComplex(std::vector<Simplex> facets);
  /// Skips the containment filter; no facet may lie inside another (chains of
  /// an order complex, for instance).
  static SimplicialComplex from_maximal(std::vector<Simplex> facets);

  const std::vector<Simplex>& facets() const { return facets_; }
  /// -1 for the empty complex.
  int dimension() const;
  std::size_t vertex_count() const;

  /// faces()[k] lists every k-simplex in lexicographic order.
  std::vector<std::vector<Simplex>> faces() const;
  std::vector<std::size_t> face_counts() const;

 private:
  std::vector<Simplex> facets_;
};

/// b_0 .. b_dim with rational coefficients; empty for the empty complex.
using BettiVector = std::vector<std::size_t>;

/// The simplices of one dimension stored flat, `width` sorted vertices per
/// row, rows in lexicographic order.
struct FaceTable {
  std::size_t width = 0;
  std::vector<std::uint32_t> vertices;

  std::size_t size() const { return width == 0 ? 0 : vertices.size() / width; }
  const std::uint32_t* row(std::size_t i) const { return vertices.data() + i * width; }
};

BettiVector betti(const SimplicialComplex& k);

/// How boundary ranks are computed: by reducing boundary matrices, or their
/// anti-transposes (coboundaries). Both are exact; Automatic picks by size.
enum class RankMethod { Automatic, Boundary, Coboundary };

/// Betti numbers from every face listed by dimension (tables[k] holds the
/// k-simplices); the listing must be closed under taking faces.
BettiVector betti_of_faces(const std::vector<FaceTable>& tables, RankMethod method = RankMethod::Automatic);

/// Ranks of the boundary maps d_1 .. d_dim (index 0 is d_1).
std::vector<std::size_t> boundary_ranks(const SimplicialComplex& k);

/// Alternating sum c_0 - c_1 + c_2 - ...
long euler_characteristic(const std::vector<std::size_t>& counts);

/// Drops trailing zeros, so vectors of different lengths compare by content.
BettiVector trimmed(BettiVector b);

/// Homology of a point: (1).
bool has_point_homology(const BettiVector& b);

/// Homology of S^k; k = -1 means the empty complex, k = 0 two points.
bool has_sphere_homology(const BettiVector& b, int k);

/// The Betti vector of S^k, in trimmed form.
BettiVector sphere_betti(int k);

}  // namespace schubcell
