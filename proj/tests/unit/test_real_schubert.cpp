#include "helpers.hpp"

#include "../oracles/oracles.hpp"

#include "schubcell/real_schubert.hpp"
#include "schubcell/tnn.hpp"

#include <doctest.h>

#include <set>

using namespace schubcell;
using testing::set_of;
using testing::vec;

namespace {

std::set<CoordSet> members(const std::vector<Flat>& flats) {
  std::set<CoordSet> out;
  for (const auto& f : flats) out.insert(f.members);
  return out;
}

}  // namespace

TEST_CASE("relatively acyclic flats") {
  const auto m = from_subspace(testing::plane_three());
  CHECK(members(relatively_acyclic_flats(m, SignVector::parse("+-+"))) ==
        std::set<CoordSet>{0, set_of({2}), set_of({3}), full_set(3)});
  CHECK(members(relatively_acyclic_flats(m, SignVector::parse("+++"))) == members(acyclic_flats(m)));
  for (auto t : m.topes()) CHECK(members(relatively_acyclic_flats(m, t)).count(full_set(3)));
  CHECK_THROWS_AS(relatively_acyclic_flats(m, SignVector::parse("+0+")), std::domain_error);
  CHECK_THROWS_AS(relatively_acyclic_flats(m, SignVector::parse("++-")), std::domain_error);
}

TEST_CASE("tope charts") {
  const auto v = testing::plane_three();
  const auto m = from_subspace(v);
  const auto positive = tope_chart(v, SignVector::parse("+++"));
  const auto tnn = tnn_cell_poset(m);
  REQUIRE(positive.cells.size() == tnn.cells.size());
  for (std::size_t i = 0; i < tnn.cells.size(); ++i) {
    CHECK(positive.cells[i].lower == tnn.cells[i].lower);
    CHECK(positive.cells[i].upper == tnn.cells[i].upper);
  }
  CHECK(positive.closure.covers() == tnn.closure.covers());

  const auto chart = tope_chart(v, SignVector::parse("+-+"));
  CHECK(chart.cells.size() == 9);
  CHECK(regularity_report(chart).all_pass());
  CHECK(tope_chart(m, SignVector::parse("+-+")).cells == chart.cells);
  for (auto t : m.topes()) CHECK(regularity_report(tope_chart(v, t)).all_pass());
  CHECK_THROWS_AS(tope_chart(v, SignVector::parse("++-")), std::domain_error);
}

TEST_CASE("triple cells") {
  SUBCASE("Q^1") {
    const auto cells = triple_cells(from_subspace(Subspace::full(1)));
    CHECK(cells.size() == 4);  // 0, infinity, and the two half lines
  }
  SUBCASE("Q^2 is a product of two circles") {
    const auto cells = triple_cells(from_subspace(Subspace::full(2)));
    CHECK(cells.size() == 16);
  }
  SUBCASE("plane x1 + x2 = x3") {
    const auto m = from_subspace(testing::plane_three());
    const auto cells = triple_cells(m);
    long chi = 0;
    for (const auto& c : cells) chi += c.dim % 2 ? -1 : 1;
    const auto b = yv_betti(testing::plane_three());
    long chi_b = 0;
    for (std::size_t i = 0; i < b.size(); ++i) chi_b += (i % 2 ? -1 : 1) * static_cast<long>(b[i]);
    CHECK(chi == chi_b);
    for (const auto& c : cells) {
      REQUIRE(c.tope);
      CHECK(c.tope->support() == (c.upper & ~c.lower));
    }
  }
}

TEST_CASE("chart triples") {
  const auto m = from_subspace(testing::plane_three());
  const ChartTriple a{set_of({2}), full_set(3), SignVector::parse("+-+")};
  const ChartTriple b{set_of({2}), full_set(3), SignVector::parse("+++")};
  const ChartTriple c{set_of({3}), full_set(3), SignVector::parse("+-+")};
  CHECK(same_cell(a, a));
  CHECK(same_cell(a, b));  // the topes agree off {2}
  CHECK_FALSE(same_cell(a, c));
  CHECK(cell_of_chart_triple(m, a) == cell_of_chart_triple(m, b));
  CHECK_THROWS_AS(cell_of_chart_triple(m, ChartTriple{set_of({1}), full_set(3), SignVector::parse("+-+")}),
                  std::domain_error);
  for (const auto& cell : triple_cells(m)) {
    const auto t = chart_triple_of_cell(m, cell);
    REQUIRE(t);
    CHECK(cell_of_chart_triple(m, *t) == cell);
  }
}

TEST_CASE("homology of the real variety") {
  CHECK(trimmed(yv_betti(Subspace::full(1))) == BettiVector{1, 1});
  CHECK(trimmed(yv_betti(Subspace::zero(2))) == BettiVector{1});
  CHECK(trimmed(yv_betti(Subspace::full(2))) == BettiVector{1, 2, 1});
  const auto b = trimmed(yv_betti(testing::plane_three()));
  REQUIRE(b.size() >= 2);
  CHECK(b[1] >= 1);
}

TEST_CASE("both rank methods give the torus homology of the full 3-space") {
  const auto y = yv_complex(from_subspace(Subspace::full(3)));
  for (auto method : {RankMethod::Boundary, RankMethod::Coboundary})
    CHECK(trimmed(order_complex_betti(y.closure, method)) == BettiVector{1, 3, 3, 1});
}

TEST_CASE("closure order agrees with the brute-force tope scan") {
  for (const auto& v : {testing::plane_three(), Subspace::full(2), testing::four_plane()}) {
    const auto m = from_subspace(v);
    const auto y = yv_complex(m);
    const auto ref = oracle::brute_real_cells(m);
    REQUIRE(ref.cells.size() == y.cells.size());
    for (std::size_t a = 0; a < ref.cells.size(); ++a)
      for (std::size_t b = 0; b < ref.cells.size(); ++b) {
        const Cell ca{ref.cells[a].f, ref.cells[a].g, ref.cells[a].t, ref.cells[a].dim};
        const Cell cb{ref.cells[b].f, ref.cells[b].g, ref.cells[b].t, ref.cells[b].dim};
        const auto ia = y.find(ca), ib = y.find(cb);
        REQUIRE(ia);
        REQUIRE(ib);
        CHECK(y.closure.leq(*ia, *ib) == ref.leq[a][b]);
      }
  }
}

TEST_CASE("chart consistency") {
  CHECK(chart_consistency_check(testing::plane_three()).all_pass());
  CHECK(chart_consistency_check(testing::r5_example()).all_pass());
  CHECK(chart_consistency_check(Subspace::span(3, {vec({1, -1, 0}), vec({0, 0, 1})})).all_pass());
}
