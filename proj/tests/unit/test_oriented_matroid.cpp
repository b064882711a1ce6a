#include "helpers.hpp"

#include "schubcell/errors.hpp"
#include "schubcell/feasibility.hpp"
#include "schubcell/oriented_matroid.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace schubcell;
using testing::set_of;
using testing::vec;

namespace {

SignVector sv(const char* s) { return SignVector::parse(s); }

std::set<CoordSet> flat_members(const std::vector<Flat>& flats) {
  std::set<CoordSet> out;
  for (const auto& f : flats) out.insert(f.members);
  return out;
}

}  // namespace

TEST_CASE("sign vectors") {
  CHECK(sign_of(vec({1, 1, 2})) == sv("+++"));
  CHECK(sign_of(vec({0, 0, 0})) == SignVector{});
  CHECK(sign_of(vec({0, 2, -1, -1})) == sv("0+--"));
  CHECK(compose(sv("0++"), sv("-0-")) == sv("-++"));
  CHECK(compose(sv("+-0"), sv("+-0")) == sv("+-0"));
  CHECK(compose(SignVector{}, sv("-0+")) == sv("-0+"));
  CHECK(sv("+0-").str(3) == "+0-");
  CHECK((-sv("+0-")) == sv("-0+"));
  CHECK(conforms(sv("+00"), sv("+-0")));
  CHECK_FALSE(conforms(sv("-00"), sv("+-0")));
  CHECK(separation(sv("+-0"), sv("-++")) == set_of({1, 2}));
  CHECK(lex_less(sv("0+"), sv("+0")));
  CHECK(lex_less(sv("+0"), sv("-0")));
  CHECK_THROWS(SignVector::parse("+a"));
}

TEST_CASE("from_subspace on the plane x1 + x2 = x3") {
  const auto m = from_subspace(testing::plane_three());
  CHECK(m.covectors().size() == 13);
  CHECK(m.topes().size() == 6);
  CHECK(m.cocircuits().size() == 6);
  for (auto c : {"0++", "+0+", "+-0"}) {
    CHECK(m.is_covector(sv(c)));
    CHECK(m.is_covector(-sv(c)));
  }
  CHECK(m.rank() == 2);
  CHECK(m.loops() == 0);
}

TEST_CASE("from_subspace extremes") {
  const auto full = from_subspace(Subspace::full(2));
  CHECK(full.covectors().size() == 9);
  const auto zero = from_subspace(Subspace::zero(3));
  CHECK(zero.covectors() == std::vector<SignVector>{SignVector{}});
  CHECK(zero.loops() == full_set(3));
  CHECK(zero.rank() == 0);
}

TEST_CASE("from_subspace agrees with the feasibility sweep") {
  for (const auto& v : {testing::plane_three(), testing::four_plane(), testing::r5_example()})
    CHECK(from_subspace(v).covectors() == covectors_by_feasibility(v));
}

TEST_CASE("size guardrail") {
  const auto v = Subspace::full(15);
  CHECK_THROWS_AS(from_subspace(v), GuardrailError);
  CHECK_THROWS_AS(from_subspace(Subspace::full(3), BuildOptions{2}), GuardrailError);
}

TEST_CASE("axiom checker") {
  const auto m = from_subspace(testing::plane_three());
  CHECK(check_axioms(3, m.covectors()).ok());

  const auto neg = check_axioms(2, {SignVector{}, sv("++")});
  REQUIRE_FALSE(neg.ok());
  CHECK(std::any_of(neg.violations.begin(), neg.violations.end(),
                    [](const AxiomViolation& v) { return v.kind == AxiomViolation::Kind::Negation; }));

  auto covs = m.covectors();
  covs.erase(std::find(covs.begin(), covs.end(), sv("0++")));
  const auto broken = check_axioms(3, covs);
  REQUIRE_FALSE(broken.ok());
  CHECK(std::any_of(broken.violations.begin(), broken.violations.end(), [](const AxiomViolation& v) {
    return v.kind == AxiomViolation::Kind::Composition || v.kind == AxiomViolation::Kind::Elimination;
  }));
  CHECK_FALSE(broken.violations.front().describe(3).empty());

  CHECK_FALSE(check_axioms(2, {sv("+0"), sv("-0")}).ok());
}

TEST_CASE("flats of the worked example in R^5") {
  const auto m = from_subspace(testing::r5_example());
  const std::set<CoordSet> expected = {
      0, set_of({1}), set_of({2}), set_of({3}), set_of({4}), set_of({5}), set_of({1, 2, 3}), set_of({1, 4}),
      set_of({2, 4}), set_of({2, 5}), set_of({1, 5}), set_of({3, 4, 5}), full_set(5)};
  CHECK(flat_members(m.flats()) == expected);
  CHECK(m.rank_of(set_of({1, 2, 3})) == 2);
  CHECK(m.rank_of(set_of({4})) == 1);
  CHECK(m.rank_of(full_set(5)) == 3);
  CHECK_THROWS_AS(m.rank_of(set_of({1, 2})), std::domain_error);

  const std::set<CoordSet> acyclic = {0, set_of({1}), set_of({2}), set_of({4}), set_of({5}), set_of({1, 4}),
                                      set_of({2, 4}), set_of({1, 5}), set_of({2, 5}), full_set(5)};
  CHECK(flat_members(acyclic_flats(m)) == acyclic);
}

TEST_CASE("flats of x1 = x2 + x3 + x4") {
  const auto m = from_subspace(testing::four_plane());
  CHECK(m.flats().size() == 12);
  for (const auto& f : m.flats()) CHECK((f.members == full_set(4) || cardinality(f.members) <= 2));
  CHECK_FALSE(is_acyclic_flat(m, set_of({1, 2})));
  CHECK_FALSE(is_acyclic_flat(m, set_of({1})));
  CHECK(is_acyclic_flat(m, full_set(4)));
  CHECK_FALSE(is_acyclic_flat(m, set_of({1, 2, 3})));  // not a flat
}

TEST_CASE("Boolean matroid") {
  const auto m = from_subspace(Subspace::full(3));
  REQUIRE(m.flats().size() == 8);
  for (const auto& f : m.flats()) CHECK(f.rank == cardinality(f.members));
}

TEST_CASE("restriction and contraction") {
  const auto m = from_subspace(testing::four_plane());
  const auto r = restrict(m, set_of({1, 2}));
  CHECK(r.ground_size() == 2);
  CHECK(r.is_covector(sv("0+")));
  CHECK(is_acyclic_flat(r, set_of({1})));
  CHECK_THROWS_AS(restrict(m, set_of({1, 2, 3})), std::domain_error);
  CHECK_THROWS_AS(contract(m, set_of({1, 2, 3})), std::domain_error);
  CHECK(contract(m, 0).covectors() == m.covectors());
  CHECK(restrict(m, full_set(4)).covectors() == m.covectors());

  const auto c = contract(m, set_of({1}));
  for (auto x : c.covectors()) CHECK_FALSE(contains(x.support(), 0));
  // Topes of M/F are the covectors with zero set F.
  for (auto x : c.topes()) CHECK(x.zero_set(4) == set_of({1}));
}

TEST_CASE("contraction realizes V cap ker(pi_F), restriction pi_F(V)") {
  const auto v = testing::r5_example();
  const auto m = from_subspace(v);
  for (const auto& f : m.flats()) {
    CHECK(contract(m, f.members).covectors() == from_subspace(vanish_solve(v, f.members)).covectors());
    CHECK(restrict(m, f.members).covectors() == from_subspace(project_subspace(v, f.members)).covectors());
  }
}

TEST_CASE("reorientation") {
  const auto v = testing::plane_three();
  const auto m = from_subspace(v);
  CHECK(reorient(m, 0).covectors() == m.covectors());
  CHECK(reorient(reorient(m, set_of({2})), set_of({2})).covectors() == m.covectors());
  const auto flipped = reorient(m, set_of({3}));
  CHECK(flipped.covectors() == from_subspace(testing::ker({{1, 1, 1}}, 3)).covectors());
  CHECK(flat_members(acyclic_flats(flipped)) ==
        flat_members(acyclic_flats(from_subspace(testing::ker({{1, 1, 1}}, 3)))));
  CHECK(flat_members(flipped.flats()) == flat_members(m.flats()));
}
