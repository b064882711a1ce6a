#include "schubcell/oriented_matroid.hpp"

#include "schubcell/errors.hpp"
#include "schubcell/feasibility.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace schubcell {

namespace {

void sort_unique(std::vector<SignVector>& xs) {
  std::sort(xs.begin(), xs.end(), lex_less);
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

// Calls f(S) for every k-subset S of {0..n-1}, in colexicographic order of bitmasks.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  if (k == 0) {
    f(CoordSet{0});
    return;
  }
  CoordSet s = full_set(k);
  const CoordSet limit = full_set(n);
  while (is_subset(s, limit)) {
    f(s);
    // Gosper's hack: next larger integer with the same popcount.
    const CoordSet c = s & (~s + 1);
    const CoordSet r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace

OrientedMatroid OrientedMatroid::from_covectors(std::size_t ground_size, std::vector<SignVector> covectors) {
  if (ground_size > kMaxGroundSize) throw GuardrailError("ground set larger than 32 elements");
  OrientedMatroid m;
  m.n_ = ground_size;
  sort_unique(covectors);
  m.covectors_ = std::move(covectors);
  m.lookup_.insert(m.covectors_.begin(), m.covectors_.end());

  std::vector<CoordSet> zero_sets;
  for (auto x : m.covectors_) zero_sets.push_back(x.zero_set(ground_size));
  std::sort(zero_sets.begin(), zero_sets.end(),
            [](CoordSet a, CoordSet b) { return cardinality(a) != cardinality(b) ? cardinality(a) < cardinality(b) : a < b; });
  zero_sets.erase(std::unique(zero_sets.begin(), zero_sets.end()), zero_sets.end());

  // rank(F) = length of the longest chain of flats below F.
  std::vector<std::size_t> ranks(zero_sets.size(), 0);
  for (std::size_t i = 0; i < zero_sets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (zero_sets[j] != zero_sets[i] && is_subset(zero_sets[j], zero_sets[i]))
        ranks[i] = std::max(ranks[i], ranks[j] + 1);
  for (std::size_t i = 0; i < zero_sets.size(); ++i) m.flats_.push_back({zero_sets[i], ranks[i]});
  std::sort(m.flats_.begin(), m.flats_.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.members < b.members;
  });
  for (const auto& f : m.flats_) m.flat_rank_[f.members] = f.rank;

  const std::size_t r = m.rank();
  for (auto x : m.covectors_) {
    const auto z = x.zero_set(ground_size);
    if (m.flat_rank_[z] == 0) m.topes_.push_back(x);
    if (r > 0 && m.flat_rank_[z] + 1 == r) m.cocircuits_.push_back(x);
  }
  return m;
}

bool OrientedMatroid::is_tope(SignVector x) const {
  return is_covector(x) && x.zero_set(n_) == loops();
}

std::size_t OrientedMatroid::rank_of(CoordSet f) const {
  auto it = flat_rank_.find(f);
  if (it == flat_rank_.end()) throw std::domain_error("not a flat: " + set_label(f));
  return it->second;
}

OrientedMatroid from_subspace(const Subspace& v, const BuildOptions& options) {
  const std::size_t n = v.ground_size();
  if (n > options.ground_limit || n > kMaxGroundSize)
    throw GuardrailError("ground set has " + std::to_string(n) + " elements, limit is " +
                         std::to_string(std::min(options.ground_limit, kMaxGroundSize)));
  const std::size_t d = v.dim();
  if (d == 0) return OrientedMatroid::from_covectors(n, {SignVector{}});

  std::vector<SignVector> cocircuits;
  for_each_subset(n, d - 1, [&](CoordSet s) {
    Subspace line = vanish_solve(v, s);
    if (line.dim() != 1) return;
    SignVector x = sign_of(line.basis().front());
    cocircuits.push_back(x);
    cocircuits.push_back(-x);
  });
  sort_unique(cocircuits);

  std::unordered_set<SignVector, SignVectorHash> seen{SignVector{}};
  std::vector<SignVector> all{SignVector{}};
  std::deque<SignVector> work{SignVector{}};
  while (!work.empty()) {
    SignVector x = work.front();
    work.pop_front();
    for (auto c : cocircuits) {
      SignVector y = compose(x, c);
      if (seen.insert(y).second) {
        all.push_back(y);
        work.push_back(y);
      }
    }
  }
  return OrientedMatroid::from_covectors(n, std::move(all));
}

std::vector<SignVector> covectors_by_feasibility(const Subspace& v) {
  const std::size_t n = v.ground_size();
  std::vector<SignVector> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    SignVector x;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      if (c % 3 == 1) x.plus |= CoordSet{1} << i;
      if (c % 3 == 2) x.minus |= CoordSet{1} << i;
    }
    if (sign_feasible(v, SignPattern::from_sets(n, x.plus, x.minus)).feasible()) out.push_back(x);
  }
  sort_unique(out);
  return out;
}

std::string AxiomViolation::describe(std::size_t n) const {
  switch (kind) {
    case Kind::MissingZero: return "zero vector missing";
    case Kind::Negation: return "negation of " + x.str(n) + " missing";
    case Kind::Composition: return "composition " + x.str(n) + " o " + y.str(n) + " missing";
    case Kind::Elimination:
      return "no elimination of " + x.str(n) + ", " + y.str(n) + " at element " + std::to_string(element + 1);
  }
  return {};
}

AxiomReport check_axioms(std::size_t ground_size, const std::vector<SignVector>& covectors) {
  AxiomReport report;
  std::unordered_set<SignVector, SignVectorHash> set(covectors.begin(), covectors.end());
  std::vector<SignVector> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end(), lex_less);
  using Kind = AxiomViolation::Kind;

  if (!set.count(SignVector{})) report.violations.push_back({Kind::MissingZero, {}, {}, 0});
  for (auto x : sorted)
    if (!set.count(-x)) report.violations.push_back({Kind::Negation, x, {}, 0});

  for (auto x : sorted) {
    for (auto y : sorted) {
      if (!set.count(compose(x, y))) report.violations.push_back({Kind::Composition, x, y, 0});

      const CoordSet sep = separation(x, y);
      if (sep == 0 || lex_less(y, x)) continue;  // the condition is symmetric in X, Y
      const SignVector target = mask(compose(x, y), ~sep);
      for (std::size_t e : elements(sep)) {
        // Z is pinned outside sep, zero at e, and free on sep \ {e}.
        const auto free = elements(sep & ~(CoordSet{1} << e));
        bool found = false;
        std::size_t combos = 1;
        for (std::size_t k = 0; k < free.size() && combos <= sorted.size(); ++k) combos *= 3;
        if (combos <= sorted.size()) {
          for (std::size_t code = 0; code < combos && !found; ++code) {
            SignVector z = target;
            std::size_t c = code;
            for (auto f : free) {
              if (c % 3 == 1) z.plus |= CoordSet{1} << f;
              if (c % 3 == 2) z.minus |= CoordSet{1} << f;
              c /= 3;
            }
            found = set.count(z) != 0;
          }
        } else {
          const CoordSet pinned = full_set(ground_size) & ~sep;
          for (auto z : sorted) {
            if (z.at(e) == 0 && mask(z, pinned) == mask(target, pinned)) {
              found = true;
              break;
            }
          }
        }
        if (!found) report.violations.push_back({Kind::Elimination, x, y, e});
      }
    }
  }
  return report;
}

OrientedMatroid restrict_to_subset(const OrientedMatroid& m, CoordSet s) {
  std::vector<SignVector> out;
  out.reserve(m.covectors().size());
  for (auto x : m.covectors()) out.push_back(project(x, s));
  return OrientedMatroid::from_covectors(cardinality(s), std::move(out));
}

OrientedMatroid restrict(const OrientedMatroid& m, CoordSet f) {
  if (!m.is_flat(f)) throw std::domain_error("restrict: not a flat: " + set_label(f));
  return restrict_to_subset(m, f);
}

OrientedMatroid contract(const OrientedMatroid& m, CoordSet f) {
  if (!m.is_flat(f)) throw std::domain_error("contract: not a flat: " + set_label(f));
  std::vector<SignVector> out;
  for (auto x : m.covectors())
    if ((x.support() & f) == 0) out.push_back(x);
  return OrientedMatroid::from_covectors(m.ground_size(), std::move(out));
}

OrientedMatroid reorient(const OrientedMatroid& m, CoordSet a) {
  std::vector<SignVector> out;
  out.reserve(m.covectors().size());
  for (auto x : m.covectors()) out.push_back(reorient(x, a));
  return OrientedMatroid::from_covectors(m.ground_size(), std::move(out));
}

bool is_acyclic_flat(const OrientedMatroid& m, CoordSet f) {
  return m.is_flat(f) && m.is_covector(positive_off(f, m.ground_size()));
}

std::vector<Flat> acyclic_flats(const OrientedMatroid& m) {
  std::vector<Flat> out;
  for (const auto& f : m.flats())
    if (is_acyclic_flat(m, f.members)) out.push_back(f);
  return out;
}

}  // namespace schubcell
