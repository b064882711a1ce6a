#include "schubcell/shelling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace schubcell {

namespace {

using Facets = std::vector<std::size_t>;

class Shellability {
 public:
  explicit Shellability(const GradedPoset& p) : p_(p) {}

  /// Is the complex with these facets shellable with `prefix` placed first?
  bool exists(Facets facets, Facets prefix) {
    std::sort(facets.begin(), facets.end());
    std::sort(prefix.begin(), prefix.end());
    const auto key = std::make_pair(facets, prefix);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<std::vector<bool>> dead;
    Facets order;
    const bool ok = search(facets, prefix, order, dead);
    memo_[key] = ok;
    return ok;
  }

  /// The order found by the last top-level search.
  std::optional<Facets> first_shelling(Facets facets, const Facets& prefix) {
    std::set<std::vector<bool>> dead;
    Facets order;
    if (search(facets, prefix, order, dead)) return order;
    return std::nullopt;
  }

  /// Whether `f` can be attached after `placed`, given the order so far.
  bool step_ok(std::size_t f, const Facets& placed) {
    const Facets boundary = p_.lower_covers(f);
    if (placed.empty() || p_.rank(f) == 0) return exists(boundary, {});
    Facets attached;
    for (auto g : boundary)
      for (auto q : placed)
        if (p_.leq(g, q)) {
          attached.push_back(g);
          break;
        }
    if (attached.empty()) return false;
    // Purity: every face of f shared with an earlier facet lies in an attached ridge.
    for (auto x : p_.strict_lower_set(f)) {
      bool shared = false;
      for (auto q : placed)
        if (p_.leq(x, q)) {
          shared = true;
          break;
        }
      if (!shared) continue;
      bool covered = false;
      for (auto g : attached)
        if (p_.leq(x, g)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return exists(boundary, attached);
  }

 private:
  bool search(const Facets& facets, const Facets& prefix, Facets& order, std::set<std::vector<bool>>& dead) {
    if (order.size() == facets.size()) return true;
    std::vector<bool> used(facets.size(), false);
    std::size_t prefix_used = 0;
    for (auto f : order) {
      const auto pos = std::find(facets.begin(), facets.end(), f) - facets.begin();
      used[static_cast<std::size_t>(pos)] = true;
      if (std::find(prefix.begin(), prefix.end(), f) != prefix.end()) ++prefix_used;
    }
    if (dead.count(used)) return false;
    const bool prefix_phase = prefix_used < prefix.size();
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (used[i]) continue;
      const std::size_t f = facets[i];
      if (prefix_phase && std::find(prefix.begin(), prefix.end(), f) == prefix.end()) continue;
      if (!step_ok(f, order)) continue;
      order.push_back(f);
      if (search(facets, prefix, order, dead)) return true;
      order.pop_back();
    }
    dead.insert(used);
    return false;
  }

  const GradedPoset& p_;
  std::map<std::pair<Facets, Facets>, bool> memo_;
};

void require_pure(const GradedPoset& p, const Facets& facets) {
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (facets[i] >= p.size()) throw std::invalid_argument("facet index out of range");
    if (p.rank(facets[i]) != p.rank(facets.front())) throw std::invalid_argument("complex is not pure");
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (i != j && p.leq(facets[i], facets[j])) throw std::invalid_argument("facet list is not an antichain");
  }
}

int intersection_dim(const GradedPoset& p, std::size_t a, std::size_t b) {
  int d = -1;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.leq(x, a) && p.leq(x, b)) d = std::max(d, static_cast<int>(p.rank(x)));
  return d;
}

}  // namespace

bool verify_shelling(const GradedPoset& faces, const std::vector<std::size_t>& order) {
  require_pure(faces, order);
  Shellability s(faces);
  Facets placed;
  for (auto f : order) {
    if (!s.step_ok(f, placed)) return false;
    placed.push_back(f);
  }
  return true;
}

std::optional<std::vector<std::size_t>> find_shelling(const GradedPoset& faces, std::vector<std::size_t> facets,
                                                      const ShellingOptions& options) {
  require_pure(faces, facets);
  std::sort(facets.begin(), facets.end());
  for (auto f : options.first)
    if (!std::binary_search(facets.begin(), facets.end(), f))
      throw std::invalid_argument("prefix facet is not a facet");
  Shellability s(faces);
  return s.first_shelling(facets, options.first);
}

bool has_property_s(const GradedPoset& faces, const std::vector<std::size_t>& order) {
  require_pure(faces, order);
  if (order.empty()) return true;
  const int d = static_cast<int>(faces.rank(order.front()));
  for (std::size_t i = 1; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      bool found = false;
      for (std::size_t k = 0; k < i && !found; ++k) {
        bool inside = true;
        for (std::size_t x = 0; x < faces.size() && inside; ++x)
          if (faces.leq(x, order[i]) && faces.leq(x, order[j]) && !faces.leq(x, order[k])) inside = false;
        found = inside && intersection_dim(faces, order[k], order[i]) == d - 1;
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<std::size_t> boundary_facets(const CellComplexPoset& c) { return maximal_cells(c, c.boundary()); }

std::optional<std::vector<std::size_t>> find_boundary_shelling(const CellComplexPoset& c, bool zero_locus_first) {
  const auto facets = boundary_facets(c);
  ShellingOptions options;
  if (zero_locus_first) {
    const auto zero = c.zero_locus();
    for (auto f : facets)
      if (std::find(zero.begin(), zero.end(), f) != zero.end()) options.first.push_back(f);
  }
  return find_shelling(c.closure, facets, options);
}

}  // namespace schubcell
