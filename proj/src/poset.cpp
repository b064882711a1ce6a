#include "schubcell/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubcell {

GradedPoset GradedPoset::from_order(std::vector<std::string> labels, const Leq& leq) {
  const std::size_t n = labels.size();
  GradedPoset p;
  p.labels_ = std::move(labels);
  p.below_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      if (a == b || leq(a, b)) p.below_[b].set(a);

  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = p.below_[b].find_first(); a != boost::dynamic_bitset<>::npos; a = p.below_[b].find_next(a)) {
      if (a != b && p.below_[a].test(b))
        throw std::invalid_argument("order has a cycle through '" + p.labels_[a] + "' and '" + p.labels_[b] + "'");
      if (!p.below_[a].is_subset_of(p.below_[b]))
        throw std::invalid_argument("order is not transitive below '" + p.labels_[b] + "'");
    }
  }

  // Strict upper sets, for the transitive reduction.
  std::vector<boost::dynamic_bitset<>> above(n, boost::dynamic_bitset<>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = p.below_[b].find_first(); a != boost::dynamic_bitset<>::npos; a = p.below_[b].find_next(a))
      if (a != b) above[a].set(b);

  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (std::size_t b = 0; b < n; ++b) {
    boost::dynamic_bitset<> strict_below = p.below_[b];
    strict_below.reset(b);
    for (std::size_t a = strict_below.find_first(); a != boost::dynamic_bitset<>::npos; a = strict_below.find_next(a)) {
      if (!(above[a] & strict_below).any()) {
        p.covers_.emplace_back(a, b);
        p.up_[a].push_back(b);
        p.down_[b].push_back(a);
      }
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  for (auto& u : p.up_) std::sort(u.begin(), u.end());

  // Longest chain below each element, processed in a linear extension.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = p.below_[a].count(), cb = p.below_[b].count();
    return ca != cb ? ca < cb : a < b;
  });
  p.rank_.assign(n, 0);
  for (std::size_t b : order)
    for (std::size_t a : p.down_[b]) p.rank_[b] = std::max(p.rank_[b], p.rank_[a] + 1);
  return p;
}

std::size_t GradedPoset::max_rank() const {
  return rank_.empty() ? 0 : *std::max_element(rank_.begin(), rank_.end());
}

bool GradedPoset::is_graded() const {
  for (auto [a, b] : covers_)
    if (rank_[b] != rank_[a] + 1) return false;
  return true;
}

std::optional<std::size_t> GradedPoset::minimum() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (below_[i].count() == 1) {
      bool all = true;
      for (std::size_t j = 0; j < size() && all; ++j) all = leq(i, j);
      if (all) return i;
    }
  return std::nullopt;
}

std::optional<std::size_t> GradedPoset::maximum() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (below_[i].count() == size()) return i;
  return std::nullopt;
}

std::vector<std::size_t> GradedPoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (down_[i].empty()) out.push_back(i);
  return out;
}

std::vector<std::size_t> GradedPoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (up_[i].empty()) out.push_back(i);
  return out;
}

std::vector<std::size_t> GradedPoset::interval(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t c = below_[b].find_first(); c != boost::dynamic_bitset<>::npos; c = below_[b].find_next(c))
    if (leq(a, c)) out.push_back(c);
  return out;
}

std::vector<std::size_t> GradedPoset::lower_set(std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t c = below_[b].find_first(); c != boost::dynamic_bitset<>::npos; c = below_[b].find_next(c))
    out.push_back(c);
  return out;
}

std::vector<std::size_t> GradedPoset::strict_lower_set(std::size_t b) const {
  auto out = lower_set(b);
  out.erase(std::remove(out.begin(), out.end(), b), out.end());
  return out;
}

GradedPoset GradedPoset::subposet(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> labels;
  for (auto i : keep) labels.push_back(labels_[i]);
  return from_order(std::move(labels), [&](std::size_t a, std::size_t b) { return leq(keep[a], keep[b]); });
}

GradedPoset GradedPoset::opposite() const {
  return from_order(labels_, [&](std::size_t a, std::size_t b) { return leq(b, a); });
}

GradedPoset GradedPoset::with_top(const std::string& label) const {
  auto labels = labels_;
  labels.push_back(label);
  const std::size_t top = size();
  return from_order(std::move(labels), [&](std::size_t a, std::size_t b) {
    if (b == top) return true;
    if (a == top) return false;
    return leq(a, b);
  });
}

std::string GradedPoset::to_dot(const std::string& name) const {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < size(); ++i)
    out << "  n" << i << " [label=\"" << labels_[i] << "\", rank_value=" << rank_[i] << "];\n";
  for (auto [a, b] : covers_) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

ThinnessResult is_thin(const GradedPoset& p) {
  if (!p.is_graded()) throw std::domain_error("is_thin: poset is not graded");
  ThinnessResult result;
  for (std::size_t b = 0; b < p.size(); ++b) {
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (!p.less(a, b) || p.rank(b) != p.rank(a) + 2) continue;
      const std::size_t size = p.interval(a, b).size();
      if (size != 4) {
        result.thin = false;
        result.witness = std::make_pair(a, b);
        result.witness_size = size;
        return result;
      }
    }
  }
  return result;
}

IntervalPoset interval_poset(const GradedPoset& p) {
  IntervalPoset out;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b)) out.intervals.push_back({a, b});
  // Order by dimension so that the listing starts with the vertices.
  std::stable_sort(out.intervals.begin(), out.intervals.end(), [&](const auto& x, const auto& y) {
    return p.rank(x.upper) - p.rank(x.lower) < p.rank(y.upper) - p.rank(y.lower);
  });
  for (const auto& iv : out.intervals) labels.push_back("[" + p.label(iv.lower) + "," + p.label(iv.upper) + "]");
  const auto& ivs = out.intervals;
  out.poset = GradedPoset::from_order(std::move(labels), [&](std::size_t x, std::size_t y) {
    return p.leq(ivs[y].lower, ivs[x].lower) && p.leq(ivs[x].upper, ivs[y].upper);
  });
  return out;
}

namespace {

template <typename F>
void for_each_maximal_chain(const GradedPoset& p, F&& f) {
  std::vector<std::size_t> chain;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    chain.push_back(v);
    if (p.upper_covers(v).empty()) f(chain);
    for (auto w : p.upper_covers(v)) walk(w);
    chain.pop_back();
  };
  for (auto m : p.minimal_elements()) walk(m);
}

}  // namespace

SimplicialComplex order_complex(const GradedPoset& p) {
  std::vector<SimplicialComplex::Simplex> facets;
  for_each_maximal_chain(p, [&](const std::vector<std::size_t>& chain) {
    facets.emplace_back(chain.begin(), chain.end());
  });
  return SimplicialComplex::from_maximal(std::move(facets));
}

BettiVector order_complex_betti(const GradedPoset& p, RankMethod method) {
  // Relabel along a linear extension so every chain is an increasing vertex
  // list; a depth-first walk then emits each dimension in lexicographic order.
  const std::size_t n = p.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.rank(a) != p.rank(b) ? p.rank(a) < p.rank(b) : a < b;
  });
  std::vector<std::vector<std::uint32_t>> above(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.less(order[i], order[j])) above[i].push_back(static_cast<std::uint32_t>(j));

  std::vector<FaceTable> tables;
  std::vector<std::uint32_t> chain;
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t v) {
    chain.push_back(v);
    if (tables.size() < chain.size()) tables.push_back(FaceTable{chain.size(), {}});
    auto& t = tables[chain.size() - 1].vertices;
    t.insert(t.end(), chain.begin(), chain.end());
    for (auto w : above[v]) walk(w);
    chain.pop_back();
  };
  for (std::size_t i = 0; i < n; ++i) walk(static_cast<std::uint32_t>(i));
  return betti_of_faces(tables, method);
}

std::vector<std::size_t> chain_counts(const GradedPoset& p) {
  // chains_ending[v][k] = chains with k+1 elements whose top element is v.
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.rank(a) != p.rank(b) ? p.rank(a) < p.rank(b) : a < b;
  });
  std::vector<std::vector<std::size_t>> ending(p.size());
  std::vector<std::size_t> totals;
  for (std::size_t v : order) {
    auto& e = ending[v];
    e.assign(1, 1);
    for (std::size_t u = 0; u < p.size(); ++u) {
      if (!p.less(u, v)) continue;
      if (e.size() < ending[u].size() + 1) e.resize(ending[u].size() + 1, 0);
      for (std::size_t k = 0; k < ending[u].size(); ++k) e[k + 1] += ending[u][k];
    }
    if (totals.size() < e.size()) totals.resize(e.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) totals[k] += e[k];
  }
  return totals;
}

}  // namespace schubcell
