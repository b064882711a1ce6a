#pragma once

#include "schubcell/homology.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schubcell {

/**
 * A finite poset on elements 0..n-1 with opaque string labels. Stores the full
 * order relation as bitsets, the cover relation (transitive reduction) and
 * the rank of each element, i.e. the length of the longest chain below it.
 */
class GradedPoset {
 public:
  using Leq = std::function<bool(std::size_t, std::size_t)>;

  GradedPoset() = default;

  /// Throws std::invalid_argument if `leq` is not a partial order (cycles or
  /// failed transitivity); reflexivity is assumed.
  static GradedPoset from_order(std::vector<std::string> labels, const Leq& leq);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(std::size_t a, std::size_t b) const { return below_[b].test(a); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  /// Cover pairs (a, b) with a < b and nothing strictly between, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return up_[a]; }
  const std::vector<std::size_t>& lower_covers(std::size_t b) const { return down_[b]; }

  std::size_t rank(std::size_t i) const { return rank_[i]; }
  std::size_t max_rank() const;
  /// Every cover raises the rank by exactly one.
  bool is_graded() const;

  std::optional<std::size_t> minimum() const;
  std::optional<std::size_t> maximum() const;
  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

  /// Elements c with a <= c <= b, ascending index.
  std::vector<std::size_t> interval(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> strict_lower_set(std::size_t b) const;
  std::vector<std::size_t> lower_set(std::size_t b) const;

  /// Induced order on `keep`, in the given order.
  GradedPoset subposet(const std::vector<std::size_t>& keep) const;
  GradedPoset opposite() const;
  /// Adjoins a new maximum.
  GradedPoset with_top(const std::string& label) const;

  /// Hasse diagram in DOT, nodes in index order.
  std::string to_dot(const std::string& name) const;

  friend bool operator==(const GradedPoset& a, const GradedPoset& b) {
    return a.labels_ == b.labels_ && a.below_ == b.below_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<boost::dynamic_bitset<>> below_;  // below_[b][a] iff a <= b
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::size_t> rank_;
};

struct ThinnessResult {
  bool thin = true;
  /// A length-two interval [lower, upper] whose size is not four.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::size_t witness_size = 0;
};

/// Every interval of length two has exactly four elements. Throws
/// std::domain_error if the poset is not graded.
ThinnessResult is_thin(const GradedPoset& p);

struct IntervalElement {
  std::size_t lower;
  std::size_t upper;

  friend bool operator==(const IntervalElement&, const IntervalElement&) = default;
};

/// Intervals of a poset ordered by [a', b'] <= [a, b] iff a <= a' and b' <= b.
struct IntervalPoset {
  GradedPoset poset;
  std::vector<IntervalElement> intervals;  // aligned with poset elements
};

IntervalPoset interval_poset(const GradedPoset& p);

/// Simplices are the chains of p; vertex ids are element indices.
SimplicialComplex order_complex(const GradedPoset& p);

/// Betti numbers of order_complex(p), enumerating chains directly instead of
/// expanding maximal chains into faces.
BettiVector order_complex_betti(const GradedPoset& p, RankMethod method = RankMethod::Automatic);

/// counts[k] = number of chains with k+1 elements.
std::vector<std::size_t> chain_counts(const GradedPoset& p);

}  // namespace schubcell
