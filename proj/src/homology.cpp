#include "schubcell/homology.hpp"

#include "schubcell/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>

namespace schubcell {

SimplicialComplex::SimplicialComplex(std::vector<Simplex> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (auto& f : facets) {
    bool covered = false;
    for (const auto& g : facets_) {
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        covered = true;
        break;
      }
    }
    if (!covered && !f.empty()) facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end());
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::size_t SimplicialComplex::vertex_count() const {
  std::set<std::uint32_t> v;
  for (const auto& f : facets_) v.insert(f.begin(), f.end());
  return v.size();
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<Simplex> facets) {
  for (auto& f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  SimplicialComplex k;
  for (auto& f : facets)
    if (!f.empty()) k.facets_.push_back(std::move(f));
  return k;
}

std::vector<std::vector<SimplicialComplex::Simplex>> SimplicialComplex::faces() const {
  const int d = dimension();
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(d + 1));
  for (const auto& f : facets_) {
    const std::size_t m = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i) & 1) s.push_back(f[i]);
      by_dim[s.size() - 1].push_back(std::move(s));
    }
  }
  for (auto& level : by_dim) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return by_dim;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : faces()) out.push_back(level.size());
  return out;
}

namespace {

using Entry = std::pair<std::size_t, int>;

// Index of `face` in a sorted table; the face must be present.
std::size_t find_row(const FaceTable& t, const std::uint32_t* face) {
  std::size_t lo = 0, hi = t.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const std::uint32_t* r = t.row(mid);
    if (std::lexicographical_compare(r, r + t.width, face, face + t.width))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

// Boundary of simplex `c` of `cols` as sorted (row, sign) pairs.
void boundary_column(const FaceTable& rows, const FaceTable& cols, std::size_t c, std::vector<std::uint32_t>& face,
                     std::vector<Entry>& out) {
  out.clear();
  const std::uint32_t* s = cols.row(c);
  face.resize(rows.width);
  for (std::size_t drop = 0; drop < cols.width; ++drop) {
    std::size_t k = 0;
    for (std::size_t t = 0; t < cols.width; ++t)
      if (t != drop) face[k++] = s[t];
    out.emplace_back(find_row(rows, face.data()), drop % 2 == 0 ? 1 : -1);
  }
  std::sort(out.begin(), out.end());
}

struct Overflow {};

void combine_rational(std::vector<std::pair<std::size_t, Rational>>& col,
                      const std::vector<std::pair<std::size_t, Rational>>& other);
void combine_integer(std::vector<std::pair<std::size_t, std::int64_t>>& col,
                     const std::vector<std::pair<std::size_t, std::int64_t>>& other);

// Column reduction with lowest-row pivots over a coefficient type T; `fill`
// writes column c as sorted (row, value) pairs. Columns flagged in `skip`
// are known to reduce to zero. Returns the rank and marks the pivot rows.
template <class T, class Fill, class Combine>
std::size_t reduce(std::size_t row_count, std::size_t col_count, Fill fill, const std::vector<bool>& skip,
                   std::vector<bool>& pivots, Combine combine) {
  using Column = std::vector<std::pair<std::size_t, T>>;
  std::vector<Column> reduced;
  std::vector<std::size_t> owner(row_count, SIZE_MAX);
  pivots.assign(row_count, false);
  std::vector<Entry> entries;
  for (std::size_t c = 0; c < col_count; ++c) {
    if (!skip.empty() && skip[c]) continue;
    fill(c, entries);
    Column col;
    col.reserve(entries.size());
    for (auto [r, v] : entries) col.emplace_back(r, T(v));
    while (!col.empty()) {
      const std::size_t o = owner[col.back().first];
      if (o == SIZE_MAX) break;
      combine(col, reduced[o]);
    }
    if (col.empty()) continue;
    owner[col.back().first] = reduced.size();
    pivots[col.back().first] = true;
    reduced.push_back(std::move(col));
  }
  return reduced.size();
}

template <class Fill>
std::size_t exact_rank(std::size_t row_count, std::size_t col_count, Fill fill, const std::vector<bool>& skip,
                       std::vector<bool>& pivots) {
  try {
    return reduce<std::int64_t>(row_count, col_count, fill, skip, pivots, combine_integer);
  } catch (const Overflow&) {
    return reduce<Rational>(row_count, col_count, fill, skip, pivots, combine_rational);
  }
}

// col -= (col.low / other.low) * other over Q.
void combine_rational(std::vector<std::pair<std::size_t, Rational>>& col,
                      const std::vector<std::pair<std::size_t, Rational>>& other) {
  const Rational factor = col.back().second / other.back().second;
  std::vector<std::pair<std::size_t, Rational>> out;
  out.reserve(col.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < other.size()) {
    if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
      out.push_back(std::move(col[i++]));
    } else if (i == col.size() || other[j].first < col[i].first) {
      out.emplace_back(other[j].first, -factor * other[j].second);
      ++j;
    } else {
      Rational v = col[i].second - factor * other[j].second;
      if (v != 0) out.emplace_back(col[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  col = std::move(out);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Fraction-free: col = p * col - q * other, then divided by the content.
void combine_integer(std::vector<std::pair<std::size_t, std::int64_t>>& col,
                     const std::vector<std::pair<std::size_t, std::int64_t>>& other) {
  std::int64_t p = other.back().second, q = col.back().second;
  const std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  out.reserve(col.size() + other.size());
  std::size_t i = 0, j = 0;
  std::int64_t content = 0;
  while (i < col.size() || j < other.size()) {
    std::size_t row;
    std::int64_t v;
    if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
      row = col[i].first;
      v = checked_mul(p, col[i++].second);
    } else if (i == col.size() || other[j].first < col[i].first) {
      row = other[j].first;
      v = checked_sub(0, checked_mul(q, other[j++].second));
    } else {
      row = col[i].first;
      v = checked_sub(checked_mul(p, col[i++].second), checked_mul(q, other[j++].second));
    }
    if (v == 0) continue;
    out.emplace_back(row, v);
    content = std::gcd(content, v);
  }
  if (content > 1)
    for (auto& e : out) e.second /= content;
  col = std::move(out);
}

// Homology order: reduce d_q for q = dim .. 1, skipping columns cleared
// by pivots of d_{q+1}.
std::vector<std::size_t> ranks_by_boundary(const std::vector<FaceTable>& faces) {
  const int d = static_cast<int>(faces.size()) - 1;
  std::vector<std::size_t> ranks(d > 0 ? d : 0, 0);
  std::vector<bool> cleared;
  std::vector<std::uint32_t> face;
  for (int q = d; q >= 1; --q) {
    const FaceTable& rows = faces[q - 1];
    const FaceTable& cols = faces[q];
    auto fill = [&](std::size_t c, std::vector<Entry>& out) { boundary_column(rows, cols, c, face, out); };
    std::vector<bool> pivots;
    ranks[q - 1] = exact_rank(rows.size(), cols.size(), fill, cleared, pivots);
    cleared = std::move(pivots);
  }
  return ranks;
}

// Cohomology order: reduce the anti-transpose of d_q for q = 1 .. dim,
// skipping columns cleared by pivots of the previous coboundary.
std::vector<std::size_t> ranks_by_coboundary(const std::vector<FaceTable>& faces) {
  const int d = static_cast<int>(faces.size()) - 1;
  std::vector<std::size_t> ranks(d > 0 ? d : 0, 0);
  std::vector<bool> cleared;
  std::vector<std::uint32_t> face;
  std::vector<Entry> col;
  for (int q = 1; q <= d; ++q) {
    const FaceTable& low = faces[q - 1];
    const FaceTable& high = faces[q];
    const std::size_t nl = low.size(), nh = high.size();
    // cofaces[i] lists the q-simplices containing (q-1)-simplex i.
    std::vector<std::vector<Entry>> cofaces(nl);
    for (std::size_t j = 0; j < nh; ++j) {
      boundary_column(low, high, j, face, col);
      for (auto [i, v] : col) cofaces[i].emplace_back(nh - 1 - j, v);
    }
    auto fill = [&](std::size_t c, std::vector<Entry>& out) {
      out = cofaces[nl - 1 - c];
      std::sort(out.begin(), out.end());
    };
    std::vector<bool> skip(nl, false);
    if (!cleared.empty())
      for (std::size_t i = 0; i < nl; ++i) skip[nl - 1 - i] = cleared[i];
    std::vector<bool> pivots;
    ranks[q - 1] = exact_rank(nh, nl, fill, skip, pivots);
    cleared.assign(nh, false);
    for (std::size_t r = 0; r < nh; ++r)
      if (pivots[r]) cleared[nh - 1 - r] = true;
  }
  return ranks;
}

// Reducing coboundaries has less fill-in on large order complexes but pays
// for building coface lists, which dominates on small ones.
constexpr std::size_t kCoboundaryThreshold = 50000;

std::vector<std::size_t> ranks_of(const std::vector<FaceTable>& faces, RankMethod method) {
  if (method == RankMethod::Automatic) {
    std::size_t total = 0;
    for (const auto& t : faces) total += t.size();
    method = total >= kCoboundaryThreshold ? RankMethod::Coboundary : RankMethod::Boundary;
  }
  return method == RankMethod::Coboundary ? ranks_by_coboundary(faces) : ranks_by_boundary(faces);
}

std::vector<FaceTable> tables_of(const std::vector<std::vector<SimplicialComplex::Simplex>>& faces) {
  std::vector<FaceTable> out(faces.size());
  for (std::size_t k = 0; k < faces.size(); ++k) {
    out[k].width = k + 1;
    out[k].vertices.reserve(faces[k].size() * (k + 1));
    for (const auto& s : faces[k]) out[k].vertices.insert(out[k].vertices.end(), s.begin(), s.end());
  }
  return out;
}

}  // namespace

std::vector<std::size_t> boundary_ranks(const SimplicialComplex& k) { return ranks_of(tables_of(k.faces()), RankMethod::Automatic); }

BettiVector betti(const SimplicialComplex& k) { return betti_of_faces(tables_of(k.faces())); }

BettiVector betti_of_faces(const std::vector<FaceTable>& tables, RankMethod method) {
  const auto ranks = ranks_of(tables, method);
  BettiVector b(tables.size(), 0);
  for (std::size_t q = 0; q < tables.size(); ++q) {
    const std::size_t in = q >= 1 ? ranks[q - 1] : 0;           // rank d_q
    const std::size_t out = q < ranks.size() ? ranks[q] : 0;    // rank d_{q+1}
    b[q] = tables[q].size() - in - out;
  }
  return b;
}

long euler_characteristic(const std::vector<std::size_t>& counts) {
  long chi = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(counts[i]);
  return chi;
}

BettiVector trimmed(BettiVector b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

bool has_point_homology(const BettiVector& b) { return trimmed(b) == BettiVector{1}; }

BettiVector sphere_betti(int k) {
  if (k < 0) return {};
  if (k == 0) return {2};
  BettiVector b(static_cast<std::size_t>(k + 1), 0);
  b.front() = 1;
  b.back() = 1;
  return b;
}

bool has_sphere_homology(const BettiVector& b, int k) { return trimmed(b) == sphere_betti(k); }

}  // namespace schubcell
