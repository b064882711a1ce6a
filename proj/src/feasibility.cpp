#include "schubcell/feasibility.hpp"

#include "schubcell/simplex.hpp"

#include <stdexcept>

namespace schubcell {

CoordSet SignPattern::positive() const {
  CoordSet s = 0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] > 0) s |= CoordSet{1} << i;
  return s;
}

CoordSet SignPattern::negative() const {
  CoordSet s = 0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] < 0) s |= CoordSet{1} << i;
  return s;
}

CoordSet SignPattern::zero() const { return full_set(entries.size()) & ~(positive() | negative()); }

SignPattern SignPattern::parse(std::string_view text) {
  SignPattern p;
  for (char c : text) {
    switch (c) {
      case '+': p.entries.push_back(1); break;
      case '-': p.entries.push_back(-1); break;
      case '0': p.entries.push_back(0); break;
      default: throw std::invalid_argument("sign pattern: unexpected character");
    }
  }
  return p;
}

SignPattern SignPattern::from_sets(std::size_t n, CoordSet plus, CoordSet minus) {
  SignPattern p;
  p.entries.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (contains(plus, i)) p.entries[i] = 1;
    if (contains(minus, i)) p.entries[i] = -1;
  }
  return p;
}

std::string SignPattern::str() const {
  std::string s;
  for (auto e : entries) s += e > 0 ? '+' : e < 0 ? '-' : '0';
  return s;
}

RationalVector primitive(RationalVector v) {
  mpz_class lcm_den = 1, gcd_num = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), x.get_num_mpz_t());
  }
  if (gcd_num == 0) return v;
  Rational scale(lcm_den, gcd_num);
  for (auto& x : v) x *= scale;
  return v;
}

FeasibilityResult sign_feasible(const Subspace& v, const SignPattern& p) {
  const std::size_t n = v.ground_size();
  if (p.size() != n) throw std::invalid_argument("sign_feasible: pattern length mismatch");

  const CoordSet support = p.positive() | p.negative();
  if (support == 0) return {FeasibilityWitness{RationalVector(n, 0)}};

  const Subspace w = vanish_solve(v, p.zero());
  const auto& basis = w.basis();
  const std::size_t k = w.dim();
  const auto supp = elements(support);

  // Primal: c = c+ - c-, slack >= 0, p_i (c B)_i - slack_i = 1 for i in the support.
  {
    RationalMatrix a;
    RationalVector b;
    for (std::size_t row = 0; row < supp.size(); ++row) {
      const std::size_t i = supp[row];
      const int s = p.entries[i];
      RationalVector r(2 * k + supp.size(), 0);
      for (std::size_t j = 0; j < k; ++j) {
        r[j] = s * basis[j][i];
        r[k + j] = -s * basis[j][i];
      }
      r[2 * k + row] = -1;
      a.push_back(std::move(r));
      b.push_back(1);
    }
    if (auto x = find_nonnegative_solution(a, b, 2 * k + supp.size())) {
      RationalVector c(k);
      for (std::size_t j = 0; j < k; ++j) c[j] = (*x)[j] - (*x)[k + j];
      return {FeasibilityWitness{w.combine(c)}};
    }
  }

  // Farkas alternative: y >= 0 on the support, sum y_i p_i B_i = 0, sum y_i = 1.
  RationalMatrix a(k + 1, RationalVector(supp.size(), 0));
  RationalVector b(k + 1, 0);
  for (std::size_t col = 0; col < supp.size(); ++col) {
    const std::size_t i = supp[col];
    for (std::size_t j = 0; j < k; ++j) a[j][col] = p.entries[i] * basis[j][i];
    a[k][col] = 1;
  }
  b[k] = 1;
  auto y = find_nonnegative_solution(a, b, supp.size());
  if (!y) throw std::logic_error("sign_feasible: neither system is solvable");

  // alpha annihilates V cap ker(pi_Z); lift it to an annihilator of V by
  // adjusting the Z coordinates, which leaves the support entries untouched.
  RationalVector alpha(n, 0);
  for (std::size_t col = 0; col < supp.size(); ++col) alpha[supp[col]] = p.entries[supp[col]] * (*y)[col];
  const auto zeros = elements(p.zero());
  RationalMatrix lift;
  RationalVector rhs;
  for (const auto& row : v.basis()) {
    RationalVector r;
    for (auto i : zeros) r.push_back(row[i]);
    lift.push_back(std::move(r));
    rhs.push_back(dot(alpha, row));
  }
  auto gamma = solve_linear(lift, rhs, zeros.size());
  if (!gamma) throw std::logic_error("sign_feasible: certificate does not lift");
  for (std::size_t z = 0; z < zeros.size(); ++z) alpha[zeros[z]] = -(*gamma)[z];
  return {FeasibilityCertificate{primitive(std::move(alpha))}};
}

bool check_witness(const Subspace& v, const SignPattern& p, const RationalVector& point) {
  if (point.size() != p.size() || !v.contains(point)) return false;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (sign(point[i]) != p.entries[i]) return false;
  return true;
}

bool check_certificate(const Subspace& v, const SignPattern& p, const RationalVector& functional) {
  if (functional.size() != p.size()) return false;
  for (const auto& row : v.basis())
    if (dot(functional, row) != 0) return false;
  bool strict = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.entries[i] == 0) continue;
    const int s = p.entries[i] * sign(functional[i]);
    if (s < 0) return false;
    strict = strict || s > 0;
  }
  return strict;
}

}  // namespace schubcell
