#include "schubcell/sign_vector.hpp"

#include <stdexcept>

namespace schubcell {

SignVector SignVector::parse(std::string_view text) {
  if (text.size() > kMaxGroundSize) throw std::invalid_argument("sign vector too long");
  SignVector x;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '+': x.plus |= CoordSet{1} << i; break;
      case '-': x.minus |= CoordSet{1} << i; break;
      case '0': break;
      default: throw std::invalid_argument("sign vector: unexpected character '" + std::string(1, text[i]) + "'");
    }
  }
  return x;
}

std::string SignVector::str(std::size_t n) const {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) s[i] = contains(plus, i) ? '+' : contains(minus, i) ? '-' : '0';
  return s;
}

SignVector sign_of(const RationalVector& v) {
  if (v.size() > kMaxGroundSize) throw std::invalid_argument("sign_of: vector too long");
  SignVector x;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0) x.plus |= CoordSet{1} << i;
    if (v[i] < 0) x.minus |= CoordSet{1} << i;
  }
  return x;
}

bool lex_less(SignVector a, SignVector b) {
  const CoordSet diff = (a.plus ^ b.plus) | (a.minus ^ b.minus);
  if (diff == 0) return false;
  const CoordSet bit = diff & (~diff + 1);
  auto rank = [bit](SignVector x) { return (x.plus & bit) ? 1 : (x.minus & bit) ? 2 : 0; };
  return rank(a) < rank(b);
}

}  // namespace schubcell
