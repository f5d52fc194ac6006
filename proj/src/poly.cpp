#include "xmk/poly.hpp"

#include <cctype>
#include <stdexcept>

#include "xmk/partition.hpp"

namespace xmk {

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfGradedPoly HalfGradedPoly::monomial(HalfInteger exponent, std::int64_t coeff) {
  HalfGradedPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void HalfGradedPoly::add_term(HalfInteger exponent, std::int64_t coeff) {
  if (exponent.twice() < 0) throw DomainError("negative exponent");
  if (coeff == 0) return;
  auto& c = terms_[exponent.twice()];
  c += coeff;
  if (c == 0) terms_.erase(exponent.twice());
}

std::int64_t HalfGradedPoly::coefficient(HalfInteger exponent) const {
  auto it = terms_.find(exponent.twice());
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t HalfGradedPoly::value_at_one() const {
  std::int64_t s = 0;
  for (auto& [e, c] : terms_) s += c;
  return s;
}

bool HalfGradedPoly::has_integer_exponents() const {
  for (auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

HalfGradedPoly HalfGradedPoly::substitute_square() const {
  HalfGradedPoly p;
  for (auto& [e, c] : terms_) p.terms_[2 * e] = c;
  return p;
}

HalfGradedPoly HalfGradedPoly::shifted(HalfInteger k) const {
  HalfGradedPoly p;
  for (auto& [e, c] : terms_) p.add_term(HalfInteger::from_twice(e + k.twice()), c);
  return p;
}

HalfGradedPoly& HalfGradedPoly::operator+=(const HalfGradedPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(HalfInteger::from_twice(e), c);
  return *this;
}

HalfGradedPoly operator*(const HalfGradedPoly& a, const HalfGradedPoly& b) {
  HalfGradedPoly p;
  for (auto& [e1, c1] : a.terms_)
    for (auto& [e2, c2] : b.terms_) p.add_term(HalfInteger::from_twice(e1 + e2), c1 * c2);
  return p;
}

HalfGradedPoly operator*(std::int64_t k, const HalfGradedPoly& a) {
  HalfGradedPoly p;
  for (auto& [e, c] : a.terms_) p.add_term(HalfInteger::from_twice(e), k * c);
  return p;
}

std::string HalfGradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [e, c] : terms_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a);
    s += "t";
    if (e == 2) continue;
    if (e % 2 != 0)
      s += "^{" + std::to_string(e) + "/2}";
    else if (e / 2 < 10)
      s += "^" + std::to_string(e / 2);
    else
      s += "^{" + std::to_string(e / 2) + "}";
  }
  return s;
}

HalfGradedPoly HalfGradedPoly::parse(const std::string& text) {
  HalfGradedPoly p;
  std::size_t k = 0;
  auto skip = [&] {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  };
  auto number = [&]() -> std::int64_t {
    std::size_t start = k;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    if (k == start) throw ParseError("expected a number in polynomial", k);
    return std::stoll(text.substr(start, k - start));
  };
  skip();
  if (text.substr(k) == "0") return p;
  int sign = 1;
  while (k < text.size()) {
    skip();
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
      sign = text[k] == '-' ? -1 : 1;
      ++k;
      skip();
    }
    std::int64_t coeff = 1;
    bool has_coeff = false;
    if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
      coeff = number();
      has_coeff = true;
    }
    int twice = 0;
    if (k < text.size() && text[k] == 't') {
      ++k;
      twice = 2;
      if (k < text.size() && text[k] == '^') {
        ++k;
        bool brace = k < text.size() && text[k] == '{';
        if (brace) ++k;
        std::int64_t num = number();
        std::int64_t den = 1;
        if (k < text.size() && text[k] == '/') {
          ++k;
          den = number();
        }
        if (brace) {
          if (k >= text.size() || text[k] != '}') throw ParseError("unterminated exponent", k);
          ++k;
        }
        if (den != 1 && den != 2) throw ParseError("exponent denominator must be 1 or 2", k);
        twice = static_cast<int>(den == 1 ? 2 * num : num);
      }
    } else if (!has_coeff) {
      throw ParseError("expected a term", k);
    }
    p.add_term(HalfInteger::from_twice(twice), sign * coeff);
    sign = 1;
    skip();
  }
  return p;
}

}  // namespace xmk
