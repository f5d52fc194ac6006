#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace xmk {

/// An element of (1/2)Z stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  constexpr HalfInteger(int whole) : twice_(2 * whole) {}  // NOLINT(google-explicit-constructor)

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  double value() const { return twice_ / 2.0; }

  HalfInteger& operator+=(HalfInteger o) {
    twice_ += o.twice_;
    return *this;
  }
  HalfInteger& operator-=(HalfInteger o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend HalfInteger operator+(HalfInteger a, HalfInteger b) { return a += b; }
  friend HalfInteger operator-(HalfInteger a, HalfInteger b) { return a -= b; }
  friend HalfInteger operator*(int k, HalfInteger a) { return from_twice(k * a.twice_); }
  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

  /// "3", "25/2".
  std::string to_string() const;

 private:
  int twice_ = 0;
};

/// Polynomial in t with exponents in (1/2)Z>=0, keyed by doubled exponent.
class HalfGradedPoly {
 public:
  HalfGradedPoly() = default;

  static HalfGradedPoly monomial(HalfInteger exponent, std::int64_t coeff = 1);

  void add_term(HalfInteger exponent, std::int64_t coeff = 1);
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(HalfInteger exponent) const;
  std::int64_t value_at_one() const;
  bool has_integer_exponents() const;

  /// t -> t^2.
  HalfGradedPoly substitute_square() const;
  /// Multiply by t^k.
  HalfGradedPoly shifted(HalfInteger k) const;

  HalfGradedPoly& operator+=(const HalfGradedPoly& o);
  friend HalfGradedPoly operator+(HalfGradedPoly a, const HalfGradedPoly& b) { return a += b; }
  friend HalfGradedPoly operator*(const HalfGradedPoly& a, const HalfGradedPoly& b);
  friend HalfGradedPoly operator*(std::int64_t k, const HalfGradedPoly& a);
  friend bool operator==(const HalfGradedPoly&, const HalfGradedPoly&) = default;

  /// "t^{1/2} + 2t^3", terms by increasing exponent; "0" when empty.
  std::string to_string() const;
  static HalfGradedPoly parse(const std::string& text);

 private:
  std::map<int, std::int64_t> terms_;
};

}  // namespace xmk
