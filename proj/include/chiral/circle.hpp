#pragma once

#include <numeric>
#include <string>

#include "chiral/common.hpp"

namespace chiral {

// A root of unity exp(2*pi*i * num/den), stored as the reduced angle num/den
// with 0 <= num < den. Restricting the circle to rational angles keeps every
// equality test in the twist machinery exact; no floating point anywhere.
struct CircleValue {
  long long num = 0;
  long long den = 1;

  CircleValue() = default;
  CircleValue(long long n, long long d) : num(n), den(d) { normalize(); }

  static CircleValue one() { return CircleValue(); }
  // exp(2*pi*i * k/m)
  static CircleValue root(long long k, long long m) { return CircleValue(k, m); }
  static CircleValue minus_one() { return CircleValue(1, 2); }

  void normalize() {
    if (den <= 0) throw DomainError("circle value with nonpositive denominator");
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_one() const { return num == 0; }

  friend CircleValue circle_mul(const CircleValue& a, const CircleValue& b) {
    long long g = std::gcd(a.den, b.den);
    long long l = a.den / g * b.den;
    return CircleValue(a.num * (l / a.den) + b.num * (l / b.den), l);
  }
  friend CircleValue circle_conj(const CircleValue& a) {
    return CircleValue(a.den - a.num, a.den);
  }
  friend bool operator==(const CircleValue& a, const CircleValue& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const CircleValue& a, const CircleValue& b) { return !(a == b); }
  friend bool operator<(const CircleValue& a, const CircleValue& b) {
    return a.num * b.den < b.num * a.den;  // angle order, used only for canonical sorting
  }

  std::string str() const {
    if (num == 0) return "1";
    if (num * 2 == den) return "-1";
    return "e(" + std::to_string(num) + "/" + std::to_string(den) + ")";
  }
};

inline bool circle_eq(const CircleValue& a, const CircleValue& b) { return a == b; }

}  // namespace chiral
