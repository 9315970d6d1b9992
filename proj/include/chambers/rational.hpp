#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chambers {

// Exact scalar used throughout the library. The algorithm headers are
// templated on the scalar type; Rat is the canonical instantiation.
using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(n, d) does not canonicalize; this does.
inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q" with optional sign, in base 10.
inline Rat parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

template <typename T>
int sign_of(const T& x) {
  return x > T(0) ? 1 : (x < T(0) ? -1 : 0);
}

inline int sign_of(const Rat& x) { return sgn(x); }

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_value(const Rat& q) {
  return std::hash<std::string>{}(q.get_str());
}

// Scalar-dependent knobs used by the elimination and pivoting code.
// The primary template is suitable for floating point; the Rat
// specialization keeps vectors in primitive integer form so that
// syntactically equal constraints stay equal.
template <typename T>
struct field_traits {
  static constexpr bool exact = false;
  // Scale a row by a positive factor into a preferred form.
  static void normalize_row(std::vector<T>& coeffs, T& rhs) {
    T biggest(0);
    for (const T& c : coeffs) {
      T a = c < T(0) ? T(-c) : c;
      if (a > biggest) biggest = a;
    }
    if (biggest == T(0)) return;
    for (T& c : coeffs) c = c / biggest;
    rhs = rhs / biggest;
  }
};

template <>
struct field_traits<Rat> {
  static constexpr bool exact = true;
  static void normalize_row(std::vector<Rat>& coeffs, Rat& rhs) {
    Int den(1), num(0);
    for (const Rat& c : coeffs) den = lcm(den, c.get_den());
    den = lcm(den, rhs.get_den());
    for (const Rat& c : coeffs) num = gcd(num, Int(c.get_num() * (den / c.get_den())));
    num = gcd(num, Int(rhs.get_num() * (den / rhs.get_den())));
    if (num == 0) return;  // all-zero row
    Rat factor(den, num);  // positive since num = gcd >= 0, den = lcm > 0
    factor.canonicalize();
    for (Rat& c : coeffs) c *= factor;
    rhs *= factor;
  }
};

}  // namespace chambers
