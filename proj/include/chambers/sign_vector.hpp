#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace chambers {

enum class Sign : std::int8_t { negative = -1, zero = 0, positive = 1 };

inline Sign opposite(Sign s) { return static_cast<Sign>(-static_cast<std::int8_t>(s)); }

inline char to_char(Sign s) {
  switch (s) {
    case Sign::negative: return '-';
    case Sign::zero: return '0';
    case Sign::positive: return '+';
  }
  throw std::logic_error("to_char: bad sign");
}

template <typename T>
Sign sign_of_value(const T& x) {
  return static_cast<Sign>(sign_of(x));
}

// Signs of a point relative to an ordered list of hyperplanes.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<Sign> signs) : signs_(std::move(signs)) {}
  explicit SignVector(std::size_t n, Sign fill = Sign::positive) : signs_(n, fill) {}

  static SignVector from_string(const std::string& s) {
    std::vector<Sign> v;
    v.reserve(s.size());
    for (char c : s) {
      if (c == '+') v.push_back(Sign::positive);
      else if (c == '-') v.push_back(Sign::negative);
      else if (c == '0') v.push_back(Sign::zero);
      else throw std::invalid_argument("SignVector: bad character in sign string");
    }
    return SignVector(std::move(v));
  }

  std::size_t size() const { return signs_.size(); }
  Sign operator[](std::size_t i) const { return signs_[i]; }
  void set(std::size_t i, Sign s) { signs_[i] = s; }

  SignVector flipped(std::size_t i) const {
    SignVector r = *this;
    r.signs_[i] = opposite(r.signs_[i]);
    return r;
  }

  bool strict() const {
    for (Sign s : signs_)
      if (s == Sign::zero) return false;
    return true;
  }

  std::size_t count(Sign s) const {
    std::size_t n = 0;
    for (Sign x : signs_)
      if (x == s) ++n;
    return n;
  }

  // Hyperplanes on which two sign vectors disagree with strict opposite signs.
  std::vector<std::size_t> separation_set(const SignVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("separation_set: size mismatch");
    std::vector<std::size_t> sep;
    for (std::size_t i = 0; i < size(); ++i)
      if (static_cast<int>(signs_[i]) * static_cast<int>(o.signs_[i]) < 0) sep.push_back(i);
    return sep;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(size());
    for (Sign x : signs_) s.push_back(to_char(x));
    return s;
  }

  bool operator==(const SignVector& o) const { return signs_ == o.signs_; }

  const std::vector<Sign>& signs() const { return signs_; }

 private:
  std::vector<Sign> signs_;
};

struct SignVectorHash {
  std::size_t operator()(const SignVector& sv) const {
    std::size_t h = 0x811c9dc5u;
    for (Sign s : sv.signs()) h = hash_combine(h, static_cast<std::size_t>(static_cast<std::int8_t>(s) + 2));
    return h;
  }
};

}  // namespace chambers
