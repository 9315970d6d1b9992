#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "cartan.hpp"
#include "rational.hpp"
#include "root_system.hpp"

namespace chambers {

// A group element, faithfully represented by the permutation it induces on
// the root set (image[i] = index of w(root i)).
struct Element {
  std::vector<std::uint32_t> image;
  bool operator==(const Element& o) const = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    std::size_t h = 1469598103934665603ULL;
    for (std::uint32_t v : e.image) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterType type) : rs_(type) {}

  const RootSystem& roots() const { return rs_; }
  CoxeterType type() const { return rs_.type(); }
  std::size_t rank() const { return rs_.rank(); }
  Int order() const { return group_order(rs_.type()); }

  Element identity() const {
    Element e;
    e.image.resize(rs_.num_roots());
    for (std::uint32_t i = 0; i < e.image.size(); ++i) e.image[i] = i;
    return e;
  }

  Element simple(std::size_t s) const {
    if (s >= rank()) throw std::invalid_argument("CoxeterGroup: bad generator index");
    Element e;
    e.image.resize(rs_.num_roots());
    for (std::uint32_t i = 0; i < e.image.size(); ++i) e.image[i] = rs_.apply_simple(s, i);
    return e;
  }

  // The reflection through the hyperplane of the given root.
  Element reflection(std::uint32_t root) const { return Element{rs_.reflection_table(root)}; }

  Element multiply(const Element& a, const Element& b) const {
    Element r;
    r.image.resize(rs_.num_roots());
    for (std::uint32_t i = 0; i < r.image.size(); ++i) r.image[i] = a.image[b.image[i]];
    return r;
  }

  Element inverse(const Element& a) const {
    Element r;
    r.image.resize(rs_.num_roots());
    for (std::uint32_t i = 0; i < r.image.size(); ++i) r.image[a.image[i]] = i;
    return r;
  }

  std::uint32_t apply(const Element& a, std::uint32_t root) const { return a.image[root]; }

  bool is_identity(const Element& a) const {
    for (std::uint32_t i = 0; i < a.image.size(); ++i)
      if (a.image[i] != i) return false;
    return true;
  }

  std::size_t length(const Element& a) const {
    std::size_t len = 0;
    for (std::uint32_t p = 0; p < rs_.num_positive(); ++p)
      if (!rs_.is_positive(a.image[p])) ++len;
    return len;
  }

  // Phi(w) = {positive roots sent negative by w}; |Phi(w)| = length(w).
  std::vector<std::uint32_t> inversions(const Element& a) const {
    std::vector<std::uint32_t> inv;
    for (std::uint32_t p = 0; p < rs_.num_positive(); ++p)
      if (!rs_.is_positive(a.image[p])) inv.push_back(p);
    return inv;
  }

  std::vector<bool> inversion_mask(const Element& a) const {
    std::vector<bool> mask(rs_.num_positive(), false);
    for (std::uint32_t p = 0; p < rs_.num_positive(); ++p)
      if (!rs_.is_positive(a.image[p])) mask[p] = true;
    return mask;
  }

  // {s : length(w s) < length(w)}, i.e. w(alpha_s) < 0.
  std::vector<std::size_t> right_descents(const Element& a) const {
    std::vector<std::size_t> d;
    for (std::size_t s = 0; s < rank(); ++s)
      if (!rs_.is_positive(a.image[rs_.simple_root_index(s)])) d.push_back(s);
    return d;
  }

  std::vector<std::size_t> left_descents(const Element& a) const {
    return right_descents(inverse(a));
  }

  Element from_word(const std::vector<std::size_t>& word) const {
    Element w = identity();
    for (std::size_t s : word) w = multiply(w, simple(s));
    return w;
  }

  bool is_reduced(const std::vector<std::size_t>& word) const {
    return length(from_word(word)) == word.size();
  }

  // Lexicographically smallest reduced word: the valid first letters of a
  // reduced word are exactly the left descents, so a greedy scan works.
  std::vector<std::size_t> canonical_word(const Element& a) const {
    std::vector<std::size_t> word;
    Element w = a;
    while (!is_identity(w)) {
      Element w_inv = inverse(w);
      std::size_t s = rank();
      for (std::size_t i = 0; i < rank(); ++i) {
        if (!rs_.is_positive(w_inv.image[rs_.simple_root_index(i)])) {
          s = i;
          break;
        }
      }
      if (s == rank()) throw std::logic_error("canonical_word: no descent on non-identity");
      word.push_back(s);
      w = multiply(simple(s), w);
    }
    return word;
  }

  // All reduced words, by backtracking over left descents. The count can be
  // large; callers gate the element length.
  std::vector<std::vector<std::size_t>> all_reduced_words(const Element& a) const {
    if (is_identity(a)) return {{}};
    std::vector<std::vector<std::size_t>> words;
    Element a_inv = inverse(a);
    for (std::size_t s = 0; s < rank(); ++s) {
      if (rs_.is_positive(a_inv.image[rs_.simple_root_index(s)])) continue;
      for (auto& tail : all_reduced_words(multiply(simple(s), a))) {
        tail.insert(tail.begin(), s);
        words.push_back(std::move(tail));
      }
    }
    return words;
  }

  Element longest_element() const {
    Element w = identity();
    while (true) {
      std::size_t s = rank();
      for (std::size_t i = 0; i < rank(); ++i) {
        if (rs_.is_positive(w.image[rs_.simple_root_index(i)])) {
          s = i;
          break;
        }
      }
      if (s == rank()) return w;  // every simple is a descent
      w = multiply(w, simple(s));
    }
  }

  // Breadth-first over right multiplication; the result is sorted by length.
  std::vector<Element> all_elements() const {
    std::vector<Element> elements{identity()};
    std::unordered_set<Element, ElementHash> seen{elements.front()};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      std::size_t at = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < rank(); ++s) {
        Element next = multiply(elements[at], simple(s));
        if (seen.insert(next).second) {
          elements.push_back(next);
          queue.push_back(elements.size() - 1);
        }
      }
    }
    return elements;
  }

 private:
  RootSystem rs_;
};

}  // namespace chambers
