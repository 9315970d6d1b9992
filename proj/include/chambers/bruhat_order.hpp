#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "coxeter_group.hpp"
#include "rational.hpp"

namespace chambers {

// Bruhat comparison by the lifting property: for a left descent s of w,
//   u <= w  iff  su <= sw (when s descends u)  or  u <= sw (otherwise).
// Runs in O(length(w)) group operations, no enumeration.
inline bool bruhat_leq(const CoxeterGroup& W, Element u, Element w) {
  std::size_t lu = W.length(u);
  std::size_t lw = W.length(w);
  while (true) {
    if (lu > lw) return false;
    if (lu == 0) return true;
    std::size_t s = W.left_descents(w).front();
    Element gen = W.simple(s);
    Element su = W.multiply(gen, u);
    if (W.length(su) < lu) {
      u = std::move(su);
      --lu;
    }
    w = W.multiply(gen, w);
    --lw;
  }
}

// Bruhat order on the whole (enumerated) group: cover relations via
// reflections, reachability closed by length order into bit rows.
class BruhatOrder {
 public:
  explicit BruhatOrder(const CoxeterGroup& W) {
    elements_ = W.all_elements();  // BFS order, nondecreasing length
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      index_.emplace(elements_[i], i);
      lengths_.push_back(W.length(elements_[i]));
    }

    std::vector<Element> reflections;
    for (std::uint32_t p = 0; p < W.roots().num_positive(); ++p)
      reflections.push_back(W.reflection(p));

    // u is covered by ut exactly when length goes up by one.
    covered_by_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (const Element& t : reflections) {
        Element v = W.multiply(elements_[i], t);
        std::size_t j = index_.at(v);
        if (lengths_[j] == lengths_[i] + 1) covered_by_[j].push_back(i);
      }
    }

    const std::size_t words = (elements_.size() + 63) / 64;
    down_.assign(elements_.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      down_[i][i / 64] |= std::uint64_t(1) << (i % 64);
      for (std::size_t c : covered_by_[i])
        for (std::size_t wd = 0; wd < words; ++wd) down_[i][wd] |= down_[c][wd];
    }
  }

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t index_of(const Element& e) const { return index_.at(e); }
  std::size_t length(std::size_t i) const { return lengths_[i]; }
  const std::vector<std::size_t>& covered_by(std::size_t i) const { return covered_by_[i]; }

  bool leq(std::size_t u, std::size_t w) const {
    return (down_[w][u / 64] >> (u % 64)) & 1;
  }

  std::vector<std::size_t> interval(std::size_t u, std::size_t w) const {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < size(); ++v)
      if (leq(u, v) && leq(v, w)) members.push_back(v);
    return members;
  }

  // Moebius function of the interval [u, w].
  long moebius(std::size_t u, std::size_t w) const {
    if (!leq(u, w)) return 0;
    std::vector<std::size_t> members = interval(u, w);  // length-sorted
    std::unordered_map<std::size_t, long> mu;
    for (std::size_t v : members) {
      long acc = 0;
      for (std::size_t z : members)
        if (z != v && leq(u, z) && leq(z, v)) acc += mu.at(z);
      mu[v] = (v == u) ? 1 : -acc;
    }
    return mu.at(w);
  }

 private:
  std::vector<Element> elements_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
  std::vector<std::size_t> lengths_;
  std::vector<std::vector<std::size_t>> covered_by_;
  std::vector<std::vector<std::uint64_t>> down_;
};

}  // namespace chambers
