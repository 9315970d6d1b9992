#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "coxeter_group.hpp"
#include "rational.hpp"

namespace chambers {

// Right weak order: u <= w iff every reduced word of u extends to one of w,
// equivalently the left inversion sets Phi(u^-1) are nested. Cover relations
// append one letter on the right.
inline bool weak_leq_right(const CoxeterGroup& W, const Element& u, const Element& w) {
  std::vector<bool> mu = W.inversion_mask(W.inverse(u));
  std::vector<bool> mw = W.inversion_mask(W.inverse(w));
  for (std::size_t p = 0; p < mu.size(); ++p)
    if (mu[p] && !mw[p]) return false;
  return true;
}

// Number of saturated chains from the identity to w in right weak order,
// which is also the number of reduced words of w.
inline Int count_maximal_chains(const CoxeterGroup& W, const Element& w) {
  std::unordered_map<Element, Int, ElementHash> memo;
  auto rec = [&](auto&& self, const Element& v) -> Int {
    if (W.is_identity(v)) return Int(1);
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    Int total(0);
    for (std::size_t s : W.right_descents(v)) total += self(self, W.multiply(v, W.simple(s)));
    memo.emplace(v, total);
    return total;
  };
  return rec(rec, w);
}

// The full lattice on an enumerated group, with meets and joins checked
// against the defining universal property.
class WeakOrder {
 public:
  explicit WeakOrder(const CoxeterGroup& W) {
    elements_ = W.all_elements();
    const std::size_t positives = W.roots().num_positive();
    const std::size_t words = (positives + 63) / 64;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      index_.emplace(elements_[i], i);
      lengths_.push_back(W.length(elements_[i]));
      std::vector<bool> mask = W.inversion_mask(W.inverse(elements_[i]));
      std::vector<std::uint64_t> bits(words, 0);
      for (std::size_t p = 0; p < positives; ++p)
        if (mask[p]) bits[p / 64] |= std::uint64_t(1) << (p % 64);
      inversion_bits_.push_back(std::move(bits));
    }
    covers_of_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t s = 0; s < W.rank(); ++s) {
        Element v = W.multiply(elements_[i], W.simple(s));
        std::size_t j = index_.at(v);
        if (lengths_[j] == lengths_[i] + 1) covers_of_[i].push_back(j);
      }
    }
  }

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t index_of(const Element& e) const { return index_.at(e); }
  std::size_t length(std::size_t i) const { return lengths_[i]; }
  const std::vector<std::size_t>& covers_of(std::size_t i) const { return covers_of_[i]; }

  bool leq(std::size_t u, std::size_t w) const {
    const auto& a = inversion_bits_[u];
    const auto& b = inversion_bits_[w];
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] & ~b[k]) return false;
    return true;
  }

  std::size_t meet(std::size_t u, std::size_t w) const {
    return extremum(u, w, /*lower=*/true);
  }
  std::size_t join(std::size_t u, std::size_t w) const {
    return extremum(u, w, /*lower=*/false);
  }

 private:
  std::size_t extremum(std::size_t u, std::size_t w, bool lower) const {
    std::vector<std::size_t> bound;
    for (std::size_t x = 0; x < size(); ++x) {
      bool in = lower ? (leq(x, u) && leq(x, w)) : (leq(u, x) && leq(w, x));
      if (in) bound.push_back(x);
    }
    if (bound.empty()) throw std::logic_error("WeakOrder: empty bound set");
    std::size_t best = bound.front();
    for (std::size_t x : bound) {
      bool better = lower ? lengths_[x] > lengths_[best] : lengths_[x] < lengths_[best];
      if (better) best = x;
    }
    for (std::size_t x : bound) {
      bool fine = lower ? leq(x, best) : leq(best, x);
      if (!fine) throw std::logic_error("WeakOrder: bound set has no extremum");
    }
    return best;
  }

  std::vector<Element> elements_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
  std::vector<std::size_t> lengths_;
  std::vector<std::vector<std::uint64_t>> inversion_bits_;
  std::vector<std::vector<std::size_t>> covers_of_;
};

}  // namespace chambers
