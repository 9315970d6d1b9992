#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cartan.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace chambers {

// The full root set of a finite crystallographic type, generated from the
// simple roots by closing under simple reflections. Roots are stored by
// their integer coordinates in the simple-root basis; indices [0, P) are the
// positive roots ordered by height, index P + k is the negative of k.
class RootSystem {
 public:
  explicit RootSystem(CoxeterType type)
      : type_(type), simple_sys_(simple_system(type)), cartan_(cartan_matrix(simple_sys_)) {
    generate();
  }

  CoxeterType type() const { return type_; }
  std::size_t rank() const { return simple_sys_.simple_roots.size(); }
  std::size_t dimension() const { return simple_sys_.dimension; }
  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive() const { return num_positive_; }
  const Matrix<long>& cartan() const { return cartan_; }
  const SimpleSystem& simple_roots() const { return simple_sys_; }

  const std::vector<long>& root_coords(std::uint32_t idx) const { return roots_[idx]; }
  bool is_positive(std::uint32_t idx) const { return idx < num_positive_; }

  std::uint32_t negative_of(std::uint32_t idx) const {
    return idx < num_positive_ ? idx + static_cast<std::uint32_t>(num_positive_)
                               : idx - static_cast<std::uint32_t>(num_positive_);
  }

  // Index of the simple root alpha_s; equals s by the height-sorted order.
  std::uint32_t simple_root_index(std::size_t s) const { return static_cast<std::uint32_t>(s); }

  std::uint32_t apply_simple(std::size_t s, std::uint32_t idx) const {
    return simple_action_[s][idx];
  }

  std::uint32_t index_of_coords(const std::vector<long>& coords) const {
    auto it = index_.find(key(coords));
    if (it == index_.end()) throw std::out_of_range("RootSystem: unknown root coordinates");
    return it->second;
  }

  Vector<Rat> ambient(std::uint32_t idx) const {
    Vector<Rat> v(dimension(), Rat(0));
    const auto& coords = roots_[idx];
    for (std::size_t j = 0; j < rank(); ++j)
      for (std::size_t k = 0; k < dimension(); ++k)
        v[k] += Rat(coords[j]) * simple_sys_.simple_roots[j][k];
    return v;
  }

  Rat inner(std::uint32_t a, std::uint32_t b) const { return dot(ambient(a), ambient(b)); }

  // s_alpha(beta) = beta - <beta, alpha^vee> alpha, as a root index.
  std::uint32_t reflect(std::uint32_t alpha, std::uint32_t beta) const {
    Rat num = Rat(Rat(2) * inner(beta, alpha) / inner(alpha, alpha));
    num.canonicalize();
    if (num.get_den() != 1) throw std::logic_error("RootSystem: non-integral reflection");
    long c = num.get_num().get_si();
    std::vector<long> coords = roots_[beta];
    for (std::size_t j = 0; j < rank(); ++j) coords[j] -= c * roots_[alpha][j];
    return index_of_coords(coords);
  }

  // Permutation of all roots induced by the reflection through root alpha.
  std::vector<std::uint32_t> reflection_table(std::uint32_t alpha) const {
    std::vector<std::uint32_t> table(num_roots());
    for (std::uint32_t b = 0; b < num_roots(); ++b) table[b] = reflect(alpha, b);
    return table;
  }

  std::size_t height(std::uint32_t idx) const {
    long h = 0;
    for (long c : roots_[idx]) h += c;
    return static_cast<std::size_t>(h < 0 ? -h : h);
  }

  std::uint32_t highest_root() const { return static_cast<std::uint32_t>(num_positive_ - 1); }

 private:
  static std::string key(const std::vector<long>& coords) {
    std::string k;
    for (long c : coords) {
      k += std::to_string(c);
      k += ',';
    }
    return k;
  }

  void generate() {
    const std::size_t n = rank();
    std::unordered_map<std::string, std::size_t> seen;
    std::vector<std::vector<long>> all;
    std::deque<std::size_t> work;

    auto add = [&](std::vector<long> coords) {
      std::string k = key(coords);
      if (seen.count(k)) return;
      seen.emplace(std::move(k), all.size());
      work.push_back(all.size());
      all.push_back(std::move(coords));
    };

    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long> e(n, 0);
      e[i] = 1;
      add(std::move(e));
    }
    while (!work.empty()) {
      std::size_t idx = work.front();
      work.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<long> c = all[idx];
        long pairing = 0;
        for (std::size_t i = 0; i < n; ++i) pairing += c[i] * cartan_(i, j);
        c[j] -= pairing;
        add(std::move(c));
      }
    }

    std::vector<std::vector<long>> positives;
    for (const auto& c : all) {
      bool nonneg = true, nonpos = true;
      for (long x : c) {
        if (x < 0) nonneg = false;
        if (x > 0) nonpos = false;
      }
      if (!nonneg && !nonpos)
        throw std::logic_error("RootSystem: root with mixed signs");
      if (nonneg) positives.push_back(c);
    }
    if (positives.size() != num_positive_roots(type_) || all.size() != 2 * positives.size())
      throw std::logic_error("RootSystem: unexpected root count for " + type_.to_string());

    std::sort(positives.begin(), positives.end(), [](const auto& a, const auto& b) {
      long ha = 0, hb = 0;
      for (long x : a) ha += x;
      for (long x : b) hb += x;
      if (ha != hb) return ha < hb;
      return a > b;  // puts alpha_1 before alpha_2 among height-one roots
    });

    num_positive_ = positives.size();
    roots_ = std::move(positives);
    roots_.reserve(2 * num_positive_);
    for (std::size_t i = 0; i < num_positive_; ++i) {
      std::vector<long> neg = roots_[i];
      for (long& x : neg) x = -x;
      roots_.push_back(std::move(neg));
    }

    index_.clear();
    for (std::size_t i = 0; i < roots_.size(); ++i)
      index_.emplace(key(roots_[i]), static_cast<std::uint32_t>(i));

    simple_action_.assign(rank(), {});
    for (std::size_t j = 0; j < rank(); ++j) {
      auto& table = simple_action_[j];
      table.resize(roots_.size());
      for (std::uint32_t idx = 0; idx < roots_.size(); ++idx) {
        std::vector<long> c = roots_[idx];
        long pairing = 0;
        for (std::size_t i = 0; i < rank(); ++i) pairing += c[i] * cartan_(i, j);
        c[j] -= pairing;
        table[idx] = index_.at(key(c));
      }
    }
  }

  CoxeterType type_;
  SimpleSystem simple_sys_;
  Matrix<long> cartan_;
  std::vector<std::vector<long>> roots_;
  std::size_t num_positive_ = 0;
  std::vector<std::vector<std::uint32_t>> simple_action_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace chambers
