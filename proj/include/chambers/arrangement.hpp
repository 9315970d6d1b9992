#pragma once

#include <cstddef>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "feasibility.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "sign_vector.hpp"

namespace chambers {

template <typename T>
struct Chamber {
  SignVector signs;
  Vector<T> witness;  // a point strictly inside
};

// Chambers plus the facet-adjacency graph discovered during enumeration.
template <typename T>
struct ChamberComplex {
  struct Wall {
    std::size_t from, to;    // chamber indices, from < to
    std::size_t hyperplane;  // the sign the two chambers differ in
  };

  std::vector<Chamber<T>> chambers;
  std::vector<Wall> walls;

  std::size_t index_of(const SignVector& sv) const {
    auto it = index_.find(sv);
    if (it == index_.end()) throw std::out_of_range("ChamberComplex: unknown sign vector");
    return it->second;
  }
  bool contains(const SignVector& sv) const { return index_.count(sv) != 0; }

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(chambers.size());
    for (const Wall& w : walls) {
      adj[w.from].push_back(w.to);
      adj[w.to].push_back(w.from);
    }
    return adj;
  }

  // Wall-crossing distance from the given chamber to every chamber.
  std::vector<std::size_t> distances_from(std::size_t source) const {
    std::vector<std::size_t> dist(chambers.size(), static_cast<std::size_t>(-1));
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    auto adj = adjacency();
    while (!queue.empty()) {
      std::size_t c = queue.front();
      queue.pop_front();
      for (std::size_t n : adj[c]) {
        if (dist[n] != static_cast<std::size_t>(-1)) continue;
        dist[n] = dist[c] + 1;
        queue.push_back(n);
      }
    }
    return dist;
  }

  void rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < chambers.size(); ++i) index_.emplace(chambers[i].signs, i);
  }

 private:
  std::unordered_map<SignVector, std::size_t, SignVectorHash> index_;
};

// A finite set of linear hyperplanes {x : a . x = 0} through the origin,
// each given by a nonzero normal vector.
template <typename T>
class CentralArrangement {
 public:
  CentralArrangement(std::size_t dimension, std::vector<Vector<T>> normals)
      : dimension_(dimension), normals_(std::move(normals)) {
    for (const auto& n : normals_) {
      if (n.size() != dimension_)
        throw std::invalid_argument("CentralArrangement: normal of wrong dimension");
      if (is_zero_vector(n))
        throw std::invalid_argument("CentralArrangement: zero normal");
    }
  }

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return normals_.size(); }
  const std::vector<Vector<T>>& normals() const { return normals_; }
  const Vector<T>& normal(std::size_t i) const { return normals_[i]; }

  SignVector sign_vector(const Vector<T>& x) const {
    std::vector<Sign> signs;
    signs.reserve(normals_.size());
    for (const auto& n : normals_) signs.push_back(sign_of_value(dot(n, x)));
    return SignVector(std::move(signs));
  }

  // A point avoiding every hyperplane, found on the moment curve
  // (1, t, t^2, ...): each normal vanishes on it for finitely many t only.
  Vector<T> generic_point() const {
    for (long t = 1;; ++t) {
      Vector<T> x(dimension_, T(0));
      T power(1);
      for (std::size_t j = 0; j < dimension_; ++j) {
        x[j] = power;
        power = T(power * T(t));
      }
      bool generic = true;
      for (const auto& n : normals_)
        if (sign_of(dot(n, x)) == 0) {
          generic = false;
          break;
        }
      if (generic) return x;
    }
  }

  // The strict system selecting the cell with the given (full) sign vector.
  std::vector<Vector<T>> oriented_rows(const SignVector& sv) const {
    if (sv.size() != normals_.size())
      throw std::invalid_argument("oriented_rows: sign vector size mismatch");
    std::vector<Vector<T>> rows;
    rows.reserve(normals_.size());
    for (std::size_t i = 0; i < normals_.size(); ++i) {
      if (sv[i] == Sign::zero)
        throw std::invalid_argument("oriented_rows: sign vector not strict");
      rows.push_back(sv[i] == Sign::positive ? normals_[i] : negated(normals_[i]));
    }
    return rows;
  }

  bool chamber_nonempty(const SignVector& sv,
                        FeasibilityMethod method = FeasibilityMethod::min_norm) const {
    return strict_feasibility(oriented_rows(sv), dimension_, method).feasible;
  }

  // Breadth-first wall crossing from the chamber of a generic point. Every
  // chamber of a central arrangement is reachable through facets, and two
  // chambers differing in exactly one sign share one, so single-sign flips
  // plus a feasibility oracle enumerate the whole complement. Parallel
  // normals would make chambers differ in two signs at once, so each
  // hyperplane must be listed exactly once.
  ChamberComplex<T> enumerate_chambers(
      FeasibilityMethod method = FeasibilityMethod::min_norm) const {
    if constexpr (field_traits<T>::exact) {
      std::unordered_map<std::string, std::size_t> seen;
      for (std::size_t i = 0; i < normals_.size(); ++i) {
        Vector<T> n = normals_[i];
        T zero(0);
        field_traits<T>::normalize_row(n, zero);
        std::string key, anti_key;
        for (const T& c : n) {
          key += to_string(c) + '|';
          anti_key += to_string(T(-c)) + '|';
        }
        if (seen.count(key) || seen.count(anti_key))
          throw std::invalid_argument("enumerate_chambers: parallel normals");
        seen.emplace(std::move(key), i);
      }
    }
    ChamberComplex<T> complex;
    Vector<T> seed = generic_point();
    complex.chambers.push_back({sign_vector(seed), seed});
    complex.rebuild_index();

    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      std::size_t current = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < normals_.size(); ++i) {
        SignVector flipped = complex.chambers[current].signs.flipped(i);
        if (complex.contains(flipped)) {
          std::size_t other = complex.index_of(flipped);
          if (current < other)
            complex.walls.push_back({current, other, i});
          continue;
        }
        StrictFeasibility<T> feas =
            strict_feasibility(oriented_rows(flipped), dimension_, method);
        if (!feas.feasible) continue;
        complex.chambers.push_back({flipped, std::move(feas.witness)});
        complex.rebuild_index();
        std::size_t fresh = complex.chambers.size() - 1;
        complex.walls.push_back({current, fresh, i});
        queue.push_back(fresh);
      }
    }
    return complex;
  }

 private:
  std::size_t dimension_;
  std::vector<Vector<T>> normals_;
};

}  // namespace chambers
