#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "arrangement.hpp"
#include "coxeter_group.hpp"
#include "feasibility.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "sign_vector.hpp"

namespace chambers {

// The arrangement of the reflecting hyperplanes of a finite Weyl group, with
// the dictionary between chambers and group elements: the chamber w C0 lies
// on the negative side of exactly the hyperplanes of Phi(w^-1), so its sign
// vector is the inversion mask of w^-1 and its wall-crossing distance from
// the fundamental chamber C0 is length(w).
class ReflectionArrangement {
 public:
  explicit ReflectionArrangement(CoxeterType type)
      : group_(type), arrangement_(make_arrangement(group_)) {}

  const CoxeterGroup& group() const { return group_; }
  const CentralArrangement<Rat>& arrangement() const { return arrangement_; }

  SignVector chamber_signs(const Element& w) const {
    Element w_inv = group_.inverse(w);
    const auto& rs = group_.roots();
    std::vector<Sign> signs(rs.num_positive(), Sign::positive);
    for (std::uint32_t p = 0; p < rs.num_positive(); ++p)
      if (!rs.is_positive(w_inv.image[p])) signs[p] = Sign::negative;
    return SignVector(std::move(signs));
  }

  Element element_of_chamber(const SignVector& sv,
                             FeasibilityMethod method = FeasibilityMethod::min_norm) const {
    StrictFeasibility<Rat> feas =
        strict_feasibility(arrangement_.oriented_rows(sv), arrangement_.dimension(), method);
    if (!feas.feasible)
      throw std::invalid_argument("element_of_chamber: sign vector names no chamber");
    return locate(feas.witness).element;
  }

  // Ambient reflection through the hyperplane of a simple root.
  Vector<Rat> reflect_simple(std::size_t s, const Vector<Rat>& x) const {
    const Vector<Rat>& alpha = group_.roots().simple_roots().simple_roots[s];
    Rat factor = Rat(Rat(2) * dot(alpha, x) / dot(alpha, alpha));
    Vector<Rat> y = x;
    for (std::size_t k = 0; k < y.size(); ++k) y[k] -= factor * alpha[k];
    return y;
  }

  // w . x through a reduced word for w.
  Vector<Rat> act(const Element& w, const Vector<Rat>& x) const {
    std::vector<std::size_t> word = group_.canonical_word(w);
    Vector<Rat> y = x;
    for (std::size_t i = word.size(); i-- > 0;) y = reflect_simple(word[i], y);
    return y;
  }

  struct Location {
    Element element;                 // point lies in closure(element . C0)
    std::vector<std::size_t> word;   // reduced word for element, crossing order
    Vector<Rat> representative;      // the W-orbit representative in closed C0
    bool interior = false;           // strictly inside the chamber
  };

  // Walks the point into the closed fundamental chamber, one wall at a time;
  // each step removes exactly one separating hyperplane, so the recorded
  // word is reduced and its length is the wall-crossing distance.
  Location locate(const Vector<Rat>& point) const {
    if (point.size() != arrangement_.dimension())
      throw std::invalid_argument("locate: point of wrong dimension");
    Location loc;
    loc.representative = point;
    while (true) {
      std::size_t descent = group_.rank();
      for (std::size_t s = 0; s < group_.rank(); ++s) {
        const Vector<Rat>& alpha = group_.roots().simple_roots().simple_roots[s];
        if (sign_of(dot(alpha, loc.representative)) < 0) {
          descent = s;
          break;
        }
      }
      if (descent == group_.rank()) break;
      loc.representative = reflect_simple(descent, loc.representative);
      loc.word.push_back(descent);
    }
    loc.element = group_.from_word(loc.word);
    loc.interior = true;
    for (std::size_t s = 0; s < group_.rank(); ++s) {
      const Vector<Rat>& alpha = group_.roots().simple_roots().simple_roots[s];
      if (sign_of(dot(alpha, loc.representative)) == 0) {
        loc.interior = false;
        break;
      }
    }
    return loc;
  }

  Vector<Rat> dominant_representative(const Vector<Rat>& point) const {
    return locate(point).representative;
  }

  // The W-orbit of a point, closed under simple reflections (no group
  // enumeration involved).
  std::vector<Vector<Rat>> orbit(const Vector<Rat>& point) const {
    auto key = [](const Vector<Rat>& v) {
      std::string k;
      for (const Rat& c : v) {
        k += to_string(c);
        k += '|';
      }
      return k;
    };
    std::vector<Vector<Rat>> points{point};
    std::unordered_set<std::string> seen{key(point)};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      std::size_t at = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < group_.rank(); ++s) {
        Vector<Rat> next = reflect_simple(s, points[at]);
        if (seen.insert(key(next)).second) {
          points.push_back(std::move(next));
          queue.push_back(points.size() - 1);
        }
      }
    }
    return points;
  }

  ChamberComplex<Rat> enumerate(FeasibilityMethod method = FeasibilityMethod::min_norm) const {
    return arrangement_.enumerate_chambers(method);
  }

 private:
  static CentralArrangement<Rat> make_arrangement(const CoxeterGroup& W) {
    std::vector<Vector<Rat>> normals;
    for (std::uint32_t p = 0; p < W.roots().num_positive(); ++p)
      normals.push_back(W.roots().ambient(p));
    return CentralArrangement<Rat>(W.roots().dimension(), std::move(normals));
  }

  CoxeterGroup group_;
  CentralArrangement<Rat> arrangement_;
};

}  // namespace chambers
