#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace chambers {

template <typename T>
struct MinNormResult {
  Vector<T> point;                    // the minimum-norm point of the hull
  std::vector<std::size_t> support;   // indices of the supporting corral
  std::vector<T> coefficients;        // convex weights on the support, all > 0
  T norm_squared = T(0);
};

namespace wolfe_detail {

// Affine minimizer over the points indexed by S, via the KKT system
//   [ Gram  1 ] [mu]   [0]
//   [ 1^T   0 ] [nu] = [1].
// S affinely independent keeps the system nonsingular.
template <typename T>
std::vector<T> affine_minimizer_weights(const std::vector<Vector<T>>& pts,
                                        const std::vector<std::size_t>& support) {
  const std::size_t k = support.size();
  Matrix<T> kkt(k + 1, k + 1);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) kkt(a, b) = dot(pts[support[a]], pts[support[b]]);
    kkt(a, k) = T(1);
    kkt(k, a) = T(1);
  }
  Vector<T> rhs(k + 1, T(0));
  rhs[k] = T(1);
  auto sol = solve(kkt, rhs);
  if (!sol || rank(kkt) != k + 1)
    throw std::logic_error("min_norm_point: corral lost affine independence");
  sol->resize(k);
  return *std::move(sol);
}

template <typename T>
Vector<T> combine(const std::vector<Vector<T>>& pts, const std::vector<std::size_t>& support,
                  const std::vector<T>& weights) {
  Vector<T> x(pts.front().size(), T(0));
  for (std::size_t a = 0; a < support.size(); ++a)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += weights[a] * pts[support[a]][j];
  return x;
}

}  // namespace wolfe_detail

// Wolfe's minimum-norm-point algorithm over the convex hull of `points`,
// exact for ordered-field scalars. The corral invariant (the current point is
// the affine minimizer of its support, with strictly positive weights) is
// maintained exactly, so no tolerances appear anywhere.
template <typename T>
MinNormResult<T> min_norm_point(const std::vector<Vector<T>>& points) {
  if (points.empty()) throw std::invalid_argument("min_norm_point: no points");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("min_norm_point: ragged points");

  // Start from the point of smallest norm.
  std::size_t start = 0;
  T best = norm_squared(points[0]);
  for (std::size_t j = 1; j < points.size(); ++j) {
    T n2 = norm_squared(points[j]);
    if (n2 < best) {
      best = n2;
      start = j;
    }
  }

  std::vector<std::size_t> support{start};
  std::vector<T> weights{T(1)};
  Vector<T> x = points[start];

  // Each major cycle strictly lowers |x|^2 and corrals are finite, so the
  // loop terminates; a non-decrease would mean a broken invariant.
  bool have_prev = false;
  T prev_norm(0);
  while (true) {
    T xx = norm_squared(x);
    if (have_prev && !(xx < prev_norm))
      throw std::logic_error("min_norm_point: norm failed to decrease");
    prev_norm = xx;
    have_prev = true;

    // Most violating point of the optimality condition <x, p> >= <x, x>.
    std::size_t entering = points.size();
    T entering_value = xx;
    for (std::size_t j = 0; j < points.size(); ++j) {
      T v = dot(x, points[j]);
      if (v < entering_value) {
        entering_value = std::move(v);
        entering = j;
      }
    }
    if (entering == points.size())
      return {x, support, weights, xx};  // optimal

    support.push_back(entering);
    weights.push_back(T(0));

    // Minor cycles: pull the point to the affine minimizer of the corral,
    // dropping support members whose weight reaches zero.
    while (true) {
      std::vector<T> target = wolfe_detail::affine_minimizer_weights(points, support);
      bool interior = true;
      for (const T& w : target)
        if (sign_of(w) <= 0) {
          interior = false;
          break;
        }
      if (interior) {
        weights = std::move(target);
        x = wolfe_detail::combine(points, support, weights);
        break;
      }

      // Largest step toward the minimizer that keeps all weights nonnegative.
      bool have_theta = false;
      T theta(0);
      for (std::size_t a = 0; a < support.size(); ++a) {
        if (sign_of(target[a]) > 0) continue;
        T ratio = T(weights[a] / (weights[a] - target[a]));
        if (!have_theta || ratio < theta) {
          theta = std::move(ratio);
          have_theta = true;
        }
      }
      if (!have_theta) throw std::logic_error("min_norm_point: no blocking weight");

      std::vector<std::size_t> kept_support;
      std::vector<T> kept_weights;
      for (std::size_t a = 0; a < support.size(); ++a) {
        T w = T(weights[a] + theta * (target[a] - weights[a]));
        if (sign_of(w) > 0) {
          kept_support.push_back(support[a]);
          kept_weights.push_back(std::move(w));
        }
      }
      if (kept_support.empty())
        throw std::logic_error("min_norm_point: line search emptied the corral");
      support = std::move(kept_support);
      weights = std::move(kept_weights);
      x = wolfe_detail::combine(points, support, weights);
    }
  }
}

// Nearest point of conv(points) to `query`, by translating the hull.
template <typename T>
MinNormResult<T> nearest_point(const std::vector<Vector<T>>& points, const Vector<T>& query) {
  std::vector<Vector<T>> shifted;
  shifted.reserve(points.size());
  for (const auto& p : points) shifted.push_back(difference(p, query));
  MinNormResult<T> res = min_norm_point(shifted);
  res.point = sum(res.point, query);  // norm_squared stays the squared distance
  return res;
}

}  // namespace chambers
