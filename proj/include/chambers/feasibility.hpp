#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fourier_motzkin.hpp"
#include "linalg.hpp"
#include "min_norm_point.hpp"
#include "rational.hpp"

namespace chambers {

enum class FeasibilityMethod { min_norm, fourier_motzkin };

// Outcome of deciding {a . x > 0 for every row a}. Exactly one of the two
// certificates is populated: a witness direction when feasible, or a convex
// combination of rows summing to zero when not (the Gordan alternative).
// The Fourier-Motzkin route proves infeasibility by elimination and leaves
// the combination empty.
template <typename T>
struct StrictFeasibility {
  bool feasible = false;
  Vector<T> witness;
  std::vector<std::size_t> combination_support;
  std::vector<T> combination;
};

template <typename T>
StrictFeasibility<T> strict_feasibility_min_norm(const std::vector<Vector<T>>& rows,
                                                 std::size_t dim) {
  StrictFeasibility<T> out;
  if (rows.empty()) {
    out.feasible = true;
    out.witness.assign(dim, T(0));
    return out;
  }
  MinNormResult<T> mn = min_norm_point(rows);
  if (sign_of(mn.norm_squared) > 0) {
    // <x*, a> >= |x*|^2 > 0 for every row a, so x* itself is a witness.
    out.feasible = true;
    out.witness = std::move(mn.point);
  } else {
    out.feasible = false;
    out.combination_support = std::move(mn.support);
    out.combination = std::move(mn.coefficients);
  }
  return out;
}

template <typename T>
StrictFeasibility<T> strict_feasibility_fm(const std::vector<Vector<T>>& rows,
                                           std::size_t dim) {
  StrictFeasibility<T> out;
  LinearSystem<T> sys = strict_homogeneous_system(rows);
  sys.num_vars = dim;
  FeasibilityResult<T> res = fm_feasible(sys);
  out.feasible = res.feasible;
  out.witness = std::move(res.witness);
  return out;
}

template <typename T>
StrictFeasibility<T> strict_feasibility(const std::vector<Vector<T>>& rows, std::size_t dim,
                                        FeasibilityMethod method = FeasibilityMethod::min_norm) {
  for (const auto& r : rows)
    if (r.size() != dim) throw std::invalid_argument("strict_feasibility: ragged rows");
  switch (method) {
    case FeasibilityMethod::min_norm: return strict_feasibility_min_norm(rows, dim);
    case FeasibilityMethod::fourier_motzkin: return strict_feasibility_fm(rows, dim);
  }
  throw std::logic_error("strict_feasibility: bad method");
}

}  // namespace chambers
