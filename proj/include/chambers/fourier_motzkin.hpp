#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace chambers {

enum class Rel { ge, gt };  // coeffs . x >= rhs  /  coeffs . x > rhs

template <typename T>
struct LinearConstraint {
  Vector<T> coeffs;
  Rel rel = Rel::ge;
  T rhs = T(0);

  bool satisfied_by(const Vector<T>& x) const {
    T lhs = dot(coeffs, x);
    return rel == Rel::ge ? lhs >= rhs : lhs > rhs;
  }
};

// Conjunction of linear inequalities over num_vars variables.
template <typename T>
struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint<T>> constraints;

  bool satisfied_by(const Vector<T>& x) const {
    for (const auto& c : constraints)
      if (!c.satisfied_by(x)) return false;
    return true;
  }
};

template <typename T>
LinearConstraint<T> constraint(Vector<T> coeffs, Rel rel, T rhs) {
  return LinearConstraint<T>{std::move(coeffs), rel, std::move(rhs)};
}

// System {a . x > 0} for each row a; the strict homogeneous form used for
// open chambers.
template <typename T>
LinearSystem<T> strict_homogeneous_system(const std::vector<Vector<T>>& rows) {
  LinearSystem<T> sys;
  if (!rows.empty()) sys.num_vars = rows.front().size();
  for (const auto& r : rows) sys.constraints.push_back(constraint(r, Rel::gt, T(0)));
  return sys;
}

template <typename T>
struct FeasibilityResult {
  bool feasible = false;
  Vector<T> witness;  // meaningful only when feasible
};

namespace fm_detail {

template <typename T>
struct TrackedRow {
  Vector<T> coeffs;
  Rel rel;
  T rhs;
};

template <typename T>
std::string coeff_key(const Vector<T>& coeffs) {
  std::string key;
  for (const T& c : coeffs) {
    key += to_string(c);
    key += '|';
  }
  return key;
}

// True when lhs makes rhs redundant (same coefficient vector assumed).
template <typename T>
bool dominates(const TrackedRow<T>& a, const TrackedRow<T>& b) {
  if (a.rhs != b.rhs) return a.rhs > b.rhs;
  return !(a.rel == Rel::ge && b.rel == Rel::gt);
}

// One Fourier-Motzkin step: every positive/negative pair on `var` combines
// into a row with a zero there. Growth is contained by the dedup below, which
// never changes the solution set. (Cardinality-based pruning of combined rows
// is deliberately absent: it is only sound with minimal derivation histories,
// which the dedup does not maintain.)
template <typename T>
std::vector<TrackedRow<T>> eliminate_step(const std::vector<TrackedRow<T>>& rows,
                                          std::size_t var) {
  std::vector<const TrackedRow<T>*> pos, neg;
  std::vector<TrackedRow<T>> out;
  for (const auto& r : rows) {
    int s = sign_of(r.coeffs[var]);
    if (s > 0) pos.push_back(&r);
    else if (s < 0) neg.push_back(&r);
    else out.push_back(r);
  }
  for (const auto* p : pos) {
    for (const auto* n : neg) {
      T mp = T(-n->coeffs[var]);
      T mn = p->coeffs[var];
      TrackedRow<T> row;
      row.coeffs.resize(p->coeffs.size(), T(0));
      for (std::size_t j = 0; j < row.coeffs.size(); ++j)
        row.coeffs[j] = T(mp * p->coeffs[j] + mn * n->coeffs[j]);
      row.rhs = T(mp * p->rhs + mn * n->rhs);
      row.rel = (p->rel == Rel::gt || n->rel == Rel::gt) ? Rel::gt : Rel::ge;
      out.push_back(std::move(row));
    }
  }

  // Normalize, drop satisfied constant rows, keep one dominant row per
  // coefficient vector. Violated constant rows are kept: they certify
  // infeasibility downstream.
  std::vector<TrackedRow<T>> result;
  std::unordered_map<std::string, std::size_t> seen;
  for (auto& r : out) {
    field_traits<T>::normalize_row(r.coeffs, r.rhs);
    if (is_zero_vector(r.coeffs)) {
      bool holds = r.rel == Rel::ge ? sign_of(r.rhs) <= 0 : sign_of(r.rhs) < 0;
      if (holds) continue;
    }
    if constexpr (field_traits<T>::exact) {
      std::string key = coeff_key(r.coeffs);
      auto it = seen.find(key);
      if (it != seen.end()) {
        if (dominates(r, result[it->second])) result[it->second] = std::move(r);
        continue;
      }
      seen.emplace(std::move(key), result.size());
    }
    result.push_back(std::move(r));
  }
  return result;
}

template <typename T>
std::vector<TrackedRow<T>> track(const LinearSystem<T>& sys) {
  std::vector<TrackedRow<T>> rows;
  rows.reserve(sys.constraints.size());
  for (const auto& c : sys.constraints) {
    TrackedRow<T> r{c.coeffs, c.rel, c.rhs};
    field_traits<T>::normalize_row(r.coeffs, r.rhs);
    rows.push_back(std::move(r));
  }
  return rows;
}

template <typename T>
LinearSystem<T> untrack(std::size_t num_vars, const std::vector<TrackedRow<T>>& rows) {
  LinearSystem<T> sys;
  sys.num_vars = num_vars;
  for (const auto& r : rows) sys.constraints.push_back(constraint(r.coeffs, r.rel, r.rhs));
  return sys;
}

// Bounds on one variable given values for the others.
template <typename T>
struct VariableBounds {
  std::optional<T> lower, upper;
  bool lower_strict = false, upper_strict = false;

  void add(const T& value, bool strict, bool is_lower) {
    auto& bound = is_lower ? lower : upper;
    auto& bound_strict = is_lower ? lower_strict : upper_strict;
    if (!bound) {
      bound = value;
      bound_strict = strict;
      return;
    }
    if (value == *bound) {
      bound_strict = bound_strict || strict;
    } else if (is_lower ? value > *bound : value < *bound) {
      bound = value;
      bound_strict = strict;
    }
  }

  T pick() const {
    if (lower && upper) {
      if (*lower < *upper) return T((*lower + *upper) / T(2));
      if (*lower == *upper && !lower_strict && !upper_strict) return *lower;
      throw std::logic_error("VariableBounds: empty interval after elimination");
    }
    if (lower) return T(*lower + T(1));
    if (upper) return T(*upper - T(1));
    return T(0);
  }
};

}  // namespace fm_detail

// Eliminates one variable; the result ranges over the same variable indices
// with the eliminated column identically zero.
template <typename T>
LinearSystem<T> eliminate_variable(const LinearSystem<T>& sys, std::size_t var) {
  if (var >= sys.num_vars) throw std::invalid_argument("eliminate_variable: bad index");
  auto rows = fm_detail::track(sys);
  rows = fm_detail::eliminate_step(rows, var);
  return fm_detail::untrack(sys.num_vars, rows);
}

// Projection onto the coordinates in `keep` (indices preserved, eliminated
// columns zero).
template <typename T>
LinearSystem<T> project_onto(const LinearSystem<T>& sys, const std::vector<std::size_t>& keep) {
  std::vector<bool> keep_mask(sys.num_vars, false);
  for (std::size_t k : keep) {
    if (k >= sys.num_vars) throw std::invalid_argument("project_onto: bad index");
    keep_mask[k] = true;
  }
  auto rows = fm_detail::track(sys);
  for (std::size_t v = sys.num_vars; v-- > 0;) {
    if (keep_mask[v]) continue;
    rows = fm_detail::eliminate_step(rows, v);
  }
  return fm_detail::untrack(sys.num_vars, rows);
}

// Rewrites a projected system over only the kept variables, in the order
// given.
template <typename T>
LinearSystem<T> compress(const LinearSystem<T>& sys, const std::vector<std::size_t>& keep) {
  LinearSystem<T> out;
  out.num_vars = keep.size();
  for (const auto& c : sys.constraints) {
    LinearConstraint<T> row;
    row.rel = c.rel;
    row.rhs = c.rhs;
    row.coeffs.resize(keep.size(), T(0));
    for (std::size_t j = 0; j < keep.size(); ++j) row.coeffs[j] = c.coeffs[keep[j]];
    out.constraints.push_back(std::move(row));
  }
  return out;
}

// Decides feasibility by full elimination; on success a witness point is
// recovered by back substitution through the elimination stack.
template <typename T>
FeasibilityResult<T> fm_feasible(const LinearSystem<T>& sys) {
  auto rows = fm_detail::track(sys);
  std::vector<std::vector<fm_detail::TrackedRow<T>>> stack;  // before each step
  for (std::size_t v = sys.num_vars; v-- > 0;) {
    stack.push_back(rows);
    rows = fm_detail::eliminate_step(rows, v);
  }
  for (const auto& r : rows) {
    bool holds = r.rel == Rel::ge ? sign_of(r.rhs) <= 0 : sign_of(r.rhs) < 0;
    if (!holds) return {false, {}};
  }

  FeasibilityResult<T> res;
  res.feasible = true;
  res.witness.assign(sys.num_vars, T(0));
  // stack[t] still contains variable v = num_vars - 1 - t; assign from the
  // innermost system outward.
  for (std::size_t v = 0; v < sys.num_vars; ++v) {
    const auto& level = stack[sys.num_vars - 1 - v];
    fm_detail::VariableBounds<T> bounds;
    for (const auto& r : level) {
      int s = sign_of(r.coeffs[v]);
      if (s == 0) continue;
      // Variables below v are already assigned; columns above v are zero in
      // this level, so summing every other column is safe.
      T rest(0);
      for (std::size_t j = 0; j < sys.num_vars; ++j)
        if (j != v) rest += r.coeffs[j] * res.witness[j];
      T value = T((r.rhs - rest) / r.coeffs[v]);
      bounds.add(value, r.rel == Rel::gt, s > 0);
    }
    res.witness[v] = bounds.pick();
  }
  return res;
}

}  // namespace chambers
