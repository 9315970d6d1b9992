#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <random>
#include <vector>

#include <chambers/fourier_motzkin.hpp>

using namespace chambers;

namespace {

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 2);
  return rat(num(rng), den(rng));
}

Vector<Rat> random_point(std::mt19937_64& rng, std::size_t n) {
  Vector<Rat> x(n, Rat(0));
  for (auto& c : x) c = random_rat(rng);
  return x;
}

// A random system guaranteed to contain `anchor`: each row's rhs is set at or
// below the row's value there.
LinearSystem<Rat> random_system_through(std::mt19937_64& rng, std::size_t n,
                                        std::size_t m, const Vector<Rat>& anchor) {
  std::uniform_int_distribution<int> slack(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  LinearSystem<Rat> sys;
  sys.num_vars = n;
  for (std::size_t i = 0; i < m; ++i) {
    LinearConstraint<Rat> row;
    row.coeffs = random_point(rng, n);
    int s = slack(rng);
    row.rhs = Rat(dot(row.coeffs, anchor) - Rat(s));
    row.rel = (s > 0 && coin(rng)) ? Rel::gt : Rel::ge;
    sys.constraints.push_back(std::move(row));
  }
  return sys;
}

// Appends x_k = value as a pair of opposite non-strict inequalities.
void pin_variable(LinearSystem<Rat>& sys, std::size_t k, const Rat& value) {
  LinearConstraint<Rat> lo, hi;
  lo.coeffs.assign(sys.num_vars, Rat(0));
  lo.coeffs[k] = Rat(1);
  lo.rhs = value;
  hi.coeffs.assign(sys.num_vars, Rat(0));
  hi.coeffs[k] = Rat(-1);
  hi.rhs = Rat(-value);
  sys.constraints.push_back(std::move(lo));
  sys.constraints.push_back(std::move(hi));
}

}  // namespace

TEST_CASE("constraint satisfaction semantics") {
  auto c = constraint<Rat>({Rat(1), Rat(-1)}, Rel::ge, Rat(0));
  CHECK(c.satisfied_by({Rat(2), Rat(2)}));   // boundary of >=
  CHECK_FALSE(c.satisfied_by({Rat(1), Rat(2)}));
  auto strict = constraint<Rat>({Rat(1), Rat(-1)}, Rel::gt, Rat(0));
  CHECK_FALSE(strict.satisfied_by({Rat(2), Rat(2)}));
  CHECK(strict.satisfied_by({Rat(3), Rat(2)}));
}

TEST_CASE("eliminating a variable zeroes its column") {
  LinearSystem<Rat> sys;
  sys.num_vars = 3;
  sys.constraints = {
      constraint<Rat>({Rat(1), Rat(1), Rat(0)}, Rel::ge, Rat(1)),
      constraint<Rat>({Rat(-1), Rat(2), Rat(1)}, Rel::gt, Rat(0)),
      constraint<Rat>({Rat(2), Rat(-1), Rat(1)}, Rel::ge, Rat(-1)),
  };
  auto reduced = eliminate_variable(sys, 0);
  CHECK(reduced.num_vars == 3);
  for (const auto& c : reduced.constraints) CHECK(sign_of(c.coeffs[0]) == 0);
}

TEST_CASE("feasible one dimensional intervals, strictness included") {
  auto between = [](Rel lo_rel, Rel hi_rel) {
    LinearSystem<Rat> sys;
    sys.num_vars = 1;
    sys.constraints = {
        constraint<Rat>({Rat(1)}, lo_rel, Rat(1)),     // x >= 1 (or >)
        constraint<Rat>({Rat(-1)}, hi_rel, Rat(-1)),   // x <= 1 (or <)
    };
    return fm_feasible(sys);
  };
  auto closed = between(Rel::ge, Rel::ge);
  REQUIRE(closed.feasible);
  CHECK(closed.witness == Vector<Rat>{Rat(1)});
  CHECK_FALSE(between(Rel::gt, Rel::ge).feasible);
  CHECK_FALSE(between(Rel::ge, Rel::gt).feasible);
  CHECK_FALSE(between(Rel::gt, Rel::gt).feasible);
}

TEST_CASE("constant rows decide zero variable systems") {
  LinearSystem<Rat> sys;
  sys.num_vars = 0;
  sys.constraints = {constraint<Rat>({}, Rel::ge, Rat(-1))};
  CHECK(fm_feasible(sys).feasible);
  sys.constraints = {constraint<Rat>({}, Rel::gt, Rat(0))};
  CHECK_FALSE(fm_feasible(sys).feasible);
}

TEST_CASE("unbounded directions get a finite witness") {
  LinearSystem<Rat> sys;
  sys.num_vars = 2;
  sys.constraints = {
      constraint<Rat>({Rat(1), Rat(0)}, Rel::gt, Rat(3)),
      constraint<Rat>({Rat(0), Rat(-1)}, Rel::ge, Rat(2)),
  };
  auto res = fm_feasible(sys);
  REQUIRE(res.feasible);
  CHECK(sys.satisfied_by(res.witness));
}

TEST_CASE("random systems: feasibility witnesses actually satisfy") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 4;
    std::size_t m = 1 + (trial * 7) % 6;
    auto anchor = random_point(rng, n);
    auto sys = random_system_through(rng, n, m, anchor);
    CHECK(sys.satisfied_by(anchor));
    auto res = fm_feasible(sys);
    REQUIRE(res.feasible);  // anchor is inside, so it must be found feasible
    CHECK(sys.satisfied_by(res.witness));
  }
}

TEST_CASE("random infeasible systems are recognized") {
  std::mt19937_64 rng(991);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 3;
    auto anchor = random_point(rng, n);
    auto sys = random_system_through(rng, n, 3, anchor);
    // Force infeasibility: a . x > 0 and a . x < 0 simultaneously.
    auto dir = random_point(rng, n);
    while (is_zero_vector(dir)) dir = random_point(rng, n);
    sys.constraints.push_back(constraint<Rat>(dir, Rel::gt, Rat(0)));
    sys.constraints.push_back(constraint<Rat>(negated(dir), Rel::gt, Rat(0)));
    CHECK_FALSE(fm_feasible(sys).feasible);
  }
}

TEST_CASE("projection is sound and complete on random systems") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3;
    auto anchor = random_point(rng, n);
    auto sys = random_system_through(rng, n, 4, anchor);
    std::vector<std::size_t> keep{0, 1};
    auto proj = project_onto(sys, keep);
    CHECK(proj.num_vars == n);
    for (const auto& c : proj.constraints) CHECK(sign_of(c.coeffs[2]) == 0);

    // Soundness: any point of the original satisfies the projection.
    CHECK(proj.satisfied_by(anchor));

    // Completeness: a sample point satisfying the projection extends to a
    // point of the original system (its fiber is nonempty).
    for (int probe = 0; probe < 8; ++probe) {
      auto y = random_point(rng, n);
      y[2] = Rat(0);
      if (!proj.satisfied_by(y)) continue;
      auto fiber = sys;
      pin_variable(fiber, 0, y[0]);
      pin_variable(fiber, 1, y[1]);
      CHECK(fm_feasible(fiber).feasible);
    }
  }
}

TEST_CASE("compress rewrites over kept variables") {
  LinearSystem<Rat> sys;
  sys.num_vars = 3;
  sys.constraints = {
      constraint<Rat>({Rat(1), Rat(0), Rat(2)}, Rel::ge, Rat(1)),
      constraint<Rat>({Rat(0), Rat(5), Rat(-1)}, Rel::gt, Rat(0)),
  };
  auto proj = project_onto(sys, {0, 2});
  auto small = compress(proj, {0, 2});
  CHECK(small.num_vars == 2);
  for (const auto& c : small.constraints) CHECK(c.coeffs.size() == 2);
}

TEST_CASE("strict homogeneous helper") {
  auto sys = strict_homogeneous_system<Rat>({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK(sys.num_vars == 2);
  REQUIRE(sys.constraints.size() == 2);
  for (const auto& c : sys.constraints) {
    CHECK(c.rel == Rel::gt);
    CHECK(c.rhs == Rat(0));
  }
  CHECK(sys.satisfied_by({Rat(1), Rat(1)}));
  CHECK_FALSE(sys.satisfied_by({Rat(1), Rat(0)}));
}
