#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <random>
#include <vector>

#include <chambers/feasibility.hpp>

using namespace chambers;

namespace {

Vector<Rat> random_row(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<long> num(-3, 3);
  Vector<Rat> x(dim, Rat(0));
  for (auto& c : x) c = Rat(num(rng));
  return x;
}

// Feasible: all rows strictly positive on the witness.
// Infeasible (min_norm route): the certificate is a convex combination of
// rows equal to the zero vector, which makes {a . x > 0} impossible.
void check_result(const std::vector<Vector<Rat>>& rows, std::size_t dim,
                  const StrictFeasibility<Rat>& r) {
  if (r.feasible) {
    REQUIRE(r.witness.size() == dim);
    for (const auto& a : rows) CHECK(sign_of(dot(a, r.witness)) > 0);
  } else if (!r.combination.empty()) {
    REQUIRE(r.combination.size() == r.combination_support.size());
    Rat total(0);
    Vector<Rat> mix(dim, Rat(0));
    for (std::size_t i = 0; i < r.combination.size(); ++i) {
      CHECK(sign_of(r.combination[i]) > 0);
      total += r.combination[i];
      for (std::size_t j = 0; j < dim; ++j)
        mix[j] += r.combination[i] * rows[r.combination_support[i]][j];
    }
    CHECK(total == Rat(1));
    CHECK(is_zero_vector(mix));
  }
}

}  // namespace

TEST_CASE("hand picked feasible and infeasible cones") {
  // Open first quadrant.
  std::vector<Vector<Rat>> quad{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  for (auto method : {FeasibilityMethod::min_norm, FeasibilityMethod::fourier_motzkin}) {
    auto r = strict_feasibility(quad, 2, method);
    CHECK(r.feasible);
    check_result(quad, 2, r);
  }

  // Opposite directions can never both be strictly positive.
  std::vector<Vector<Rat>> opp{{Rat(1), Rat(1)}, {Rat(-1), Rat(-1)}};
  for (auto method : {FeasibilityMethod::min_norm, FeasibilityMethod::fourier_motzkin}) {
    auto r = strict_feasibility(opp, 2, method);
    CHECK_FALSE(r.feasible);
    check_result(opp, 2, r);
  }

  // Three vectors positively spanning the plane.
  std::vector<Vector<Rat>> span{{Rat(1), Rat(0)}, {Rat(-1), Rat(1)}, {Rat(-1), Rat(-1)}};
  for (auto method : {FeasibilityMethod::min_norm, FeasibilityMethod::fourier_motzkin}) {
    CHECK_FALSE(strict_feasibility(span, 2, method).feasible);
  }
}

TEST_CASE("empty row set is vacuously feasible") {
  auto r = strict_feasibility<Rat>({}, 3);
  CHECK(r.feasible);
  CHECK(r.witness == Vector<Rat>(3, Rat(0)));
}

TEST_CASE("zero row is instantly infeasible") {
  std::vector<Vector<Rat>> rows{{Rat(0), Rat(0)}, {Rat(1), Rat(2)}};
  for (auto method : {FeasibilityMethod::min_norm, FeasibilityMethod::fourier_motzkin}) {
    auto r = strict_feasibility(rows, 2, method);
    CHECK_FALSE(r.feasible);
    check_result(rows, 2, r);
  }
}

TEST_CASE("both methods agree on random cones, certificates verified") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t dim = 1 + trial % 4;
    std::size_t m = 1 + (trial * 3) % 7;
    std::vector<Vector<Rat>> rows;
    for (std::size_t i = 0; i < m; ++i) rows.push_back(random_row(rng, dim));

    auto wolfe = strict_feasibility(rows, dim, FeasibilityMethod::min_norm);
    auto fm = strict_feasibility(rows, dim, FeasibilityMethod::fourier_motzkin);
    CHECK(wolfe.feasible == fm.feasible);
    check_result(rows, dim, wolfe);
    check_result(rows, dim, fm);
  }
}

TEST_CASE("ragged input is rejected") {
  CHECK_THROWS_AS(strict_feasibility<Rat>({{Rat(1)}, {Rat(1), Rat(2)}}, 2),
                  std::invalid_argument);
}
