#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <chambers/arrangement.hpp>

#include "oracles.hpp"

using namespace chambers;

namespace {

// m hyperplanes in general position: normals on the moment curve. Any d of
// them form a Vandermonde block, hence are independent.
CentralArrangement<Rat> generic_arrangement(std::size_t m, std::size_t d) {
  std::vector<Vector<Rat>> normals;
  for (std::size_t i = 0; i < m; ++i) {
    Vector<Rat> n(d, Rat(0));
    Rat power(1);
    for (std::size_t j = 0; j < d; ++j) {
      n[j] = power;
      power = Rat(power * Rat(static_cast<long>(i + 2)));
    }
    normals.push_back(std::move(n));
  }
  return CentralArrangement<Rat>(d, std::move(normals));
}

std::vector<std::string> sorted_sign_strings(const ChamberComplex<Rat>& complex) {
  std::vector<std::string> keys;
  for (const auto& ch : complex.chambers) keys.push_back(ch.signs.to_string());
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

TEST_CASE("sign vectors of explicit points") {
  CentralArrangement<Rat> arr(2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK(arr.sign_vector({Rat(1), Rat(1)}).to_string() == "+++");
  CHECK(arr.sign_vector({Rat(-1), Rat(2)}).to_string() == "-++");
  CHECK(arr.sign_vector({Rat(1), Rat(-1)}).to_string() == "+-0");
  CHECK(arr.sign_vector({Rat(0), Rat(0)}).to_string() == "000");
}

TEST_CASE("generic point misses every hyperplane") {
  auto arr = generic_arrangement(6, 3);
  auto p = arr.generic_point();
  CHECK(arr.sign_vector(p).strict());
}

TEST_CASE("construction rejects bad normals") {
  CHECK_THROWS_AS(CentralArrangement<Rat>(2, {{Rat(0), Rat(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(CentralArrangement<Rat>(3, {{Rat(1), Rat(0)}}), std::invalid_argument);
}

TEST_CASE("m central lines in the plane make 2m sectors") {
  for (std::size_t m = 1; m <= 6; ++m) {
    auto arr = generic_arrangement(m, 2);
    auto complex = arr.enumerate_chambers();
    CHECK(complex.chambers.size() == 2 * m);
    // Each sector has two walls; the single-line case shares one wall.
    CHECK(complex.walls.size() == (m == 1 ? 1 : 2 * m));
  }
}

TEST_CASE("generic chamber counts match the binomial formula") {
  for (std::size_t d = 2; d <= 4; ++d) {
    for (std::size_t m = d; m <= d + 3; ++m) {
      auto arr = generic_arrangement(m, d);
      auto complex = arr.enumerate_chambers();
      auto expected = oracles::generic_central_chambers(m, d);
      CHECK(Int(static_cast<long>(complex.chambers.size())) == expected);
    }
  }
}

TEST_CASE("both feasibility oracles enumerate the same complex") {
  auto arr = generic_arrangement(5, 3);
  auto by_wolfe = arr.enumerate_chambers(FeasibilityMethod::min_norm);
  auto by_fm = arr.enumerate_chambers(FeasibilityMethod::fourier_motzkin);
  CHECK(sorted_sign_strings(by_wolfe) == sorted_sign_strings(by_fm));
}

TEST_CASE("witnesses lie in their chambers") {
  auto arr = generic_arrangement(5, 3);
  auto complex = arr.enumerate_chambers();
  for (const auto& ch : complex.chambers) {
    CHECK(ch.signs.strict());
    CHECK(arr.sign_vector(ch.witness) == ch.signs);
  }
}

TEST_CASE("walls connect chambers differing in exactly their hyperplane") {
  auto arr = generic_arrangement(4, 3);
  auto complex = arr.enumerate_chambers();
  for (const auto& w : complex.walls) {
    CHECK(w.from < w.to);
    auto sep = complex.chambers[w.from].signs.separation_set(complex.chambers[w.to].signs);
    REQUIRE(sep.size() == 1);
    CHECK(sep[0] == w.hyperplane);
  }
}

TEST_CASE("graph distance equals the number of separating hyperplanes") {
  auto arr = generic_arrangement(5, 3);
  auto complex = arr.enumerate_chambers();
  auto dist = complex.distances_from(0);
  const auto& source = complex.chambers[0].signs;
  for (std::size_t i = 0; i < complex.chambers.size(); ++i)
    CHECK(dist[i] == source.separation_set(complex.chambers[i].signs).size());
}

TEST_CASE("index lookups") {
  auto arr = generic_arrangement(3, 2);
  auto complex = arr.enumerate_chambers();
  for (std::size_t i = 0; i < complex.chambers.size(); ++i)
    CHECK(complex.index_of(complex.chambers[i].signs) == i);
  CHECK_FALSE(complex.contains(SignVector::from_string("000")));
  CHECK_THROWS_AS(complex.index_of(SignVector::from_string("000")), std::out_of_range);
}

TEST_CASE("repeated or opposite normals are refused by enumeration") {
  CentralArrangement<Rat> dup(2, {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}});
  CHECK_THROWS_AS(dup.enumerate_chambers(), std::invalid_argument);
  CentralArrangement<Rat> anti(2, {{Rat(1), Rat(1)}, {Rat(-1), Rat(-1)}});
  CHECK_THROWS_AS(anti.enumerate_chambers(), std::invalid_argument);
}

TEST_CASE("nonessential arrangement still enumerates") {
  // One line's worth of normals inside R^3: two halfspace chambers.
  CentralArrangement<Rat> arr(3, {{Rat(1), Rat(2), Rat(-1)}});
  auto complex = arr.enumerate_chambers();
  CHECK(complex.chambers.size() == 2);
  REQUIRE(complex.walls.size() == 1);
  CHECK(complex.walls[0].hyperplane == 0);
}
