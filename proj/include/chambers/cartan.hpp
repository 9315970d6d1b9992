#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace chambers {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// One of the finite crystallographic types A_n, B_n, C_n, D_n, E_6..E_8,
// F_4, G_2.
struct CoxeterType {
  Series series;
  int rank;

  static CoxeterType parse(std::string_view text) {
    if (text.size() < 2) throw std::invalid_argument("CoxeterType: expected letter + rank");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (letter < 'A' || letter > 'G')
      throw std::invalid_argument("CoxeterType: series must be A..G");
    int rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("CoxeterType: bad rank in '" + std::string(text) + "'");
      rank = rank * 10 + (text[i] - '0');
      if (rank > 64) throw std::invalid_argument("CoxeterType: rank out of range");
    }
    CoxeterType t{static_cast<Series>(letter), rank};
    t.validate();
    return t;
  }

  void validate() const {
    bool ok = false;
    switch (series) {
      case Series::A: ok = rank >= 1; break;
      case Series::B: ok = rank >= 2; break;
      case Series::C: ok = rank >= 2; break;
      case Series::D: ok = rank >= 3; break;
      case Series::E: ok = rank >= 6 && rank <= 8; break;
      case Series::F: ok = rank == 4; break;
      case Series::G: ok = rank == 2; break;
    }
    if (!ok)
      throw std::invalid_argument("CoxeterType: no finite type " + to_string());
  }

  std::string to_string() const {
    return std::string(1, static_cast<char>(series)) + std::to_string(rank);
  }

  bool operator==(const CoxeterType& o) const = default;
};

// Simple roots in an exact rational realization with the standard inner
// product (the usual coordinate realizations; the ambient dimension exceeds
// the rank for A_n, E_6, E_7 and G_2).
struct SimpleSystem {
  CoxeterType type;
  std::size_t dimension = 0;
  std::vector<Vector<Rat>> simple_roots;
};

inline SimpleSystem simple_system(CoxeterType type) {
  type.validate();
  const int n = type.rank;
  SimpleSystem sys;
  sys.type = type;

  auto unit = [](std::size_t dim, std::size_t i, long value = 1) {
    Vector<Rat> v(dim, Rat(0));
    v[i] = rat(value);
    return v;
  };
  auto chain_root = [&](std::size_t dim, std::size_t i) {
    Vector<Rat> v(dim, Rat(0));
    v[i] = rat(1);
    v[i + 1] = rat(-1);
    return v;
  };

  switch (type.series) {
    case Series::A: {
      sys.dimension = n + 1;
      for (int i = 0; i < n; ++i) sys.simple_roots.push_back(chain_root(n + 1, i));
      break;
    }
    case Series::B: {
      sys.dimension = n;
      for (int i = 0; i + 1 < n; ++i) sys.simple_roots.push_back(chain_root(n, i));
      sys.simple_roots.push_back(unit(n, n - 1));
      break;
    }
    case Series::C: {
      sys.dimension = n;
      for (int i = 0; i + 1 < n; ++i) sys.simple_roots.push_back(chain_root(n, i));
      sys.simple_roots.push_back(unit(n, n - 1, 2));
      break;
    }
    case Series::D: {
      sys.dimension = n;
      for (int i = 0; i + 1 < n; ++i) sys.simple_roots.push_back(chain_root(n, i));
      Vector<Rat> last(n, Rat(0));
      last[n - 2] = rat(1);
      last[n - 1] = rat(1);
      sys.simple_roots.push_back(std::move(last));
      break;
    }
    case Series::E: {
      sys.dimension = 8;
      std::vector<Vector<Rat>> simples;
      Vector<Rat> a1(8, rat(-1, 2));
      a1[0] = rat(1, 2);
      a1[7] = rat(1, 2);
      simples.push_back(std::move(a1));
      Vector<Rat> a2(8, Rat(0));
      a2[0] = rat(1);
      a2[1] = rat(1);
      simples.push_back(std::move(a2));
      for (int i = 0; i < 6; ++i) {
        Vector<Rat> v(8, Rat(0));
        v[i] = rat(-1);
        v[i + 1] = rat(1);
        simples.push_back(std::move(v));
      }
      simples.resize(n);
      sys.simple_roots = std::move(simples);
      break;
    }
    case Series::F: {
      sys.dimension = 4;
      sys.simple_roots.push_back(chain_root(4, 1));
      sys.simple_roots.push_back(chain_root(4, 2));
      sys.simple_roots.push_back(unit(4, 3));
      Vector<Rat> a4{rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)};
      sys.simple_roots.push_back(std::move(a4));
      break;
    }
    case Series::G: {
      sys.dimension = 3;
      sys.simple_roots.push_back(chain_root(3, 0));
      Vector<Rat> a2{rat(-2), rat(1), rat(1)};
      sys.simple_roots.push_back(std::move(a2));
      break;
    }
  }
  return sys;
}

// Invariant degrees d_1..d_n; the group order is their product and the
// number of positive roots is the sum of (d_i - 1).
inline std::vector<int> degrees(CoxeterType type) {
  type.validate();
  const int n = type.rank;
  std::vector<int> d;
  switch (type.series) {
    case Series::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Series::B:
    case Series::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Series::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Series::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Series::F:
      d = {2, 6, 8, 12};
      break;
    case Series::G:
      d = {2, 6};
      break;
  }
  return d;
}

inline Int group_order(CoxeterType type) {
  Int order(1);
  for (int d : degrees(type)) order *= d;
  return order;
}

inline std::size_t num_positive_roots(CoxeterType type) {
  std::size_t n = 0;
  for (int d : degrees(type)) n += static_cast<std::size_t>(d - 1);
  return n;
}

// Cartan matrix a(i, j) = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) /
// (alpha_j, alpha_j), computed from the realization and checked integral.
inline Matrix<long> cartan_matrix(const SimpleSystem& sys) {
  const std::size_t n = sys.simple_roots.size();
  Matrix<long> cartan(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat jj = dot(sys.simple_roots[j], sys.simple_roots[j]);
    for (std::size_t i = 0; i < n; ++i) {
      Rat a = Rat(Rat(2) * dot(sys.simple_roots[i], sys.simple_roots[j]) / jj);
      a.canonicalize();
      if (a.get_den() != 1)
        throw std::logic_error("cartan_matrix: non-integral entry");
      cartan(i, j) = a.get_num().get_si();
    }
  }
  return cartan;
}

// Coxeter matrix m(i, j) from the Cartan products a(i,j) a(j,i) in
// {0, 1, 2, 3} <-> m in {2, 3, 4, 6}.
inline Matrix<long> coxeter_matrix(const Matrix<long>& cartan) {
  const std::size_t n = cartan.rows();
  Matrix<long> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      long p = cartan(i, j) * cartan(j, i);
      switch (p) {
        case 0: m(i, j) = 2; break;
        case 1: m(i, j) = 3; break;
        case 2: m(i, j) = 4; break;
        case 3: m(i, j) = 6; break;
        default: throw std::logic_error("coxeter_matrix: non-crystallographic product");
      }
    }
  }
  return m;
}

}  // namespace chambers
