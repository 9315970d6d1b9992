// Minimum-norm point and Gordan duality in action: the same engine that
// finds the closest point of a hull to the origin decides whether a strict
// system A x > 0 has a solution, and produces a certificate either way.

#include <cstdio>
#include <string>

#include <chambers/chambers.hpp>

using namespace chambers;

namespace {

std::string show(const Vector<Rat>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

int main() {
  // Closest point of a hull to the origin, exactly.
  std::vector<Vector<Rat>> square{{rat(1), rat(1)}, {rat(3), rat(1)}, {rat(3), rat(3)}, {rat(1), rat(3)}};
  auto mn = min_norm_point(square);
  std::printf("min-norm point of the square: %s, |x|^2 = %s\n", show(mn.point).c_str(),
              to_string(mn.norm_squared).c_str());

  // A strictly feasible cone: every row has a common strict witness.
  std::vector<Vector<Rat>> open{{rat(1), rat(0)}, {rat(1), rat(1)}, {rat(0), rat(1)}};
  auto yes = strict_feasibility(open, 2, FeasibilityMethod::min_norm);
  std::printf("quadrant-ish cone feasible: %s, witness %s\n", yes.feasible ? "yes" : "no",
              show(yes.witness).c_str());

  // An infeasible one: the rows positively span the plane, and the engine
  // hands back a vanishing convex combination as the certificate.
  std::vector<Vector<Rat>> closed{{rat(1), rat(0)}, {rat(-1), rat(1)}, {rat(0), rat(-1)}};
  auto no = strict_feasibility(closed, 2, FeasibilityMethod::min_norm);
  std::printf("positively spanning rows feasible: %s, certificate: ", no.feasible ? "yes" : "no");
  for (std::size_t a = 0; a < no.combination_support.size(); ++a)
    std::printf("%s%s*row%zu", a ? " + " : "", to_string(no.combination[a]).c_str(),
                no.combination_support[a]);
  std::printf(" = 0\n");

  // Fourier–Motzkin agrees, by a completely different route.
  auto fm = strict_feasibility(closed, 2, FeasibilityMethod::fourier_motzkin);
  std::printf("fourier-motzkin agrees: %s\n", fm.feasible == no.feasible ? "yes" : "no");
  return 0;
}
