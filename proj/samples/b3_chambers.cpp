// Walks through the chamber geometry of the B3 reflection arrangement: the
// 48 chambers match the 48 group elements, sign vectors encode inversion
// sets, and the chamber graph is the weak order's Hasse diagram.

#include <cstdio>

#include <chambers/chambers.hpp>

using namespace chambers;

int main() {
  ReflectionArrangement ra(CoxeterType::parse("B3"));
  const CoxeterGroup& W = ra.group();

  auto complex = ra.enumerate();
  std::printf("B3: %zu hyperplanes, %zu chambers, group order %s\n",
              ra.arrangement().size(), complex.chambers.size(), W.order().get_str().c_str());

  Element w0 = W.longest_element();
  std::printf("identity chamber  %s\n", ra.chamber_signs(W.identity()).to_string().c_str());
  std::printf("longest element   %s  (length %zu)\n", ra.chamber_signs(w0).to_string().c_str(),
              W.length(w0));

  // Locate a point and read off the group element whose chamber holds it.
  Vector<Rat> x{rat(5), rat(-1), rat(7, 2)};
  auto loc = ra.locate(x);
  std::printf("locate (5,-1,7/2): word [");
  for (std::size_t i = 0; i < loc.word.size(); ++i)
    std::printf("%s%zu", i ? " " : "", loc.word[i]);
  std::printf("], %s\n", loc.interior ? "interior" : "on a wall");

  // Graph distance from the identity chamber equals Coxeter length.
  auto dist = complex.distances_from(complex.index_of(ra.chamber_signs(W.identity())));
  std::size_t agree = 0;
  for (const Element& w : W.all_elements())
    if (dist[complex.index_of(ra.chamber_signs(w))] == W.length(w)) ++agree;
  std::printf("graph distance == length for %zu/48 elements\n", agree);
  return 0;
}
