// Prints the four invariants of small grids next to the constructed witnesses.

#include <iostream>

#include "mvis/mvis.hpp"

int main() {
  using namespace mvis;
  for (int n = 4; n <= 7; ++n) {
    const int m = n - 1;
    const Graph g = grid_graph(n, m);
    std::cout << "P" << n << " x P" << m << "\n";
    for (Variant v : kAllVariants) {
      const auto r = solve(g, v);
      std::cout << "  " << to_string(v) << " = " << r.value << "  {";
      bool first = true;
      for (Vertex x : r.witness.ids()) {
        std::cout << (first ? "" : " ") << g.label(x);
        first = false;
      }
      std::cout << "}\n";
    }
    const VertexSet dual = grid_dual_witness(n, m);
    std::cout << "  constructed dual set of size " << dual.size()
              << (classify_set(g, dual).is_dual ? " is" : " is NOT") << " dual\n";
  }
}
