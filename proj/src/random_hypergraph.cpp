#include <cmath>
#include <random>

#include "qsys/random.hpp"

namespace qsys {

Hypergraph4 random_hypergraph(std::size_t n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  // Integer threshold keeps the draw independent of the standard library's
  // distribution implementations.
  const bool all = density >= 1.0;
  const auto threshold = all ? 0 : static_cast<std::uint64_t>(std::ldexp(density, 64));
  Hypergraph4 h(n);
  for_each_quadruple(n, [&](const Edge4& e) {
    const std::uint64_t draw = rng();
    if (all || draw < threshold) h.add_edge(e);
  });
  return h;
}

}  // namespace qsys
