#ifndef QSYS_RANDOM_HPP
#define QSYS_RANDOM_HPP

#include <cstdint>

#include "qsys/hypergraph.hpp"

namespace qsys {

/// Each 4-subset of [0, n) becomes an edge independently with the given
/// probability. The draw order is lexicographic and uses mt19937_64, so the
/// output depends only on (n, density, seed).
Hypergraph4 random_hypergraph(std::size_t n, double density, std::uint64_t seed);

}  // namespace qsys

#endif  // QSYS_RANDOM_HPP
