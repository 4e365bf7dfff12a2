#pragma once

#include <cstdint>
#include <random>

#include "pgc/graph.hpp"

namespace pgc {

using Rng = std::mt19937_64;

// Uniform in [0, k); stable across standard libraries, unlike the std distributions.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t k) { return k == 0 ? 0 : rng() % k; }

PlanarMultigraph grid_graph(std::size_t rows, std::size_t cols);
PlanarMultigraph path_graph(std::size_t n);
PlanarMultigraph cycle_graph(std::size_t n);
PlanarMultigraph complete_graph(std::size_t n);

// Maximal planar graph (3n-6 edges for n >= 3): random stacking followed by random edge flips.
// Vertex and edge ids are shuffled. Embedded.
PlanarMultigraph random_triangulation(std::size_t n, std::uint64_t seed);

// Connected random subgraph of a random triangulation; `density` is the keep probability of
// non-tree edges. Embedded.
PlanarMultigraph random_planar(std::size_t n, std::uint64_t seed, double density = 0.5);

// random_planar plus parallel copies and self-loops. Embedded.
PlanarMultigraph random_planar_multigraph(std::size_t n, std::uint64_t seed, double density = 0.5,
                                          double parallel_rate = 0.1, double loop_rate = 0.05);

// Adds integer weights in [1, max_weight].
void assign_random_weights(PlanarMultigraph& g, std::uint64_t seed, std::int64_t max_weight = 1000);

}  // namespace pgc
