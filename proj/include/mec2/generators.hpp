#pragma once

#include <cstdint>
#include <string>

#include "mec2/graph.hpp"

namespace mec2 {

/// petersen, k4, k5, k33, or cycle/path/star/complete with a size:
/// cycle(n) and path(n) have n vertices, star(n) is K_{1,n}. Accepts both
/// "cycle(5)" and the pair ("cycle", 5). Throws InputError on unknown names.
Graph gen_named(const std::string& name);
Graph gen_named(const std::string& family, int size);

/// g plus one new vertex (index n) adjacent to every old vertex.
Graph universal_join(const Graph& g);

/// l disjoint copies; copy i occupies vertices i*n .. i*n + n - 1.
Graph disjoint_copies(const Graph& g, int l);

/// G(n, p): each pair independently with probability p, pairs in
/// lexicographic order.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Random labeled forest: vertex v > 0 attaches to a uniform earlier vertex
/// with probability p_attach.
Graph random_forest(int n, double p_attach, std::uint64_t seed);

/// Simple cubic graph from the pairing model, redrawing on loops or repeated
/// pairs. Throws InputError for odd n or n < 4, Error after 1000 failed draws.
Graph random_cubic(int n, std::uint64_t seed);

}  // namespace mec2
