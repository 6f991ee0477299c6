#ifndef MDG_GENERATOR_HPP
#define MDG_GENERATOR_HPP

#include <cstdint>

#include "mdg/digraph.hpp"

namespace mdg {

/// Parameters of the seeded strong-digraph generator.
struct GeneratorConfig {
    int n = 1;
    double extra_arc_probability = 0.0;  // in [0, 1]
    std::uint64_t seed = 0;
};

/// Strongly connected by construction: a directed Hamiltonian cycle on a
/// random vertex permutation, plus every remaining ordered pair independently
/// with the extra-arc probability. Deterministic given the config.
Digraph random_strong_digraph(const GeneratorConfig& cfg);

/// Symmetric and strongly connected: a random spanning tree plus extra
/// undirected edges, each materialised as an arc pair. Deterministic given
/// the config.
Digraph random_symmetric_strong_digraph(const GeneratorConfig& cfg);

/// An arbitrary digraph with every ordered pair drawn independently; often
/// not strongly connected. Used to exercise the strong-connectivity
/// propositions from both sides.
Digraph random_digraph(const GeneratorConfig& cfg);

}  // namespace mdg

#endif
