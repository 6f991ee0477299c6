#include "mdg/generator.hpp"

#include <algorithm>
#include <numeric>

#include "mdg/rng.hpp"

namespace mdg {

namespace {

void validate(const GeneratorConfig& cfg) {
    if (cfg.n < 1) throw InvalidDigraphError("generator needs n >= 1");
    if (cfg.extra_arc_probability < 0.0 || cfg.extra_arc_probability > 1.0)
        throw InvalidDigraphError("extra arc probability must lie in [0, 1]");
}

std::vector<Vertex> random_permutation(int n, SplitMix64& rng) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
    return perm;
}

}  // namespace

Digraph random_strong_digraph(const GeneratorConfig& cfg) {
    validate(cfg);
    SplitMix64 rng(cfg.seed);
    if (cfg.n == 1) return Digraph::build(1, {});

    const std::vector<Vertex> perm = random_permutation(cfg.n, rng);
    std::vector<Arc> arcs;
    for (int i = 0; i < cfg.n; ++i)
        arcs.push_back({perm[i], perm[(i + 1) % cfg.n]});
    std::sort(arcs.begin(), arcs.end());

    // remaining ordered pairs in a fixed scan order, for reproducibility
    for (Vertex a = 0; a < cfg.n; ++a) {
        for (Vertex b = 0; b < cfg.n; ++b) {
            if (a == b) continue;
            if (std::binary_search(arcs.begin(), arcs.end(), Arc{a, b})) continue;
            if (rng.next_double() < cfg.extra_arc_probability) {
                arcs.push_back({a, b});
                std::sort(arcs.begin(), arcs.end());
            }
        }
    }
    return Digraph::build(cfg.n, std::move(arcs));
}

Digraph random_symmetric_strong_digraph(const GeneratorConfig& cfg) {
    validate(cfg);
    SplitMix64 rng(cfg.seed);
    if (cfg.n == 1) return Digraph::build(1, {});

    // random spanning tree: attach each vertex (in permuted order) to an
    // already-connected one
    const std::vector<Vertex> perm = random_permutation(cfg.n, rng);
    std::vector<Arc> arcs;
    auto add_edge = [&arcs](Vertex a, Vertex b) {
        arcs.push_back({a, b});
        arcs.push_back({b, a});
    };
    for (int i = 1; i < cfg.n; ++i)
        add_edge(perm[i], perm[rng.next_below(static_cast<std::uint64_t>(i))]);
    std::sort(arcs.begin(), arcs.end());

    for (Vertex a = 0; a < cfg.n; ++a) {
        for (Vertex b = a + 1; b < cfg.n; ++b) {
            if (std::binary_search(arcs.begin(), arcs.end(), Arc{a, b})) continue;
            if (rng.next_double() < cfg.extra_arc_probability) {
                add_edge(a, b);
                std::sort(arcs.begin(), arcs.end());
            }
        }
    }
    return Digraph::build(cfg.n, std::move(arcs));
}

Digraph random_digraph(const GeneratorConfig& cfg) {
    validate(cfg);
    SplitMix64 rng(cfg.seed);
    std::vector<Arc> arcs;
    for (Vertex a = 0; a < cfg.n; ++a)
        for (Vertex b = 0; b < cfg.n; ++b)
            if (a != b && rng.next_double() < cfg.extra_arc_probability)
                arcs.push_back({a, b});
    return Digraph::build(cfg.n, std::move(arcs));
}

}  // namespace mdg
