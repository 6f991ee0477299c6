#include <doctest.h>

#include "mdg/generator.hpp"
#include "mdg/oracle.hpp"
#include "mdg/properties.hpp"
#include "test_util.hpp"

using namespace mdg;

TEST_CASE("seeded generator") {
    SUBCASE("single vertex") {
        CHECK(random_strong_digraph({1, 0.0, 99}).order() == 1);
    }
    SUBCASE("p = 0 gives a Hamiltonian directed cycle") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const Digraph d = random_strong_digraph({5, 0.0, seed});
            CHECK(d.arc_count() == 5);
            CHECK(is_directed_cycle(d));
        }
    }
    SUBCASE("every output is strongly connected") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const int n = 1 + static_cast<int>(seed % 8);
            const double p = (seed % 3) * 0.3;
            CAPTURE(seed);
            CHECK(is_strongly_connected(random_strong_digraph({n, p, seed})));
        }
    }
    SUBCASE("determinism: same config, same digraph") {
        const GeneratorConfig cfg{6, 0.3, 42};
        CHECK(random_strong_digraph(cfg) == random_strong_digraph(cfg));
        const GeneratorConfig other{6, 0.3, 43};
        CHECK_FALSE(random_strong_digraph(cfg) == random_strong_digraph(other));
    }
    SUBCASE("symmetric generator emits symmetric strong digraphs") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const Digraph d = random_symmetric_strong_digraph({6, 0.25, seed});
            CHECK(is_symmetric(d));
            CHECK(is_strongly_connected(d));
        }
    }
    SUBCASE("config validation") {
        CHECK_THROWS_AS(random_strong_digraph({0, 0.0, 1}), InvalidDigraphError);
        CHECK_THROWS_AS(random_strong_digraph({3, 1.5, 1}), InvalidDigraphError);
    }
}

TEST_CASE("relaxation oracle agrees with BFS tables") {
    SUBCASE("fixtures") {
        for (const Digraph& d : {fixtures::c3(), fixtures::theta5(), fixtures::r5(),
                                 fixtures::x3(), fixtures::y3(), fixtures::p3u()})
            CHECK(check_tables_equal(md_tables(d), oracle_md(d)).empty());
        CHECK(oracle_md(fixtures::theta5()).ecc_vector() ==
              std::vector<int>{4, 4, 2, 4, 4});
    }
    SUBCASE("random digraphs up to 8 vertices") {
        for (std::uint64_t seed = 0; seed < 250; ++seed) {
            const int n = 1 + static_cast<int>(seed % 8);
            const Digraph d = random_strong_digraph({n, 0.25, seed});
            CAPTURE(seed);
            CHECK(check_tables_equal(md_tables(d), oracle_md(d)).empty());
        }
    }
    SUBCASE("rejects non-strong digraphs") {
        CHECK_THROWS_AS(oracle_md(Digraph::build(2, {{0, 1}})),
                        NotStronglyConnectedError);
    }
}

TEST_CASE("a broken md computation is caught") {
    // mutant: drop the max with the opposite direction, md := ddist
    const Digraph d = fixtures::theta5();
    const DistanceTables good = md_tables(d);
    IntMatrix ddist = good.ddist_matrix();
    IntMatrix mutant_md = ddist;
    std::vector<int> mutant_ecc(d.order(), 0);
    for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v = 0; v < d.order(); ++v)
            mutant_ecc[u] = std::max(mutant_ecc[u], mutant_md(u, v));
    const DistanceTables mutant(std::move(ddist), std::move(mutant_md),
                                std::move(mutant_ecc));

    CHECK_FALSE(check_metric_axioms(mutant).empty());      // symmetry breaks
    CHECK_FALSE(check_tables_equal(mutant, oracle_md(d)).empty());
    CHECK(check_metric_axioms(good).empty());
}
