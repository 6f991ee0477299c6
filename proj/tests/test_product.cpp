#include <doctest.h>

#include <numeric>

#include "mdg/generator.hpp"
#include "mdg/oracle.hpp"
#include "mdg/product.hpp"
#include "mdg/properties.hpp"
#include "test_util.hpp"

using namespace mdg;

namespace {

Digraph rand_strong(int n, double p, std::uint64_t seed) {
    return random_strong_digraph({n, p, seed});
}

}  // namespace

TEST_CASE("product indexer is mixed radix, factor 0 most significant") {
    const ProductIndexer ix({3, 5, 2});
    CHECK(ix.vertex_count() == 30);
    CHECK(ix.flatten({0, 0, 0}) == 0);
    CHECK(ix.flatten({1, 2, 1}) == 1 * 10 + 2 * 2 + 1);
    CHECK(ix.coords(25) == std::vector<int>{2, 2, 1});
    for (int v = 0; v < 30; ++v) CHECK(ix.flatten(ix.coords(v)) == v);
}

TEST_CASE("binary Cartesian product") {
    SUBCASE("triangle times triangle") {
        const Digraph p = cartesian_product(fixtures::c3(), fixtures::c3());
        CHECK(p.order() == 9);
        CHECK(p.arc_count() == 18);  // n1*m2 + n2*m1
        CHECK(p.label_of(0 * 3 + 2) == "(0,2)");
        CHECK(is_strongly_connected(p));
    }
    SUBCASE("single-vertex factor is an identity up to labels") {
        const Digraph k1 = Digraph::build(1, {});
        const Digraph p = cartesian_product(fixtures::theta5(), k1);
        CHECK(p.order() == 5);
        CHECK(p.arcs() == fixtures::theta5().arcs());
        CHECK(p.label_of(3) == "(3,0)");
    }
    SUBCASE("theta digraph times its reverse") {
        const Digraph p = cartesian_product(fixtures::theta5(), fixtures::r5());
        CHECK(p.order() == 25);
        // n1*m2 + n2*m1 = 5*6 + 5*6
        CHECK(p.arc_count() == 60);
    }
    SUBCASE("vertex budget guards against blowup") {
        CHECK_THROWS_AS(cartesian_product(fixtures::c3(), fixtures::c3(), 8),
                        BudgetError);
    }
}

TEST_CASE("n-ary product") {
    SUBCASE("one factor comes back unchanged") {
        CHECK(n_ary_product({fixtures::c3()}) == fixtures::c3());
    }
    SUBCASE("three triangles") {
        const Digraph p = n_ary_product(
            {fixtures::c3(), fixtures::c3(), fixtures::c3()});
        CHECK(p.order() == 27);
        CHECK(p.arc_count() == 81);  // 3 * 9 copies of 3 arcs
        CHECK(p.label_of(0) == "(0,0,0)");
        CHECK(p.label_of(26) == "(2,2,2)");
    }
    SUBCASE("empty factor list is rejected") {
        CHECK_THROWS_AS(n_ary_product({}), InvalidDigraphError);
    }
    SUBCASE("matches the left fold of the binary product") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const Digraph a = rand_strong(2 + seed % 3, 0.3, seed * 3);
            const Digraph b = rand_strong(2 + (seed + 1) % 3, 0.3, seed * 3 + 1);
            const Digraph c = rand_strong(2 + (seed + 2) % 3, 0.3, seed * 3 + 2);
            const Digraph direct = n_ary_product({a, b, c});
            const Digraph folded = cartesian_product(cartesian_product(a, b), c);
            CHECK(direct.order() == folded.order());
            CHECK(direct.arcs() == folded.arcs());
        }
    }
}

TEST_CASE("product distance from factor tables") {
    SUBCASE("triangle grid") {
        const DistanceTables t = md_tables(fixtures::c3());
        CHECK(product_distance(t, t, {0, 2}, {2, 0}) == 3);  // max(2+1, 1+2)
        CHECK(product_distance(t, t, {1, 1}, {1, 1}) == 0);
    }
    SUBCASE("theta digraph times reverse") {
        const DistanceTables t1 = md_tables(fixtures::theta5());
        const DistanceTables t2 = md_tables(fixtures::r5());
        CHECK(product_distance(t1, t2, {0, 0}, {3, 4}) == 7);  // max(3+2, 3+4)
    }
    SUBCASE("out of range") {
        const DistanceTables t = md_tables(fixtures::c3());
        CHECK_THROWS_AS(product_distance(t, t, {0, 0}, {3, 0}), InvalidDigraphError);
    }
    SUBCASE("equals BFS on the explicit product") {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const Digraph d1 = rand_strong(1 + seed % 5, 0.25, seed * 7);
            const Digraph d2 = rand_strong(1 + (seed + 2) % 5, 0.25, seed * 7 + 1);
            CAPTURE(seed);
            CHECK(check_product_distance_lemma(d1, d2).empty());
            CHECK(check_product_distance_bounds(d1, d2).empty());
        }
    }
}

TEST_CASE("factor analysis") {
    SUBCASE("two directed triangles: everything is licensed") {
        const FactorAnalysis a = factor_analysis({fixtures::c3(), fixtures::c3()});
        CHECK(a.per_ct_shortcut_valid);
        CHECK(a.ecc_shortcut_valid);
        CHECK(a.boundary_shortcut_valid);
        CHECK(a.factors_without_tse == 0);
        CHECK(a.factors[0].directed_cycle);
    }
    SUBCASE("theta digraph and its reverse: nothing is licensed") {
        const FactorAnalysis a = factor_analysis({fixtures::theta5(), fixtures::r5()});
        CHECK(a.factors_without_tse == 2);
        CHECK_FALSE(a.per_ct_shortcut_valid);
        CHECK_FALSE(a.ecc_shortcut_valid);
        CHECK_FALSE(a.boundary_shortcut_valid);
    }
    SUBCASE("symmetric path with the theta digraph") {
        const FactorAnalysis a = factor_analysis({fixtures::p3u(), fixtures::theta5()});
        CHECK(a.per_ct_shortcut_valid);       // only one factor lacks the property
        CHECK_FALSE(a.ecc_shortcut_valid);    // not all factors have it
        CHECK(a.boundary_shortcut_valid);     // only one non-symmetric factor
    }
    SUBCASE("non-strong factor is rejected") {
        CHECK_THROWS_AS(factor_analysis({Digraph::build(2, {{0, 1}})}),
                        NotStronglyConnectedError);
    }
}

TEST_CASE("coordinate-sum eccentricity") {
    SUBCASE("triangle grid: every vertex has eccentricity 4") {
        const FactorAnalysis a = factor_analysis({fixtures::c3(), fixtures::c3()});
        const std::vector<std::vector<int>> eccs{{2, 2, 2}, {2, 2, 2}};
        for (int i = 0; i < 3; ++i)
            for (int r = 0; r < 3; ++r)
                CHECK(product_ecc(a, eccs, {i, r}) == 4);
    }
    SUBCASE("two one-sided factors are refused") {
        const FactorAnalysis a = factor_analysis({fixtures::theta5(), fixtures::r5()});
        const std::vector<std::vector<int>> eccs{{4, 4, 2, 4, 4}, {4, 4, 2, 4, 4}};
        CHECK_THROWS_AS(product_ecc(a, eccs, {0, 0}), ShortcutInvalidError);
        // the refusal is justified: the true eccentricity of (0,0) is 7, not 8
        const Digraph p = cartesian_product(fixtures::theta5(), fixtures::r5());
        CHECK(md_tables(p).ecc(0) == 7);
    }
    SUBCASE("path times triangle, checked against explicit BFS") {
        const std::vector<Digraph> fs{fixtures::p3u(), fixtures::c3()};
        const FactorAnalysis a = factor_analysis(fs);
        const std::vector<std::vector<int>> eccs{{2, 1, 2}, {2, 2, 2}};
        CHECK(product_ecc(a, eccs, {0, 0}) == 4);
        const DistanceTables tp = md_tables(n_ary_product(fs));
        for (int i = 0; i < 3; ++i)
            for (int r = 0; r < 3; ++r)
                CHECK(product_ecc(a, eccs, {i, r}) == tp.ecc(i * 3 + r));
    }
}

TEST_CASE("factored boundary reports") {
    SUBCASE("two triangles: all sets by shortcut") {
        const std::vector<Digraph> fs{fixtures::c3(), fixtures::c3()};
        const FactoredReport fr = factored_sets(fs, factor_analysis(fs));
        std::vector<Vertex> all(9);
        std::iota(all.begin(), all.end(), 0);
        CHECK(fr.report.periphery == all);
        CHECK(fr.report.contour == all);
        CHECK(fr.report.eccentric == all);
        CHECK(fr.report.boundary == all);
        CHECK(fr.report.diameter == 4);
        CHECK(fr.report.tse);
        CHECK(fr.periphery_source == SetProvenance::shortcut);
        CHECK(fr.boundary_source == SetProvenance::shortcut);
        CHECK(fr.ecc_source == SetProvenance::shortcut);
        // agrees with direct analysis of the explicit product
        const BoundaryReport direct = full_report(n_ary_product(fs));
        CHECK(fr.report.periphery == direct.periphery);
        CHECK(fr.report.ecc == direct.ecc);
    }
    SUBCASE("two one-sided triangles: fallback path") {
        const std::vector<Digraph> fs{fixtures::x3(), fixtures::y3()};
        const FactoredReport fr = factored_sets(fs, factor_analysis(fs));
        CHECK(fr.periphery_source == SetProvenance::direct);
        CHECK(fr.ecc_source == SetProvenance::direct);
        // every coordinate pair is in Per(X3) x Per(Y3), yet (0,0) is not
        // peripheral in the product: its eccentricity is 3 < 4
        CHECK(fr.report.ecc[0] == 3);
        CHECK(fr.report.diameter == 4);
        CHECK_FALSE(std::binary_search(fr.report.periphery.begin(),
                                       fr.report.periphery.end(), 0));
        const BoundaryReport direct = full_report(n_ary_product(fs));
        CHECK(fr.report.periphery == direct.periphery);
        CHECK(fr.report.contour == direct.contour);
        CHECK(fr.report.eccentric == direct.eccentric);
        CHECK(fr.report.boundary == direct.boundary);
        CHECK_FALSE(fr.report.tse);
    }
    SUBCASE("symmetric path with one-sided triangle: boundary by shortcut") {
        const std::vector<Digraph> fs{fixtures::p3u(), fixtures::y3()};
        const FactoredReport fr = factored_sets(fs, factor_analysis(fs));
        CHECK(fr.boundary_source == SetProvenance::shortcut);
        CHECK(fr.eccentric_source == SetProvenance::direct);
        CHECK(fr.report.boundary == std::vector<Vertex>{0, 1, 2, 6, 7, 8});
        const BoundaryReport direct = full_report(n_ary_product(fs));
        CHECK(fr.report.boundary == direct.boundary);
        CHECK(fr.report.periphery == direct.periphery);
        CHECK(fr.report.contour == direct.contour);
        CHECK(fr.report.eccentric == direct.eccentric);
    }
    SUBCASE("three factors, one non-symmetric: everything by shortcut") {
        const std::vector<Digraph> fs{fixtures::p3u(), fixtures::p3u(),
                                      fixtures::theta5()};
        const FactoredReport fr = factored_sets(fs, factor_analysis(fs));
        CHECK(fr.boundary_source == SetProvenance::shortcut);
        CHECK(fr.periphery_source == SetProvenance::shortcut);
        CHECK(fr.contour_source == SetProvenance::shortcut);
        // eccentric set: two-sidedness fails for the third factor, so the
        // classification flag is off, but the symmetric-majority licence
        // does not apply either way without it
        CHECK(fr.eccentric_source == SetProvenance::direct);
        const BoundaryReport direct = full_report(n_ary_product(fs));
        CHECK(fr.report.boundary == direct.boundary);
        CHECK(fr.report.periphery == direct.periphery);
        CHECK(fr.report.contour == direct.contour);
        CHECK(fr.report.eccentric == direct.eccentric);
        CHECK(fr.report.ecc == direct.ecc);
        CHECK(fr.report.diameter == direct.diameter);
    }
    SUBCASE("factored report matches direct analysis on random factor lists") {
        for (std::uint64_t seed = 0; seed < 80; ++seed) {
            std::vector<Digraph> fs;
            fs.push_back(rand_strong(1 + seed % 4, 0.3, seed * 5));
            fs.push_back(seed % 2 ? random_symmetric_strong_digraph(
                                        {1 + static_cast<int>((seed + 1) % 4), 0.3, seed})
                                  : directed_cycle(1 + static_cast<int>(seed % 5)));
            if (seed % 3 == 0) fs.push_back(rand_strong(1 + (seed + 2) % 3, 0.3, seed + 9));
            const FactoredReport fr = factored_sets(fs, factor_analysis(fs));
            const BoundaryReport direct = full_report(n_ary_product(fs));
            CAPTURE(seed);
            CHECK(fr.report.diameter == direct.diameter);
            CHECK(fr.report.ecc == direct.ecc);
            CHECK(fr.report.tse == direct.tse);
            CHECK(fr.report.boundary == direct.boundary);
            CHECK(fr.report.eccentric == direct.eccentric);
            CHECK(fr.report.contour == direct.contour);
            CHECK(fr.report.periphery == direct.periphery);
        }
    }
    SUBCASE("a product past the budget is fine as long as no fallback is needed") {
        // two directed 65-cycles: 4225 product vertices, every set licensed
        const std::vector<Digraph> fs{directed_cycle(65), directed_cycle(65)};
        const FactoredReport fr = factored_sets(fs, factor_analysis(fs));
        CHECK(fr.report.diameter == 128);
        CHECK(fr.report.periphery.size() == 4225);
        CHECK(fr.periphery_source == SetProvenance::shortcut);
        // a fallback-needing pair of the same size must refuse instead of
        // silently building a 4225-vertex digraph
        const std::vector<Digraph> bad{
            cartesian_product(fixtures::theta5(), directed_cycle(13)),
            fixtures::r5()};
        CHECK_THROWS_AS(factored_sets(bad, factor_analysis(bad), 300), BudgetError);
    }
    SUBCASE("cycles and symmetric factors license the eccentric product") {
        const std::vector<Digraph> cyc{fixtures::c3(), directed_cycle(4)};
        const FactoredReport fc = factored_sets(cyc, factor_analysis(cyc));
        CHECK(fc.eccentric_source == SetProvenance::shortcut);
        CHECK(fc.report.eccentric == full_report(n_ary_product(cyc)).eccentric);

        const std::vector<Digraph> sym{fixtures::p3u(), fixtures::c3()};
        const FactoredReport fsym = factored_sets(sym, factor_analysis(sym));
        CHECK(fsym.eccentric_source == SetProvenance::shortcut);
        CHECK(fsym.report.eccentric == full_report(n_ary_product(sym)).eccentric);
    }
}

TEST_CASE("product set theorems on random factors") {
    SUBCASE("periphery subset, unconditional") {
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            const Digraph d1 = rand_strong(1 + seed % 5, 0.3, seed);
            const Digraph d2 = rand_strong(1 + (seed + 3) % 5, 0.3, seed + 1000);
            CAPTURE(seed);
            CHECK(check_periphery_subset(d1, d2).empty());
        }
    }
    SUBCASE("contour subset fails when both factors are one-sided") {
        // frozen counterexample: the product gains contour vertex (2,2)
        const Digraph d1 = Digraph::build(
            4, {{0, 2}, {1, 0}, {1, 2}, {1, 3}, {2, 1}, {3, 0}, {3, 1}});
        const Digraph d2 = Digraph::build(3, {{0, 2}, {1, 0}, {2, 0}, {2, 1}});
        REQUIRE_FALSE(has_tse(md_tables(d1)));
        REQUIRE_FALSE(has_tse(md_tables(d2)));
        CHECK(check_contour_subset(d1, d2) ==
              "contour vertex (2,2) of the product escapes Ct x Ct");
    }
    SUBCASE("set equalities under the two-sided hypotheses") {
        for (std::uint64_t seed = 0; seed < 120; ++seed) {
            const Digraph d1 = random_symmetric_strong_digraph(
                {1 + static_cast<int>(seed % 5), 0.4, seed});
            const Digraph d2 = rand_strong(1 + (seed + 2) % 5, 0.3, seed + 500);
            CAPTURE(seed);
            CHECK(check_product_set_equalities(d1, d2).empty());
            CHECK(check_symmetric_factor_equalities(d1, d2).empty());
        }
    }
    SUBCASE("two-sidedness of both factors does not force Ecc equality") {
        // pinned counterexample: both copies of this digraph are two-sided,
        // yet (0,1) and (1,0) of the product are non-eccentric members of
        // Ecc x Ecc; only the containment direction survives
        const Digraph a =
            Digraph::build(4, {{0, 1}, {1, 2}, {1, 3}, {2, 0}, {3, 0}});
        REQUIRE(has_tse(md_tables(a)));
        REQUIRE_FALSE(is_symmetric(a));
        CHECK(check_eccentric_equality_all_tse(a, a) ==
              "both factors two-sided but (0,1) from Ecc x Ecc is not "
              "eccentric in the product");
        // the sound direction still holds
        CHECK(check_product_set_equalities(a, a).empty());

        // factored_sets therefore refuses the eccentric-set shortcut here
        // even though the classification flag is on
        const std::vector<Digraph> fs{a, a};
        const FactorAnalysis analysis = factor_analysis(fs);
        CHECK(analysis.ecc_shortcut_valid);
        const FactoredReport fr = factored_sets(fs, analysis);
        CHECK(fr.eccentric_source == SetProvenance::direct);
        CHECK(fr.periphery_source == SetProvenance::shortcut);
        CHECK(fr.report.eccentric == full_report(n_ary_product(fs)).eccentric);
    }
    SUBCASE("two-sided property multiplies") {
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            const Digraph d1 = rand_strong(1 + seed % 5, 0.3, seed * 13);
            const Digraph d2 = rand_strong(1 + (seed + 1) % 5, 0.3, seed * 13 + 7);
            CAPTURE(seed);
            CHECK(check_tse_iff(d1, d2).empty());
        }
    }
    SUBCASE("strong connectivity multiplies") {
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            const Digraph d1 = random_digraph({2 + static_cast<int>(seed % 4), 0.3, seed});
            const Digraph d2 = random_digraph({2 + static_cast<int>((seed + 2) % 4), 0.3, seed + 77});
            CAPTURE(seed);
            CHECK(check_strong_iff(d1, d2).empty());
        }
    }
}

TEST_CASE("product decomposition checker") {
    SUBCASE("constructed product matches its factors") {
        const Digraph p = cartesian_product(fixtures::c3(), fixtures::c3());
        CHECK(verify_product_decomposition(p, {fixtures::c3(), fixtures::c3()}));
    }
    SUBCASE("vertex counts must multiply out") {
        CHECK_THROWS_AS(
            verify_product_decomposition(fixtures::c3(), {fixtures::c3(), fixtures::c3()}),
            InvalidDigraphError);
    }
    SUBCASE("the 9-cycle is not the product of two triangles") {
        CHECK_FALSE(
            verify_product_decomposition(directed_cycle(9), {fixtures::c3(), fixtures::c3()}));
    }
    SUBCASE("relabelled products are recognized") {
        // permute the vertices of the triangle grid and check isomorphism
        const Digraph p = cartesian_product(fixtures::c3(), fixtures::c3());
        const std::vector<Vertex> perm{4, 7, 0, 2, 8, 3, 6, 1, 5};
        std::vector<Arc> arcs;
        for (const Arc& a : p.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
        const Digraph shuffled = Digraph::build(9, std::move(arcs));
        CHECK(verify_product_decomposition(shuffled, {fixtures::c3(), fixtures::c3()}));
        // and a near miss: rewire one arc head, breaking in-regularity
        std::vector<Arc> damaged = shuffled.arcs();
        const Arc first = damaged.front();
        damaged.erase(damaged.begin());
        for (Vertex c = 0; c < 9; ++c) {
            if (c == first.tail) continue;
            if (std::binary_search(shuffled.arcs().begin(), shuffled.arcs().end(),
                                   Arc{first.tail, c}))
                continue;
            damaged.push_back({first.tail, c});
            break;
        }
        const Digraph wrong = Digraph::build(9, std::move(damaged));
        CHECK_FALSE(verify_product_decomposition(wrong, {fixtures::c3(), fixtures::c3()}));
    }
    SUBCASE("three-factor decomposition") {
        const Digraph c2 = directed_cycle(2);
        const Digraph p = n_ary_product({c2, fixtures::c3(), c2});
        CHECK(verify_product_decomposition(p, {c2, fixtures::c3(), c2}));
    }
    SUBCASE("size budget") {
        const Digraph p = n_ary_product({fixtures::c3(), fixtures::c3(), fixtures::c3()});
        CHECK_THROWS_AS(
            verify_product_decomposition(p, {fixtures::c3(), fixtures::c3(), fixtures::c3()}),
            BudgetError);
        CHECK(verify_product_decomposition(
            p, {fixtures::c3(), fixtures::c3(), fixtures::c3()}, 27));
    }
}
