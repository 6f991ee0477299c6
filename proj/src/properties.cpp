#include "mdg/properties.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "mdg/oracle.hpp"
#include "mdg/product.hpp"
#include "mdg/rng.hpp"

namespace mdg {

namespace {

std::string vertex_pair(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

bool is_subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Vertex> set_union(const std::vector<Vertex>& a,
                              const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Vertex> set_intersection(const std::vector<Vertex>& a,
                                     const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

std::vector<Vertex> pair_product(const std::vector<Vertex>& a,
                                 const std::vector<Vertex>& b, int n2) {
    std::vector<Vertex> out;
    for (Vertex i : a)
        for (Vertex r : b) out.push_back(i * n2 + r);
    return out;  // ascending because both inputs are
}

}  // namespace

// ---------------------------------------------------------------------------
// checks
// ---------------------------------------------------------------------------

std::string check_metric_axioms(const DistanceTables& t) {
    const int n = t.size();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v && t.md(u, v) != 0)
                return "md" + vertex_pair(u, v) + " != 0";
            if (u != v && t.md(u, v) <= 0)
                return "md" + vertex_pair(u, v) + " not positive";
            if (t.md(u, v) != t.md(v, u))
                return "md not symmetric at " + vertex_pair(u, v);
        }
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w = 0; w < n; ++w)
                if (t.md(u, v) > t.md(u, w) + t.md(w, v))
                    return "triangle inequality fails: md" + vertex_pair(u, v) +
                           " > md" + vertex_pair(u, w) + " + md" + vertex_pair(w, v);
    return {};
}

std::string check_tables_equal(const DistanceTables& a, const DistanceTables& b) {
    if (a.size() != b.size()) return "table sizes differ";
    for (Vertex u = 0; u < a.size(); ++u) {
        for (Vertex v = 0; v < a.size(); ++v) {
            if (a.ddist(u, v) != b.ddist(u, v))
                return "ddist" + vertex_pair(u, v) + ": " +
                       std::to_string(a.ddist(u, v)) + " vs " +
                       std::to_string(b.ddist(u, v));
            if (a.md(u, v) != b.md(u, v))
                return "md" + vertex_pair(u, v) + ": " + std::to_string(a.md(u, v)) +
                       " vs " + std::to_string(b.md(u, v));
        }
        if (a.ecc(u) != b.ecc(u))
            return "ecc(" + std::to_string(u) + "): " + std::to_string(a.ecc(u)) +
                   " vs " + std::to_string(b.ecc(u));
    }
    return {};
}

std::string check_eccentricity_bounds(const DistanceTables& t) {
    const int n = t.size();
    for (Vertex u = 0; u < n; ++u) {
        if (n >= 2 && t.ecc(u) < 1)
            return "ecc(" + std::to_string(u) + ") < 1";
        bool attained = false;
        for (Vertex v = 0; v < n; ++v) {
            if (t.md(u, v) == 0 && u != v) return "md" + vertex_pair(u, v) + " = 0";
            if (t.md(u, v) == t.ecc(u)) attained = true;
        }
        if (!attained) return "ecc(" + std::to_string(u) + ") not attained";
    }
    const int diam = t.diameter();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (t.md(u, v) == diam) return {};
    return "diameter not attained by any pair";
}

std::string check_containments(const BoundaryReport& r) {
    if (r.periphery.empty()) return "periphery empty";
    if (!is_subset(r.periphery, set_intersection(r.contour, r.eccentric)))
        return "Per not a subset of Ct intersect Ecc";
    if (!is_subset(set_union(r.eccentric, r.contour), r.boundary))
        return "Ecc union Ct not a subset of boundary";
    return {};
}

std::string check_boundary_count_gap_one(const BoundaryReport& r) {
    if (r.eccentric.size() == r.periphery.size() + 1 &&
        r.boundary.size() <= r.eccentric.size())
        return "|Ecc| = |Per|+1 = " + std::to_string(r.eccentric.size()) +
               " but |boundary| = " + std::to_string(r.boundary.size());
    return {};
}

std::string check_boundary_count_gap(const BoundaryReport& r) {
    if (r.eccentric.size() > r.periphery.size() &&
        r.boundary.size() < r.periphery.size() + 2)
        return "|Ecc| = " + std::to_string(r.eccentric.size()) + " > |Per| = " +
               std::to_string(r.periphery.size()) + " but |boundary| = " +
               std::to_string(r.boundary.size());
    return {};
}

std::string check_product_distance_lemma(const Digraph& d1, const Digraph& d2) {
    const DistanceTables t1 = md_tables(d1), t2 = md_tables(d2);
    const DistanceTables tp = md_tables(cartesian_product(d1, d2));
    const int n2 = d2.order();
    for (Vertex i = 0; i < d1.order(); ++i)
        for (Vertex r = 0; r < n2; ++r)
            for (Vertex j = 0; j < d1.order(); ++j)
                for (Vertex s = 0; s < n2; ++s) {
                    const int lemma = product_distance(t1, t2, {i, r}, {j, s});
                    const int bfs = tp.md(i * n2 + r, j * n2 + s);
                    if (lemma != bfs)
                        return "d(" + vertex_pair(i, r) + "," + vertex_pair(j, s) +
                               "): factor formula " + std::to_string(lemma) +
                               " vs explicit " + std::to_string(bfs);
                }
    return {};
}

std::string check_product_distance_bounds(const Digraph& d1, const Digraph& d2) {
    const DistanceTables t1 = md_tables(d1), t2 = md_tables(d2);
    const DistanceTables tp = md_tables(cartesian_product(d1, d2));
    const int n2 = d2.order();
    for (Vertex i = 0; i < d1.order(); ++i)
        for (Vertex r = 0; r < n2; ++r) {
            for (Vertex j = 0; j < d1.order(); ++j)
                for (Vertex s = 0; s < n2; ++s)
                    if (tp.md(i * n2 + r, j * n2 + s) > t1.md(i, j) + t2.md(r, s))
                        return "distance bound fails at " + vertex_pair(i, r) + "," +
                               vertex_pair(j, s);
            if (tp.ecc(i * n2 + r) > t1.ecc(i) + t2.ecc(r))
                return "eccentricity bound fails at " + vertex_pair(i, r);
        }
    return {};
}

std::string check_periphery_subset(const Digraph& d1, const Digraph& d2) {
    const Digraph p = cartesian_product(d1, d2);
    const BoundaryReport rp = full_report(p);
    const BoundaryReport r1 = full_report(d1), r2 = full_report(d2);
    if (!is_subset(rp.periphery, pair_product(r1.periphery, r2.periphery, d2.order())))
        return "Per(product) escapes Per x Per";
    return {};
}

std::string check_contour_subset(const Digraph& d1, const Digraph& d2) {
    const Digraph p = cartesian_product(d1, d2);
    const BoundaryReport rp = full_report(p);
    const BoundaryReport r1 = full_report(d1), r2 = full_report(d2);
    const std::vector<Vertex> cross = pair_product(r1.contour, r2.contour, d2.order());
    for (Vertex v : rp.contour)
        if (!std::binary_search(cross.begin(), cross.end(), v))
            return "contour vertex " +
                   vertex_pair(v / d2.order(), v % d2.order()) +
                   " of the product escapes Ct x Ct";
    return {};
}

std::string check_product_set_equalities(const Digraph& d1, const Digraph& d2) {
    const DistanceTables t1 = md_tables(d1), t2 = md_tables(d2);
    const bool tse1 = has_tse(t1), tse2 = has_tse(t2);
    if (!tse1 && !tse2) return {};  // no hypothesis, nothing to check

    const int n2 = d2.order();
    const BoundaryReport r1 = full_report(d1, t1), r2 = full_report(d2, t2);
    const Digraph p = cartesian_product(d1, d2);
    const BoundaryReport rp = full_report(p);

    if (rp.periphery != pair_product(r1.periphery, r2.periphery, n2))
        return "Per(product) != Per x Per with at most one one-sided factor";
    if (rp.contour != pair_product(r1.contour, r2.contour, n2))
        return "Ct(product) != Ct x Ct with at most one one-sided factor";
    if (rp.diameter != r1.diameter + r2.diameter)
        return "diam(product) != diam + diam";
    for (Vertex i = 0; i < d1.order(); ++i)
        for (Vertex r = 0; r < n2; ++r)
            if (rp.ecc[i * n2 + r] != t1.ecc(i) + t2.ecc(r))
                return "ecc" + vertex_pair(i, r) + " not coordinate-additive";
    if (!is_subset(rp.eccentric, pair_product(r1.eccentric, r2.eccentric, n2)))
        return "Ecc(product) escapes Ecc x Ecc with at most one one-sided factor";
    return {};
}

std::string check_eccentric_equality_all_tse(const Digraph& d1, const Digraph& d2) {
    const DistanceTables t1 = md_tables(d1), t2 = md_tables(d2);
    if (!has_tse(t1) || !has_tse(t2)) return {};
    const BoundaryReport r1 = full_report(d1, t1), r2 = full_report(d2, t2);
    const BoundaryReport rp = full_report(cartesian_product(d1, d2));
    const std::vector<Vertex> cross =
        pair_product(r1.eccentric, r2.eccentric, d2.order());
    if (rp.eccentric != cross) {
        for (Vertex v : cross)
            if (!std::binary_search(rp.eccentric.begin(), rp.eccentric.end(), v))
                return "both factors two-sided but " +
                       vertex_pair(v / d2.order(), v % d2.order()) +
                       " from Ecc x Ecc is not eccentric in the product";
        return "Ecc(product) differs from Ecc x Ecc";
    }
    return {};
}

std::string check_tse_iff(const Digraph& d1, const Digraph& d2) {
    const bool factors = has_tse(md_tables(d1)) && has_tse(md_tables(d2));
    const bool product = has_tse(md_tables(cartesian_product(d1, d2)));
    if (factors != product)
        return std::string("two-sided property of product is ") +
               (product ? "true" : "false") + " but factors give " +
               (factors ? "true" : "false");
    return {};
}

std::string check_strong_iff(const Digraph& d1, const Digraph& d2) {
    const bool factors = is_strongly_connected(d1) && is_strongly_connected(d2);
    const bool product = is_strongly_connected(cartesian_product(d1, d2));
    if (factors != product)
        return std::string("strong(product) is ") + (product ? "true" : "false") +
               " but strong(factors) gives " + (factors ? "true" : "false");
    return {};
}

std::string check_symmetric_factor_equalities(const Digraph& d1, const Digraph& d2) {
    if (!is_symmetric(d1)) return {};
    const DistanceTables t1 = md_tables(d1), t2 = md_tables(d2);
    const int n2 = d2.order();
    const Digraph p = cartesian_product(d1, d2);
    const DistanceTables tp = md_tables(p);
    for (Vertex i = 0; i < d1.order(); ++i)
        for (Vertex r = 0; r < n2; ++r)
            for (Vertex j = 0; j < d1.order(); ++j)
                for (Vertex s = 0; s < n2; ++s)
                    if (tp.md(i * n2 + r, j * n2 + s) != t1.md(i, j) + t2.md(r, s))
                        return "product md not additive at " + vertex_pair(i, r) +
                               "," + vertex_pair(j, s);
    const BoundaryReport r1 = full_report(d1, t1), r2 = full_report(d2, t2);
    const BoundaryReport rp = full_report(p, tp);
    if (rp.boundary != pair_product(r1.boundary, r2.boundary, n2))
        return "boundary(product) != boundary x boundary with a symmetric factor";
    if (rp.eccentric != pair_product(r1.eccentric, r2.eccentric, n2))
        return "Ecc(product) != Ecc x Ecc with a symmetric factor";
    if (rp.contour != pair_product(r1.contour, r2.contour, n2))
        return "Ct(product) != Ct x Ct with a symmetric factor";
    if (rp.periphery != pair_product(r1.periphery, r2.periphery, n2))
        return "Per(product) != Per x Per with a symmetric factor";
    return {};
}

// ---------------------------------------------------------------------------
// witness minimization
// ---------------------------------------------------------------------------

namespace {

Digraph without_arc(const Digraph& d, std::size_t index) {
    std::vector<Arc> arcs = d.arcs();
    arcs.erase(arcs.begin() + static_cast<std::ptrdiff_t>(index));
    return Digraph::build(d.order(), std::move(arcs));
}

// induced subgraph on all vertices except v, indices remapped downward
Digraph without_vertex(const Digraph& d, Vertex v) {
    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs()) {
        if (a.tail == v || a.head == v) continue;
        arcs.push_back({a.tail - (a.tail > v ? 1 : 0), a.head - (a.head > v ? 1 : 0)});
    }
    return Digraph::build(d.order() - 1, std::move(arcs));
}

}  // namespace

Digraph minimize_witness(const Digraph& d,
                         const std::function<bool(const Digraph&)>& still_fails) {
    Digraph current = d;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (std::size_t i = 0; i < current.arcs().size(); ++i) {
            Digraph candidate = without_arc(current, i);
            if (still_fails(candidate)) {
                current = std::move(candidate);
                shrunk = true;
                break;
            }
        }
        if (shrunk) continue;
        for (Vertex v = 0; v < current.order() && current.order() > 1; ++v) {
            Digraph candidate = without_vertex(current, v);
            if (still_fails(candidate)) {
                current = std::move(candidate);
                shrunk = true;
                break;
            }
        }
    }
    return current;
}

// ---------------------------------------------------------------------------
// suite driver
// ---------------------------------------------------------------------------

namespace {

// ordered-pair index in the lexicographic pair list of an n-vertex digraph
int pair_index(int n, Vertex a, Vertex b) { return a * (n - 1) + b - (b > a ? 1 : 0); }

Digraph digraph_from_mask(int n, std::uint32_t mask) {
    std::vector<Arc> arcs;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (a != b && (mask >> pair_index(n, a, b) & 1u)) arcs.push_back({a, b});
    return Digraph::build(n, std::move(arcs));
}

}  // namespace

Digraph regenerate(const WitnessSource& source) {
    if (source.family == "strong") return random_strong_digraph(source.config);
    if (source.family == "symmetric")
        return random_symmetric_strong_digraph(source.config);
    if (source.family == "cycle") return directed_cycle(source.config.n);
    if (source.family == "digraph") return random_digraph(source.config);
    if (source.family == "tse") {
        // rejection-sample strong two-sided digraphs from the unconstrained
        // arc family: unlike the Hamiltonian-backbone generator it reaches
        // every strong digraph, e.g. the non-Hamiltonian ones among which the
        // eccentric-set equality counterexamples live. The directed cycle is
        // the deterministic fallback (it always has the property).
        GeneratorConfig cfg = source.config;
        cfg.extra_arc_probability = std::max(cfg.extra_arc_probability, 0.35);
        for (std::uint64_t attempt = 0; attempt < 300; ++attempt) {
            cfg.seed = derive_seed(source.config.seed, attempt);
            Digraph d = random_digraph(cfg);
            if (!is_strongly_connected(d)) continue;
            if (has_tse(md_tables(d))) return d;
        }
        return directed_cycle(source.config.n);
    }
    if (source.family == "exhaustive")
        return digraph_from_mask(source.config.n,
                                 static_cast<std::uint32_t>(source.config.seed));
    throw Error("unknown witness family: " + source.family);
}

namespace {

constexpr std::array<double, 4> kDensities{0.0, 0.1, 0.25, 0.5};

WitnessSource draw_source(SplitMix64& meta, const std::string& family, int min_n,
                          int max_n) {
    GeneratorConfig cfg;
    cfg.n = min_n + static_cast<int>(meta.next_below(
                        static_cast<std::uint64_t>(max_n - min_n + 1)));
    cfg.extra_arc_probability = kDensities[meta.next_below(kDensities.size())];
    cfg.seed = meta.split();
    return {family, cfg};
}

using SingleCheck = std::function<std::string(const Digraph&)>;
using PairCheck = std::function<std::string(const Digraph&, const Digraph&)>;

// checker exceptions mean "no longer a witness" during minimization
bool fails_quietly(const SingleCheck& check, const Digraph& d) {
    try {
        return !check(d).empty();
    } catch (const Error&) {
        return false;
    }
}

PropertyOutcome run_single_property(const std::string& name, PropertyClass kind,
                                    const SuiteConfig& cfg, std::uint64_t stream,
                                    const std::string& family, int min_n,
                                    int max_n, const SingleCheck& check) {
    PropertyOutcome outcome{name, kind, cfg.trials, {}};
    for (int t = 0; t < cfg.trials; ++t) {
        SplitMix64 meta(derive_seed(stream, static_cast<std::uint64_t>(t)));
        const WitnessSource source = draw_source(meta, family, min_n, max_n);
        const Digraph d = regenerate(source);
        std::string detail = check(d);
        if (detail.empty()) continue;
        Digraph witness = minimize_witness(
            d, [&](const Digraph& g) { return fails_quietly(check, g); });
        outcome.failures.push_back({{source}, {witness}, std::move(detail)});
    }
    return outcome;
}

PropertyOutcome run_pair_property(const std::string& name, PropertyClass kind,
                                  const SuiteConfig& cfg, std::uint64_t stream,
                                  const std::string& family1,
                                  const std::string& family2, int max_factor_n,
                                  const PairCheck& check, int min_factor_n = 1) {
    PropertyOutcome outcome{name, kind, cfg.trials, {}};
    const int lo = std::min(min_factor_n, max_factor_n);
    for (int t = 0; t < cfg.trials; ++t) {
        SplitMix64 meta(derive_seed(stream, static_cast<std::uint64_t>(t)));
        const WitnessSource s1 = draw_source(meta, family1, lo, max_factor_n);
        const WitnessSource s2 = draw_source(meta, family2, lo, max_factor_n);
        const Digraph d1 = regenerate(s1), d2 = regenerate(s2);
        std::string detail;
        try {
            detail = check(d1, d2);
        } catch (const Error&) {
            continue;  // vacuous trial (e.g. non-strong factor)
        }
        if (detail.empty()) continue;
        Digraph w1 = minimize_witness(d1, [&](const Digraph& g) {
            try {
                return !check(g, d2).empty();
            } catch (const Error&) {
                return false;
            }
        });
        Digraph w2 = minimize_witness(d2, [&](const Digraph& g) {
            try {
                return !check(w1, g).empty();
            } catch (const Error&) {
                return false;
            }
        });
        outcome.failures.push_back({{s1, s2}, {w1, w2}, std::move(detail)});
    }
    return outcome;
}

}  // namespace

std::vector<PropertyOutcome> run_property_suite(const SuiteConfig& cfg) {
    if (cfg.trials < 1) throw Error("property suite needs at least one trial");
    const int max_n = std::max(1, cfg.max_n);
    const int max_factor_n = std::min(max_n, 6);
    std::vector<PropertyOutcome> outcomes;
    std::uint64_t stream = 0;
    auto next_stream = [&] { return derive_seed(cfg.seed, stream++); };

    outcomes.push_back(run_single_property(
        "md-metric-axioms", PropertyClass::must_hold, cfg, next_stream(), "strong",
        1, max_n, [](const Digraph& d) { return check_metric_axioms(md_tables(d)); }));

    outcomes.push_back(run_single_property(
        "md-tables-match-relaxation-oracle", PropertyClass::must_hold, cfg,
        next_stream(), "strong", 1, max_n, [](const Digraph& d) {
            return check_tables_equal(md_tables(d), oracle_md(d));
        }));

    outcomes.push_back(run_single_property(
        "eccentricity-bounds", PropertyClass::must_hold, cfg, next_stream(),
        "strong", 1, max_n,
        [](const Digraph& d) { return check_eccentricity_bounds(md_tables(d)); }));

    outcomes.push_back(run_single_property(
        "symmetric-matches-undirected-reference", PropertyClass::must_hold, cfg,
        next_stream(), "symmetric", 1, max_n, [](const Digraph& d) {
            const BoundaryReport a = full_report(d);
            const BoundaryReport b = undirected_reference_report(d);
            if (a.ecc != b.ecc) return std::string("eccentricities differ");
            if (a.boundary != b.boundary) return std::string("boundary differs");
            if (a.eccentric != b.eccentric) return std::string("Ecc differs");
            if (a.contour != b.contour) return std::string("Ct differs");
            if (a.periphery != b.periphery) return std::string("Per differs");
            return std::string{};
        }));

    outcomes.push_back(run_single_property(
        "containments-per-ct-ecc-boundary", PropertyClass::must_hold, cfg,
        next_stream(), "strong", 1, max_n,
        [](const Digraph& d) { return check_containments(full_report(d)); }));

    outcomes.push_back(run_single_property(
        "boundary-count-when-ecc-exceeds-per-by-one",
        PropertyClass::counterexample_search, cfg, next_stream(), "strong", 1,
        max_n,
        [](const Digraph& d) { return check_boundary_count_gap_one(full_report(d)); }));

    outcomes.push_back(run_single_property(
        "boundary-count-when-ecc-exceeds-per",
        PropertyClass::counterexample_search, cfg, next_stream(), "strong", 1,
        max_n,
        [](const Digraph& d) { return check_boundary_count_gap(full_report(d)); }));

    outcomes.push_back(run_single_property(
        "directed-cycle-sets-are-whole-vertex-set", PropertyClass::must_hold, cfg,
        next_stream(), "cycle", 1, std::max(3, max_n), [](const Digraph& d) {
            const BoundaryReport r = full_report(d);
            std::vector<Vertex> all(d.order());
            std::iota(all.begin(), all.end(), 0);
            if (r.boundary != all || r.eccentric != all || r.contour != all ||
                r.periphery != all)
                return std::string("some boundary-type set misses a cycle vertex");
            return std::string{};
        }));

    outcomes.push_back(run_single_property(
        "tse-invariant-under-reversal", PropertyClass::must_hold, cfg,
        next_stream(), "strong", 1, max_n, [](const Digraph& d) {
            if (has_tse(md_tables(d)) != has_tse(md_tables(reverse(d))))
                return std::string("two-sided property differs under reversal");
            return std::string{};
        }));

    outcomes.push_back(run_single_property(
        "reversal-involution-and-strong-invariance", PropertyClass::must_hold, cfg,
        next_stream(), "digraph", 1, max_n, [](const Digraph& d) {
            if (!(reverse(reverse(d)) == d))
                return std::string("reverse is not an involution");
            if (is_strongly_connected(d) != is_strongly_connected(reverse(d)))
                return std::string("strong connectivity differs under reversal");
            return std::string{};
        }));

    outcomes.push_back(run_single_property(
        "strong-connectivity-matches-reachability-oracle",
        PropertyClass::must_hold, cfg, next_stream(), "digraph", 1, max_n,
        [](const Digraph& d) {
            if (is_strongly_connected(d) != oracle_strongly_connected(d))
                return std::string("strong-connectivity mismatch vs oracle");
            return std::string{};
        }));

    {
        PropertyOutcome outcome{"generator-determinism-and-strongness",
                                PropertyClass::must_hold, cfg.trials, {}};
        std::uint64_t s = next_stream();
        for (int t = 0; t < cfg.trials; ++t) {
            SplitMix64 meta(derive_seed(s, static_cast<std::uint64_t>(t)));
            const WitnessSource source = draw_source(meta, "strong", 1, max_n);
            const Digraph a = regenerate(source), b = regenerate(source);
            if (!(a == b))
                outcome.failures.push_back({{source}, {a}, "regeneration differs"});
            else if (!is_strongly_connected(a))
                outcome.failures.push_back({{source}, {a}, "generated digraph not strong"});
        }
        outcomes.push_back(std::move(outcome));
    }

    outcomes.push_back(run_pair_property(
        "product-distance-lemma", PropertyClass::must_hold, cfg, next_stream(),
        "strong", "strong", max_factor_n, check_product_distance_lemma));

    outcomes.push_back(run_pair_property(
        "product-distance-and-eccentricity-bounds", PropertyClass::must_hold, cfg,
        next_stream(), "strong", "strong", max_factor_n,
        check_product_distance_bounds));

    outcomes.push_back(run_pair_property(
        "periphery-product-subset", PropertyClass::must_hold, cfg, next_stream(),
        "strong", "strong", max_factor_n, check_periphery_subset));

    outcomes.push_back(run_pair_property(
        "contour-product-subset", PropertyClass::counterexample_search, cfg,
        next_stream(), "strong", "strong", max_factor_n, check_contour_subset));

    outcomes.push_back(run_pair_property(
        "product-set-equalities-under-two-sided-factors", PropertyClass::must_hold,
        cfg, next_stream(), "strong", "symmetric", max_factor_n,
        check_product_set_equalities));

    outcomes.push_back(run_pair_property(
        "product-set-equalities-random-factors", PropertyClass::must_hold, cfg,
        next_stream(), "strong", "strong", max_factor_n,
        check_product_set_equalities));

    outcomes.push_back(run_pair_property(
        "eccentric-product-equality-all-two-sided",
        PropertyClass::counterexample_search, cfg, next_stream(), "tse", "tse",
        std::min(max_factor_n, 5), check_eccentric_equality_all_tse, 3));

    outcomes.push_back(run_pair_property(
        "tse-product-iff-factors", PropertyClass::must_hold, cfg, next_stream(),
        "strong", "strong", max_factor_n, check_tse_iff));

    outcomes.push_back(run_pair_property(
        "strong-product-iff-factors", PropertyClass::must_hold, cfg, next_stream(),
        "digraph", "digraph", max_factor_n, check_strong_iff));

    outcomes.push_back(run_pair_property(
        "symmetric-factor-additivity-and-set-equalities", PropertyClass::must_hold,
        cfg, next_stream(), "symmetric", "strong", max_factor_n,
        check_symmetric_factor_equalities));

    outcomes.push_back(run_pair_property(
        "symmetric-or-cycle-factors-are-two-sided", PropertyClass::must_hold, cfg,
        next_stream(), "symmetric", "cycle", max_factor_n,
        [](const Digraph& d1, const Digraph& d2) {
            if (!has_tse(md_tables(d1)))
                return std::string("symmetric digraph without two-sided property");
            if (!has_tse(md_tables(d2)))
                return std::string("directed cycle without two-sided property");
            return std::string{};
        }));

    {
        // the production path end to end: a factored report must agree with
        // direct analysis of the explicit product whatever mix of shortcut
        // and fallback routes it took
        PropertyOutcome outcome{"factored-report-matches-direct",
                                PropertyClass::must_hold, cfg.trials, {}};
        std::uint64_t s = next_stream();
        const char* families[] = {"strong", "symmetric", "cycle", "tse"};
        const int cap = std::min(max_factor_n, 4);
        for (int t = 0; t < cfg.trials; ++t) {
            SplitMix64 meta(derive_seed(s, static_cast<std::uint64_t>(t)));
            const int count = 2 + static_cast<int>(meta.next_below(2));
            std::vector<WitnessSource> sources;
            std::vector<Digraph> factors;
            for (int i = 0; i < count; ++i) {
                sources.push_back(
                    draw_source(meta, families[meta.next_below(4)], 1, cap));
                factors.push_back(regenerate(sources.back()));
            }
            const FactoredReport fr = factored_sets(factors, factor_analysis(factors));
            const BoundaryReport direct = full_report(n_ary_product(factors));
            if (fr.report.diameter != direct.diameter ||
                fr.report.ecc != direct.ecc || fr.report.tse != direct.tse ||
                fr.report.boundary != direct.boundary ||
                fr.report.eccentric != direct.eccentric ||
                fr.report.contour != direct.contour ||
                fr.report.periphery != direct.periphery)
                outcome.failures.push_back(
                    {sources, factors, "factored report differs from direct analysis"});
        }
        outcomes.push_back(std::move(outcome));
    }

    {
        // three small factors: direct n-ary construction vs binary left fold
        PropertyOutcome outcome{"nary-product-equals-binary-fold",
                                PropertyClass::must_hold, cfg.trials, {}};
        std::uint64_t s = next_stream();
        const int cap = std::min(max_factor_n, 4);
        for (int t = 0; t < cfg.trials; ++t) {
            SplitMix64 meta(derive_seed(s, static_cast<std::uint64_t>(t)));
            const WitnessSource s1 = draw_source(meta, "strong", 1, cap);
            const WitnessSource s2 = draw_source(meta, "strong", 1, cap);
            const WitnessSource s3 = draw_source(meta, "strong", 1, cap);
            const Digraph d1 = regenerate(s1), d2 = regenerate(s2), d3 = regenerate(s3);
            const Digraph direct = n_ary_product({d1, d2, d3});
            const Digraph folded = cartesian_product(cartesian_product(d1, d2), d3);
            if (direct.arcs() != folded.arcs() || direct.order() != folded.order())
                outcome.failures.push_back(
                    {{s1, s2, s3}, {d1, d2, d3}, "fold and n-ary construction differ"});
        }
        outcomes.push_back(std::move(outcome));
    }

    return outcomes;
}

bool has_must_hold_violation(const std::vector<PropertyOutcome>& outcomes) {
    return std::any_of(outcomes.begin(), outcomes.end(), [](const PropertyOutcome& o) {
        return o.kind == PropertyClass::must_hold && !o.failures.empty();
    });
}

// ---------------------------------------------------------------------------
// counterexample search
// ---------------------------------------------------------------------------

namespace {

bool interval_closure_witness(const Digraph& d, std::string& detail) {
    if (!is_strongly_connected(d)) return false;
    const DistanceTables t = md_tables(d);
    const BoundaryReport r = full_report(d, t);
    if (r.contour != r.periphery) return false;
    const std::vector<Vertex> closure = geodetic_closure(t, r.contour);
    if (static_cast<int>(closure.size()) == d.order()) return false;
    for (Vertex v = 0; v < d.order(); ++v) {
        if (!std::binary_search(closure.begin(), closure.end(), v)) {
            detail = "Ct = Per but vertex " + std::to_string(v) +
                     " is outside I[Ct]";
            return true;
        }
    }
    return false;
}

bool cardinality_two_witness(const Digraph& d, std::string& detail) {
    if (!is_strongly_connected(d)) return false;
    const BoundaryReport r = full_report(d);
    if (r.contour.size() == 2 && r.periphery.size() == 2 && r.boundary.size() == 3) {
        detail = "|Ct| = |Per| = 2 with |boundary| = 3";
        return true;
    }
    return false;
}

bool is_witness(CounterexampleKind kind, const Digraph& d, std::string& detail) {
    return kind == CounterexampleKind::interval_closure
               ? interval_closure_witness(d, detail)
               : cardinality_two_witness(d, detail);
}

// lexicographically smallest arc mask over all vertex relabelings
std::uint32_t canonical_mask(const Digraph& d) {
    const int n = d.order();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = UINT32_MAX;
    do {
        std::uint32_t mask = 0;
        for (const Arc& a : d.arcs())
            mask |= 1u << pair_index(n, perm[a.tail], perm[a.head]);
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// fast strong-connectivity for the exhaustive scan: bitmask closure from 0
bool mask_strong(int n, const std::array<std::uint8_t, 5>& out,
                 const std::array<std::uint8_t, 5>& in) {
    const std::uint8_t all = static_cast<std::uint8_t>((1u << n) - 1);
    for (const auto& adj : {out, in}) {
        std::uint8_t seen = 1;
        for (;;) {
            std::uint8_t next = seen;
            for (int v = 0; v < n; ++v)
                if (seen >> v & 1) next |= adj[v];
            if (next == seen) break;
            seen = next;
        }
        if (seen != all) return false;
    }
    return true;
}

}  // namespace

PropertyOutcome search_counterexample(CounterexampleKind kind, int trials,
                                      int max_n, std::uint64_t seed,
                                      bool symmetric_only) {
    const std::string name = kind == CounterexampleKind::interval_closure
                                 ? "interval-closure-counterexample"
                                 : "cardinality-two-counterexample";
    PropertyOutcome outcome{name, PropertyClass::counterexample_search, trials, {}};
    if (trials == 0) return outcome;
    if (max_n < 2) return outcome;

    // randomized phase
    for (int t = 0; t < trials; ++t) {
        SplitMix64 meta(derive_seed(seed, static_cast<std::uint64_t>(t)));
        WitnessSource source =
            draw_source(meta, symmetric_only ? "symmetric" : "strong", 2, max_n);
        const Digraph d = regenerate(source);
        std::string detail;
        if (!is_witness(kind, d, detail)) continue;
        Digraph witness = minimize_witness(d, [&](const Digraph& g) {
            if (symmetric_only && !is_symmetric(g)) return false;
            std::string ignore;
            try {
                return is_witness(kind, g, ignore);
            } catch (const Error&) {
                return false;
            }
        });
        outcome.failures.push_back({{source}, {witness}, detail});
        return outcome;
    }

    // exhaustive fallback over all digraphs with up to min(max_n, 5) vertices,
    // in a fixed enumeration order; reported witnesses deduplicated up to
    // isomorphism
    const int cap = std::min(max_n, 5);
    constexpr int kMaxCollected = 8;
    for (int n = 2; n <= cap && outcome.failures.empty(); ++n) {
        std::vector<std::pair<std::uint32_t, Digraph>> found;
        const int bits = symmetric_only ? n * (n - 1) / 2 : n * (n - 1);
        const std::uint32_t limit = 1u << bits;
        for (std::uint32_t mask = 1; mask < limit; ++mask) {
            if (static_cast<int>(found.size()) >= kMaxCollected) break;
            std::uint32_t arc_mask = mask;
            if (symmetric_only) {
                // expand undirected edge bits into both arc directions
                arc_mask = 0;
                int bit = 0;
                for (Vertex a = 0; a < n; ++a)
                    for (Vertex b = a + 1; b < n; ++b, ++bit)
                        if (mask >> bit & 1u)
                            arc_mask |= (1u << pair_index(n, a, b)) |
                                        (1u << pair_index(n, b, a));
            }
            std::array<std::uint8_t, 5> out{}, in{};
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = 0; b < n; ++b)
                    if (a != b && (arc_mask >> pair_index(n, a, b) & 1u)) {
                        out[a] |= static_cast<std::uint8_t>(1u << b);
                        in[b] |= static_cast<std::uint8_t>(1u << a);
                    }
            if (!mask_strong(n, out, in)) continue;
            const Digraph d = digraph_from_mask(n, arc_mask);
            std::string detail;
            if (is_witness(kind, d, detail)) found.emplace_back(arc_mask, d);
        }
        std::set<std::uint32_t> canon_seen;
        for (const auto& [arc_mask, d] : found) {
            if (!canon_seen.insert(canonical_mask(d)).second) continue;
            std::string detail;
            is_witness(kind, d, detail);
            WitnessSource source{"exhaustive", GeneratorConfig{n, 0.0, arc_mask}};
            outcome.failures.push_back({{source}, {d}, detail});
        }
    }
    return outcome;
}

}  // namespace mdg
