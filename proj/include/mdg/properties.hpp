#ifndef MDG_PROPERTIES_HPP
#define MDG_PROPERTIES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mdg/boundary.hpp"
#include "mdg/digraph.hpp"
#include "mdg/distance.hpp"
#include "mdg/generator.hpp"

namespace mdg {

/**
 * Two kinds of suite entries. A must-hold property is asserted: any failure
 * means the implementation (or the statement) is broken and flips the suite
 * exit status. A counterexample search collects witnesses of statements that
 * are known to fail for digraphs under the md metric; findings are reported
 * but expected.
 */
enum class PropertyClass { must_hold, counterexample_search };

/// How a trial digraph was produced, for replay.
struct WitnessSource {
    std::string family;  // "strong" | "symmetric" | "cycle" | "digraph"
    GeneratorConfig config;
};

/// Regenerate the digraph described by a witness source.
Digraph regenerate(const WitnessSource& source);

struct PropertyFailure {
    std::vector<WitnessSource> sources;  // generation recipe, one per digraph
    std::vector<Digraph> witnesses;      // greedily minimized
    std::string detail;
};

struct PropertyOutcome {
    std::string name;
    PropertyClass kind = PropertyClass::must_hold;
    int trials = 0;
    std::vector<PropertyFailure> failures;
};

struct SuiteConfig {
    int trials = 1000;
    int max_n = 7;
    std::uint64_t seed = 0;
};

/// Run every property over fresh seeded digraphs. Deterministic for a fixed
/// config.
std::vector<PropertyOutcome> run_property_suite(const SuiteConfig& cfg);

/// True when some must-hold property failed.
bool has_must_hold_violation(const std::vector<PropertyOutcome>& outcomes);

/// Greedily delete arcs, then vertices, while still_fails stays true. The
/// predicate must return false on digraphs that no longer witness anything.
Digraph minimize_witness(const Digraph& d,
                         const std::function<bool(const Digraph&)>& still_fails);

// ---------------------------------------------------------------------------
// Individual checks. Each returns an empty string when the property holds and
// a short witness description otherwise. Exposed so tests can run them
// directly and feed them deliberately broken tables.
// ---------------------------------------------------------------------------

/// Positivity, identity, symmetry and the triangle inequality of md, checked
/// over all vertex triples.
std::string check_metric_axioms(const DistanceTables& t);

/// Elementwise equality of two distance tables.
std::string check_tables_equal(const DistanceTables& a, const DistanceTables& b);

/// ecc >= 1 for n >= 2, the diameter is attained, md(u,v)=0 iff u=v.
std::string check_eccentricity_bounds(const DistanceTables& t);

/// Per subset of (Ct intersect Ecc); (Ecc union Ct) subset of boundary.
std::string check_containments(const BoundaryReport& r);

/// |boundary| > |Ecc| whenever |Ecc| = |Per| + 1. Fails on some digraphs.
std::string check_boundary_count_gap_one(const BoundaryReport& r);

/// |boundary| >= |Per| + 2 whenever |Ecc| > |Per|. Fails on some digraphs.
std::string check_boundary_count_gap(const BoundaryReport& r);

/// Factor-table product distances equal BFS-md distances on the explicit
/// product, for every ordered pair of product vertices.
std::string check_product_distance_lemma(const Digraph& d1, const Digraph& d2);

/// d((i,r),(j,s)) <= md1(i,j) + md2(r,s) and ecc(i,r) <= ecc1(i) + ecc2(r).
std::string check_product_distance_bounds(const Digraph& d1, const Digraph& d2);

/// Per(D1 x D2) subset of Per(D1) x Per(D2); holds unconditionally.
std::string check_periphery_subset(const Digraph& d1, const Digraph& d2);

/// Ct(D1 x D2) subset of Ct(D1) x Ct(D2); fails when both factors lack the
/// two-sided eccentricity property.
std::string check_contour_subset(const Digraph& d1, const Digraph& d2);

/// With at most one factor lacking the two-sided property: Per and Ct
/// products equal the direct sets, the product diameter and eccentricities
/// are coordinate-additive, and Ecc(D1 x D2) is contained in Ecc x Ecc.
std::string check_product_set_equalities(const Digraph& d1, const Digraph& d2);

/// Ecc(D1 x D2) = Ecc(D1) x Ecc(D2) when both factors are two-sided. The
/// containment always holds but equality fails on some factor pairs, the
/// smallest known on 4 vertices each.
std::string check_eccentric_equality_all_tse(const Digraph& d1, const Digraph& d2);

/// has_tse(D1 x D2) == has_tse(D1) && has_tse(D2).
std::string check_tse_iff(const Digraph& d1, const Digraph& d2);

/// is_strongly_connected(D1 x D2) == both factors strong.
std::string check_strong_iff(const Digraph& d1, const Digraph& d2);

/// With d1 symmetric: product md is coordinate-additive for all pairs and all
/// four factored sets equal the directly computed ones.
std::string check_symmetric_factor_equalities(const Digraph& d1, const Digraph& d2);

/// Kinds of counterexample searched for by search_counterexample.
enum class CounterexampleKind {
    /// Ct(D) = Per(D) yet I[Ct(D)] != V(D).
    interval_closure,
    /// |Ct| = |Per| = 2 with |boundary| = 3.
    cardinality_two,
};

/**
 * Randomized search first; when the random phase finds nothing, exhaustive
 * enumeration of all digraphs with up to min(max_n, 5) vertices (up to
 * isomorphism in the reported witnesses). trials = 0 skips everything and
 * returns an empty outcome. With symmetric_only set, only symmetric digraphs
 * are considered; the interval-closure statement is a theorem for those, so
 * that search must come back empty.
 */
PropertyOutcome search_counterexample(CounterexampleKind kind, int trials,
                                      int max_n, std::uint64_t seed,
                                      bool symmetric_only = false);

}  // namespace mdg

#endif
