#ifndef MDG_IO_HPP
#define MDG_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mdg/benchmark.hpp"
#include "mdg/boundary.hpp"
#include "mdg/digraph.hpp"
#include "mdg/product.hpp"
#include "mdg/properties.hpp"

namespace mdg {

using Json = nlohmann::ordered_json;

/**
 * Digraph file format:
 *
 *     # optional comments anywhere
 *     n m
 *     tail head        (m arc lines, 0-indexed)
 *     label v name     (optional, one per vertex when present)
 *
 * UTF-8, LF line endings. Parse errors carry 1-based line numbers.
 */
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
Digraph load_digraph_file(const std::string& path);

std::string emit_digraph(const Digraph& d);
void save_digraph_file(const Digraph& d, const std::string& path);

/// Report document for one analysed digraph: stable key order, sorted
/// ascending sets, byte-identical for identical inputs.
Json report_document(const Digraph& d, const BoundaryReport& r);

/// analyse-from-factors report: adds per-set provenance, factor flags and the
/// step-count ledger.
Json factored_report_document(const std::vector<Digraph>& factors,
                              const FactorAnalysis& analysis,
                              const FactoredReport& fr, const CostLedger& ledger);

Json ledger_document(const CostLedger& ledger, bool include_measured);

/// Property-suite results, including the generator identification header.
Json outcomes_document(const SuiteConfig& cfg,
                       const std::vector<PropertyOutcome>& outcomes);

Json outcome_document(const PropertyOutcome& outcome);

}  // namespace mdg

#endif
