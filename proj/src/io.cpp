#include "mdg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace mdg {

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

bool blank_or_comment(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t");
    return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;

    // header
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (blank_or_comment(line)) continue;
        std::istringstream header(line);
        if (!(header >> n >> m) || n < 1 || m < 0)
            throw ParseError(lineno, "malformed header, expected \"n m\"");
        if (n > 1'000'000 || m > 10'000'000)
            throw ParseError(lineno, "header declares an unreasonably large digraph");
        std::string extra;
        if (header >> extra) throw ParseError(lineno, "trailing junk after header");
        break;
    }
    if (n < 0) throw ParseError(lineno + 1, "missing header line");

    std::vector<Arc> arcs;
    std::set<Arc> seen;
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    std::vector<char> labelled(static_cast<std::size_t>(n), 0);
    bool any_label = false;

    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (blank_or_comment(line)) continue;
        std::istringstream body(line);
        std::string first;
        body >> first;
        if (first == "label") {
            long long v;
            if (!(body >> v) || v < 0 || v >= n)
                throw ParseError(lineno, "label line with bad vertex index");
            std::string name;
            std::getline(body, name);
            const auto start = name.find_first_not_of(" \t");
            if (start == std::string::npos)
                throw ParseError(lineno, "label line without a name");
            name = name.substr(start);
            if (labelled[static_cast<std::size_t>(v)])
                throw ParseError(lineno, "vertex " + std::to_string(v) +
                                             " labelled twice");
            labels[static_cast<std::size_t>(v)] = name;
            labelled[static_cast<std::size_t>(v)] = 1;
            any_label = true;
            continue;
        }
        long long tail, head;
        std::istringstream arcline(line);
        if (!(arcline >> tail >> head))
            throw ParseError(lineno, "expected arc line \"tail head\"");
        std::string extra;
        if (arcline >> extra) throw ParseError(lineno, "trailing junk after arc");
        if (tail < 0 || tail >= n || head < 0 || head >= n)
            throw ParseError(lineno, "arc endpoint out of range: " +
                                         std::to_string(tail) + " " +
                                         std::to_string(head));
        if (tail == head) throw ParseError(lineno, "self-loop not allowed");
        if (static_cast<long long>(arcs.size()) == m)
            throw ParseError(lineno, "more arc lines than the header declared");
        const Arc arc{static_cast<Vertex>(tail), static_cast<Vertex>(head)};
        if (!seen.insert(arc).second)
            throw ParseError(lineno, "duplicate arc: " + std::to_string(tail) +
                                         " " + std::to_string(head));
        arcs.push_back(arc);
    }
    if (static_cast<long long>(arcs.size()) != m)
        throw ParseError(lineno + 1, "arc-count mismatch at end of file: header "
                                     "declared " + std::to_string(m) +
                                     ", found " + std::to_string(arcs.size()));
    if (any_label)
        for (long long v = 0; v < n; ++v)
            if (!labelled[static_cast<std::size_t>(v)])
                throw ParseError(lineno + 1, "vertex " + std::to_string(v) +
                                                 " missing a label");

    return Digraph::build(static_cast<int>(n), std::move(arcs),
                          any_label ? std::move(labels)
                                    : std::vector<std::string>{});
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

Digraph load_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_digraph(in);
}

std::string emit_digraph(const Digraph& d) {
    std::ostringstream out;
    out << d.order() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
    if (d.has_labels())
        for (Vertex v = 0; v < d.order(); ++v)
            out << "label " << v << ' ' << d.labels()[v] << '\n';
    return out.str();
}

void save_digraph_file(const Digraph& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << emit_digraph(d);
}

namespace {

const char* provenance_name(SetProvenance p) {
    return p == SetProvenance::shortcut ? "shortcut" : "direct";
}

Json base_report(int n, const BoundaryReport& r) {
    Json doc;
    doc["n"] = n;
    doc["diameter"] = r.diameter;
    doc["ecc"] = r.ecc;
    doc["boundary"] = r.boundary;
    doc["eccentric"] = r.eccentric;
    doc["contour"] = r.contour;
    doc["periphery"] = r.periphery;
    doc["tse"] = r.tse;
    return doc;
}

}  // namespace

Json report_document(const Digraph& d, const BoundaryReport& r) {
    Json doc = base_report(d.order(), r);
    doc["provenance"] = {{"ecc", "direct"},      {"boundary", "direct"},
                         {"eccentric", "direct"}, {"contour", "direct"},
                         {"periphery", "direct"}};
    return doc;
}

Json ledger_document(const CostLedger& ledger, bool include_measured) {
    Json doc;
    doc["factor_sizes"] = ledger.factor_sizes;
    doc["direct_evals"] = ledger.direct_evals;
    doc["factored_evals"] = ledger.factored_evals;
    if (include_measured) {
        doc["measured"] = {{"repetitions", ledger.repetitions},
                           {"direct_ms", ledger.direct_ms},
                           {"factored_ms", ledger.factored_ms}};
    }
    return doc;
}

Json factored_report_document(const std::vector<Digraph>& factors,
                              const FactorAnalysis& analysis,
                              const FactoredReport& fr, const CostLedger& ledger) {
    int n = 1;
    for (const Digraph& f : factors) n *= f.order();
    Json doc = base_report(n, fr.report);
    doc["provenance"] = {{"ecc", provenance_name(fr.ecc_source)},
                         {"boundary", provenance_name(fr.boundary_source)},
                         {"eccentric", provenance_name(fr.eccentric_source)},
                         {"contour", provenance_name(fr.contour_source)},
                         {"periphery", provenance_name(fr.periphery_source)}};
    Json flags = Json::array();
    for (const auto& f : analysis.factors)
        flags.push_back({{"tse", f.tse},
                         {"symmetric", f.symmetric},
                         {"directed_cycle", f.directed_cycle}});
    doc["factors"] = flags;
    doc["shortcuts"] = {{"periphery_contour", analysis.per_ct_shortcut_valid},
                        {"eccentric", analysis.ecc_shortcut_valid},
                        {"boundary", analysis.boundary_shortcut_valid}};
    doc["cost"] = ledger_document(ledger, false);
    return doc;
}

Json outcome_document(const PropertyOutcome& outcome) {
    Json doc;
    doc["name"] = outcome.name;
    doc["class"] = outcome.kind == PropertyClass::must_hold
                       ? "must-hold"
                       : "counterexample-search";
    doc["trials"] = outcome.trials;
    Json failures = Json::array();
    for (const PropertyFailure& f : outcome.failures) {
        Json entry;
        entry["detail"] = f.detail;
        Json sources = Json::array();
        for (const WitnessSource& s : f.sources)
            sources.push_back({{"family", s.family},
                               {"n", s.config.n},
                               {"p", s.config.extra_arc_probability},
                               {"seed", s.config.seed}});
        entry["sources"] = sources;
        Json witnesses = Json::array();
        for (const Digraph& w : f.witnesses) {
            Json arcs = Json::array();
            for (const Arc& a : w.arcs()) arcs.push_back({a.tail, a.head});
            witnesses.push_back({{"n", w.order()}, {"arcs", arcs}});
        }
        entry["witnesses"] = witnesses;
        failures.push_back(entry);
    }
    doc["failures"] = failures;
    return doc;
}

Json outcomes_document(const SuiteConfig& cfg,
                       const std::vector<PropertyOutcome>& outcomes) {
    Json doc;
    doc["rng"] = "splitmix64";
    doc["seed"] = cfg.seed;
    doc["trials"] = cfg.trials;
    doc["max_n"] = cfg.max_n;
    Json list = Json::array();
    int violations = 0;
    for (const PropertyOutcome& o : outcomes) {
        list.push_back(outcome_document(o));
        if (o.kind == PropertyClass::must_hold) violations += o.failures.size();
    }
    doc["outcomes"] = list;
    doc["must_hold_violations"] = violations;
    return doc;
}

}  // namespace mdg
