#include "mdg/product.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mdg {

ProductIndexer::ProductIndexer(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw InvalidDigraphError("factor list must be nonempty");
    std::int64_t total = 1;
    for (int s : sizes_) {
        if (s < 1) throw InvalidDigraphError("factor must have at least one vertex");
        total *= s;
        if (total > (std::int64_t{1} << 31))
            throw BudgetError("product vertex count overflows");
    }
    total_ = static_cast<int>(total);
}

int ProductIndexer::flatten(const std::vector<int>& coords) const {
    int flat = 0;
    for (int i = 0; i < factor_count(); ++i) flat = flat * sizes_[i] + coords.at(i);
    return flat;
}

std::vector<int> ProductIndexer::coords(int flat) const {
    std::vector<int> cs(factor_count());
    for (int i = factor_count() - 1; i >= 0; --i) {
        cs[i] = flat % sizes_[i];
        flat /= sizes_[i];
    }
    return cs;
}

namespace {

void check_budget(std::int64_t vertices, int budget) {
    if (vertices > budget)
        throw BudgetError("product would have " + std::to_string(vertices) +
                          " vertices, exceeding the budget of " +
                          std::to_string(budget));
}

std::string tuple_label(const std::vector<std::string>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) s += ",";
        s += parts[i];
    }
    return s + ")";
}

}  // namespace

Digraph cartesian_product(const Digraph& d1, const Digraph& d2, int vertex_budget) {
    const std::int64_t n = std::int64_t{d1.order()} * d2.order();
    check_budget(n, vertex_budget);
    const int n2 = d2.order();

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(d1.order()) * d2.arc_count() +
                 static_cast<std::size_t>(d2.order()) * d1.arc_count());
    for (Vertex i = 0; i < d1.order(); ++i)
        for (const Arc& a : d2.arcs()) arcs.push_back({i * n2 + a.tail, i * n2 + a.head});
    for (const Arc& a : d1.arcs())
        for (Vertex r = 0; r < n2; ++r) arcs.push_back({a.tail * n2 + r, a.head * n2 + r});

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < d1.order(); ++i)
        for (Vertex r = 0; r < n2; ++r)
            labels.push_back(tuple_label({d1.label_of(i), d2.label_of(r)}));

    return Digraph::build(static_cast<int>(n), std::move(arcs), std::move(labels));
}

Digraph n_ary_product(const std::vector<Digraph>& factors, int vertex_budget) {
    if (factors.empty()) throw InvalidDigraphError("factor list must be nonempty");
    if (factors.size() == 1) return factors.front();
    std::vector<int> sizes;
    for (const Digraph& f : factors) sizes.push_back(f.order());
    ProductIndexer indexer(std::move(sizes));
    check_budget(indexer.vertex_count(), vertex_budget);

    const int k = indexer.factor_count();
    const int n = indexer.vertex_count();

    // stride of factor i in the mixed-radix encoding
    std::vector<int> stride(k, 1);
    for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * indexer.size(i + 1);

    std::size_t total_arcs = 0;
    for (int i = 0; i < k; ++i)
        total_arcs += static_cast<std::size_t>(n / indexer.size(i)) *
                      factors[i].arc_count();
    std::vector<Arc> arcs;
    arcs.reserve(total_arcs);
    for (Vertex v = 0; v < n; ++v) {
        const std::vector<int> cs = indexer.coords(v);
        for (int i = 0; i < k; ++i)
            for (Vertex w : factors[i].out(cs[i]))
                arcs.push_back({v, v + (w - cs[i]) * stride[i]});
    }

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const std::vector<int> cs = indexer.coords(v);
        std::vector<std::string> parts;
        for (int i = 0; i < k; ++i) parts.push_back(factors[i].label_of(cs[i]));
        labels.push_back(tuple_label(parts));
    }

    return Digraph::build(n, std::move(arcs), std::move(labels));
}

int product_distance(const DistanceTables& t1, const DistanceTables& t2,
                     std::pair<Vertex, Vertex> a, std::pair<Vertex, Vertex> b) {
    const auto [i, r] = a;
    const auto [j, s] = b;
    if (i < 0 || i >= t1.size() || j < 0 || j >= t1.size() || r < 0 ||
        r >= t2.size() || s < 0 || s >= t2.size())
        throw InvalidDigraphError("product vertex index out of range");
    return std::max(t1.ddist(i, j) + t2.ddist(r, s),
                    t1.ddist(j, i) + t2.ddist(s, r));
}

FactorAnalysis factor_analysis(const std::vector<Digraph>& factors) {
    if (factors.empty()) throw InvalidDigraphError("factor list must be nonempty");
    FactorAnalysis analysis;
    int non_symmetric = 0;
    bool all_cycles = true;
    for (const Digraph& f : factors) {
        DistanceTables t = md_tables(f);  // throws when not strong
        FactorAnalysis::Factor flags;
        flags.tse = has_tse(t);
        flags.symmetric = is_symmetric(f);
        flags.directed_cycle = is_directed_cycle(f);
        if (!flags.tse) ++analysis.factors_without_tse;
        if (!flags.symmetric) ++non_symmetric;
        if (!flags.directed_cycle) all_cycles = false;
        analysis.factors.push_back(flags);
    }
    analysis.per_ct_shortcut_valid = analysis.factors_without_tse <= 1;
    analysis.ecc_shortcut_valid = analysis.factors_without_tse == 0;
    analysis.boundary_shortcut_valid = all_cycles || non_symmetric <= 1;
    return analysis;
}

int product_ecc(const FactorAnalysis& analysis,
                const std::vector<std::vector<int>>& factor_eccs,
                const std::vector<int>& coords) {
    if (!analysis.per_ct_shortcut_valid)
        throw ShortcutInvalidError(
            "coordinate-additive eccentricity requires at most one factor "
            "without the two-sided eccentricity property (" +
            std::to_string(analysis.factors_without_tse) + " lack it)");
    if (factor_eccs.size() != coords.size() ||
        factor_eccs.size() != analysis.factors.size())
        throw InvalidDigraphError("coordinate arity mismatch");
    int sum = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        sum += factor_eccs[i].at(coords[i]);
    return sum;
}

std::vector<Vertex> coordinate_product(
    const ProductIndexer& indexer,
    const std::vector<std::vector<Vertex>>& factor_sets) {
    std::vector<Vertex> out;
    std::vector<std::size_t> odometer(factor_sets.size(), 0);
    if (std::any_of(factor_sets.begin(), factor_sets.end(),
                    [](const auto& s) { return s.empty(); }))
        return out;
    std::vector<int> coords(factor_sets.size());
    while (true) {
        for (std::size_t i = 0; i < factor_sets.size(); ++i)
            coords[i] = factor_sets[i][odometer[i]];
        out.push_back(indexer.flatten(coords));
        // lexicographic advance keeps flattened indices ascending
        std::size_t i = factor_sets.size();
        while (i > 0) {
            --i;
            if (++odometer[i] < factor_sets[i].size()) break;
            odometer[i] = 0;
            if (i == 0) return out;
        }
    }
}

FactoredReport factored_sets(const std::vector<Digraph>& factors,
                             const FactorAnalysis& analysis,
                             int vertex_budget) {
    if (factors.size() != analysis.factors.size())
        throw InvalidDigraphError("analysis does not match factor list");

    std::vector<int> sizes;
    for (const Digraph& f : factors) sizes.push_back(f.order());
    ProductIndexer indexer(sizes);

    std::vector<BoundaryReport> freports;
    freports.reserve(factors.size());
    for (const Digraph& f : factors) freports.push_back(full_report(f));

    FactoredReport out;
    // the two-sided property of the product is exactly the conjunction over
    // the factors, so it never needs the explicit product
    out.report.tse = std::all_of(analysis.factors.begin(), analysis.factors.end(),
                                 [](const auto& f) { return f.tse; });

    // The two-sided hypothesis alone does not make the eccentric-set product
    // safe: equality can fail even when every factor has the property (see
    // the pinned counterexample in the tests). Apply that shortcut only in
    // the proved cases: all factors directed cycles, or all but at most one
    // symmetric.
    const bool all_cycles =
        std::all_of(analysis.factors.begin(), analysis.factors.end(),
                    [](const auto& f) { return f.directed_cycle; });
    const long non_symmetric =
        std::count_if(analysis.factors.begin(), analysis.factors.end(),
                      [](const auto& f) { return !f.symmetric; });
    const bool eccentric_product_sound =
        analysis.ecc_shortcut_valid && (all_cycles || non_symmetric <= 1);

    const bool need_fallback = !analysis.per_ct_shortcut_valid ||
                               !eccentric_product_sound ||
                               !analysis.boundary_shortcut_valid;
    BoundaryReport direct;
    if (need_fallback)
        direct = full_report(n_ary_product(factors, vertex_budget));

    auto pick = [&](bool valid, auto getter, SetProvenance& src) {
        if (valid) {
            std::vector<std::vector<Vertex>> parts;
            for (const BoundaryReport& fr : freports) parts.push_back(getter(fr));
            src = SetProvenance::shortcut;
            return coordinate_product(indexer, parts);
        }
        src = SetProvenance::direct;
        return getter(direct);
    };

    out.report.periphery = pick(
        analysis.per_ct_shortcut_valid,
        [](const BoundaryReport& r) { return r.periphery; }, out.periphery_source);
    out.report.contour = pick(
        analysis.per_ct_shortcut_valid,
        [](const BoundaryReport& r) { return r.contour; }, out.contour_source);
    out.report.eccentric = pick(
        eccentric_product_sound,
        [](const BoundaryReport& r) { return r.eccentric; }, out.eccentric_source);
    out.report.boundary = pick(
        analysis.boundary_shortcut_valid,
        [](const BoundaryReport& r) { return r.boundary; }, out.boundary_source);

    if (analysis.per_ct_shortcut_valid) {
        out.ecc_source = SetProvenance::shortcut;
        out.report.ecc.resize(indexer.vertex_count());
        out.report.diameter = 0;
        for (const BoundaryReport& fr : freports) out.report.diameter += fr.diameter;
        for (int v = 0; v < indexer.vertex_count(); ++v) {
            const std::vector<int> cs = indexer.coords(v);
            int sum = 0;
            for (std::size_t i = 0; i < factors.size(); ++i) sum += freports[i].ecc[cs[i]];
            out.report.ecc[v] = sum;
        }
    } else {
        out.ecc_source = SetProvenance::direct;
        out.report.ecc = direct.ecc;
        out.report.diameter = direct.diameter;
    }
    return out;
}

namespace {

// Isomorphism-invariant vertex fingerprint that does not assume strong
// connectivity: degrees plus sorted forward and backward BFS distance
// multisets (-1 for unreachable).
std::vector<int> vertex_signature(const Digraph& d, Vertex v) {
    auto profile = [&](bool backward) {
        std::vector<int> dist(d.order(), -1);
        std::vector<Vertex> queue{v};
        dist[v] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : backward ? d.in(u) : d.out(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(dist.begin(), dist.end());
        return dist;
    };
    std::vector<int> sig{d.out_degree(v), d.in_degree(v)};
    const auto fwd = profile(false), bwd = profile(true);
    sig.insert(sig.end(), fwd.begin(), fwd.end());
    sig.insert(sig.end(), bwd.begin(), bwd.end());
    return sig;
}

bool has_arc(const Digraph& d, Vertex a, Vertex b) {
    return std::binary_search(d.arcs().begin(), d.arcs().end(), Arc{a, b});
}

bool extend_mapping(const Digraph& a, const Digraph& b,
                    const std::vector<Vertex>& order, std::size_t depth,
                    std::vector<Vertex>& map, std::vector<char>& used,
                    const std::vector<std::vector<int>>& sig_a,
                    const std::vector<std::vector<int>>& sig_b) {
    if (depth == order.size()) return true;
    const Vertex va = order[depth];
    for (Vertex vb = 0; vb < b.order(); ++vb) {
        if (used[vb] || sig_a[va] != sig_b[vb]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < depth && ok; ++k) {
            const Vertex ua = order[k];
            ok = has_arc(a, va, ua) == has_arc(b, vb, map[ua]) &&
                 has_arc(a, ua, va) == has_arc(b, map[ua], vb);
        }
        if (!ok) continue;
        map[va] = vb;
        used[vb] = 1;
        if (extend_mapping(a, b, order, depth + 1, map, used, sig_a, sig_b))
            return true;
        used[vb] = 0;
    }
    return false;
}

}  // namespace

bool verify_product_decomposition(const Digraph& d,
                                  const std::vector<Digraph>& factors,
                                  int vertex_budget) {
    if (factors.empty()) throw InvalidDigraphError("factor list must be nonempty");
    std::int64_t expect = 1;
    for (const Digraph& f : factors) expect *= f.order();
    if (expect != d.order())
        throw InvalidDigraphError(
            "size mismatch: factors multiply to " + std::to_string(expect) +
            " vertices but digraph has " + std::to_string(d.order()));
    if (d.order() > vertex_budget)
        throw BudgetError("isomorphism check limited to " +
                          std::to_string(vertex_budget) + " vertices");

    const Digraph p = n_ary_product(factors, vertex_budget);
    if (p.arc_count() != d.arc_count()) return false;

    std::vector<std::vector<int>> sig_d(d.order()), sig_p(p.order());
    for (Vertex v = 0; v < d.order(); ++v) sig_d[v] = vertex_signature(d, v);
    for (Vertex v = 0; v < p.order(); ++v) sig_p[v] = vertex_signature(p, v);
    {
        auto sorted_d = sig_d, sorted_p = sig_p;
        std::sort(sorted_d.begin(), sorted_d.end());
        std::sort(sorted_p.begin(), sorted_p.end());
        if (sorted_d != sorted_p) return false;
    }

    // match rare signatures first
    std::map<std::vector<int>, int> freq;
    for (const auto& s : sig_d) ++freq[s];
    std::vector<Vertex> order(d.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        const int fa = freq[sig_d[a]], fb = freq[sig_d[b]];
        return fa != fb ? fa < fb : a < b;
    });

    std::vector<Vertex> map(d.order(), -1);
    std::vector<char> used(p.order(), 0);
    return extend_mapping(d, p, order, 0, map, used, sig_d, sig_p);
}

}  // namespace mdg
