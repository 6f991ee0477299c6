#include "mdg/digraph.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace mdg {

namespace {

std::string arc_str(const Arc& a) {
    return std::to_string(a.tail) + "->" + std::to_string(a.head);
}

}  // namespace

Digraph Digraph::build(int n, std::vector<Arc> arcs,
                       std::vector<std::string> labels) {
    if (n < 1) throw InvalidDigraphError("vertex count must be at least 1");
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = arcs[i];
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw InvalidDigraphError("arc endpoint out of range: " + arc_str(a));
        if (a.tail == a.head)
            throw InvalidDigraphError("self-loop not allowed: " + arc_str(a));
        if (i > 0 && arcs[i - 1] == a)
            throw InvalidDigraphError("duplicate arc: " + arc_str(a));
    }
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw InvalidDigraphError("expected " + std::to_string(n) +
                                      " labels, got " + std::to_string(labels.size()));
        std::set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != n)
            throw InvalidDigraphError("vertex labels must be distinct");
    }

    Digraph d;
    d.n_ = n;
    d.arcs_ = std::move(arcs);
    d.labels_ = std::move(labels);
    d.out_.resize(n);
    d.in_.resize(n);
    for (const Arc& a : d.arcs_) {
        d.out_[a.tail].push_back(a.head);
        d.in_[a.head].push_back(a.tail);
    }
    return d;
}

std::string Digraph::label_of(Vertex v) const {
    if (has_labels()) return labels_.at(v);
    return std::to_string(v);
}

Digraph reverse(const Digraph& d) {
    std::vector<Arc> rev;
    rev.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) rev.push_back({a.head, a.tail});
    return Digraph::build(d.order(), std::move(rev), d.labels());
}

std::vector<Vertex> underlying_neighbors(const Digraph& d, Vertex v) {
    if (v < 0 || v >= d.order())
        throw InvalidDigraphError("vertex out of range: " + std::to_string(v));
    std::vector<Vertex> ns;
    std::set_union(d.out(v).begin(), d.out(v).end(), d.in(v).begin(),
                   d.in(v).end(), std::back_inserter(ns));
    return ns;
}

namespace {

// Vertices reachable from 0 along out-arcs.
int reachable_from_zero(const Digraph& d, bool use_in_arcs) {
    std::vector<char> seen(d.order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : use_in_arcs ? d.in(u) : d.out(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
    return reachable_from_zero(d, false) == d.order() &&
           reachable_from_zero(d, true) == d.order();
}

bool is_symmetric(const Digraph& d) {
    const auto& arcs = d.arcs();
    return std::all_of(arcs.begin(), arcs.end(), [&](const Arc& a) {
        return std::binary_search(arcs.begin(), arcs.end(), Arc{a.head, a.tail});
    });
}

bool is_directed_cycle(const Digraph& d) {
    if (d.arc_count() != d.order()) return false;
    for (Vertex v = 0; v < d.order(); ++v)
        if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return false;
    return is_strongly_connected(d);
}

Digraph directed_cycle(int k) {
    if (k == 1) return Digraph::build(1, {});
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i) arcs.push_back({i, (i + 1) % k});
    return Digraph::build(k, std::move(arcs));
}

namespace fixtures {

Digraph c3() { return directed_cycle(3); }

Digraph theta5() {
    return Digraph::build(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
}

Digraph r5() { return reverse(theta5()); }

Digraph x3() { return Digraph::build(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}}); }

Digraph y3() { return Digraph::build(3, {{0, 1}, {1, 0}, {2, 1}, {0, 2}}); }

Digraph p3u() { return Digraph::build(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}); }

}  // namespace fixtures

}  // namespace mdg
