#include "mdg/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace mdg {

DistanceTables oracle_md(const Digraph& d) {
    const int n = d.order();
    const int inf = std::numeric_limits<int>::max() / 2;
    IntMatrix dist(n, inf);
    for (Vertex v = 0; v < n; ++v) dist(v, v) = 0;
    for (const Arc& a : d.arcs()) dist(a.tail, a.head) = 1;

    // relax every (source, arc) combination until nothing improves
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex s = 0; s < n; ++s) {
            for (const Arc& a : d.arcs()) {
                if (dist(s, a.tail) + 1 < dist(s, a.head)) {
                    dist(s, a.head) = dist(s, a.tail) + 1;
                    changed = true;
                }
            }
        }
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (dist(u, v) >= inf) throw NotStronglyConnectedError(u, v);

    IntMatrix md(n, 0);
    std::vector<int> ecc(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            md(u, v) = std::max(dist(u, v), dist(v, u));
            ecc[u] = std::max(ecc[u], md(u, v));
        }
    }
    return DistanceTables(std::move(dist), std::move(md), std::move(ecc));
}

BoundaryReport undirected_reference_report(const Digraph& d) {
    const int n = d.order();
    std::vector<std::set<Vertex>> adj(n);
    for (const Arc& a : d.arcs()) {
        adj[a.tail].insert(a.head);
        adj[a.head].insert(a.tail);
    }

    // plain undirected BFS from every vertex
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> queue{s};
        dist[s][s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : adj[u]) {
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][u] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (dist[s][v] < 0) throw NotStronglyConnectedError(s, v);
    }

    BoundaryReport r;
    r.ecc.resize(n);
    for (Vertex v = 0; v < n; ++v)
        r.ecc[v] = *std::max_element(dist[v].begin(), dist[v].end());
    r.diameter = *std::max_element(r.ecc.begin(), r.ecc.end());
    r.tse = true;  // both directions coincide in an undirected graph

    for (Vertex v = 0; v < n; ++v) {
        bool in_boundary = false;
        for (Vertex u = 0; u < n && !in_boundary; ++u)
            in_boundary = std::all_of(adj[v].begin(), adj[v].end(), [&](Vertex w) {
                return dist[u][w] <= dist[u][v];
            });
        if (in_boundary) r.boundary.push_back(v);
        if (std::all_of(adj[v].begin(), adj[v].end(),
                        [&](Vertex w) { return r.ecc[w] <= r.ecc[v]; }))
            r.contour.push_back(v);
        if (r.ecc[v] == r.diameter) r.periphery.push_back(v);
    }
    std::vector<char> eccentric(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (dist[u][v] == r.ecc[u]) eccentric[v] = 1;
    for (Vertex v = 0; v < n; ++v)
        if (eccentric[v]) r.eccentric.push_back(v);
    return r;
}

bool oracle_strongly_connected(const Digraph& d) {
    const int n = d.order();
    for (Vertex s = 0; s < n; ++s) {
        std::vector<char> seen(n, 0);
        std::vector<Vertex> queue{s};
        seen[s] = 1;
        int count = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (Vertex w : d.out(queue[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    queue.push_back(w);
                }
        if (count != n) return false;
    }
    return true;
}

}  // namespace mdg
