#include "mdg/distance.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace mdg {

namespace {

constexpr int kUnreached = -1;

void bfs_row(const Digraph& d, Vertex source, IntMatrix& ddist) {
    std::deque<Vertex> queue{source};
    ddist(source, source) = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : d.out(u)) {
            if (ddist(source, w) == kUnreached) {
                ddist(source, w) = ddist(source, u) + 1;
                queue.push_back(w);
            }
        }
    }
}

}  // namespace

int DistanceTables::diameter() const {
    return *std::max_element(ecc_.begin(), ecc_.end());
}

int DistanceTables::out_eccentricity(Vertex u) const {
    int best = 0;
    for (Vertex v = 0; v < size(); ++v) best = std::max(best, ddist_(u, v));
    return best;
}

int DistanceTables::in_eccentricity(Vertex u) const {
    int best = 0;
    for (Vertex v = 0; v < size(); ++v) best = std::max(best, ddist_(v, u));
    return best;
}

IntMatrix directed_distances(const Digraph& d) {
    const int n = d.order();
    IntMatrix ddist(n, kUnreached);
    for (Vertex s = 0; s < n; ++s) {
        bfs_row(d, s, ddist);
        for (Vertex v = 0; v < n; ++v)
            if (ddist(s, v) == kUnreached) throw NotStronglyConnectedError(s, v);
    }
    return ddist;
}

DistanceTables md_tables(const Digraph& d) {
    const int n = d.order();
    IntMatrix ddist = directed_distances(d);
    IntMatrix md(n, 0);
    std::vector<int> ecc(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            md(u, v) = std::max(ddist(u, v), ddist(v, u));
            ecc[u] = std::max(ecc[u], md(u, v));
        }
    }
    return DistanceTables(std::move(ddist), std::move(md), std::move(ecc));
}

GeodeticInterval geodetic_interval(const DistanceTables& t, Vertex u, Vertex v) {
    const int n = t.size();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw InvalidDigraphError("interval endpoint out of range");
    GeodeticInterval interval{u, v, {}};
    for (Vertex w = 0; w < n; ++w)
        if (t.md(u, w) + t.md(w, v) == t.md(u, v)) interval.members.push_back(w);
    return interval;
}

std::vector<Vertex> geodetic_closure(const DistanceTables& t,
                                     const std::vector<Vertex>& s) {
    if (s.empty()) throw InvalidDigraphError("geodetic closure of empty set");
    std::set<Vertex> closure;
    for (Vertex u : s) {
        for (Vertex v : s) {
            GeodeticInterval i = geodetic_interval(t, u, v);
            closure.insert(i.members.begin(), i.members.end());
        }
    }
    return {closure.begin(), closure.end()};
}

}  // namespace mdg
