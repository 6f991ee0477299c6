#include "mdg/boundary.hpp"

#include <algorithm>

namespace mdg {

bool is_boundary_vertex_of(const DistanceTables& t, const Digraph& d, Vertex u,
                           Vertex v) {
    if (u < 0 || u >= t.size() || v < 0 || v >= t.size())
        throw InvalidDigraphError("vertex out of range");
    for (Vertex w : underlying_neighbors(d, v))
        if (t.md(u, w) > t.md(u, v)) return false;
    return true;
}

std::vector<Vertex> boundary_set(const DistanceTables& t, const Digraph& d) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < t.size(); ++v) {
        for (Vertex u = 0; u < t.size(); ++u) {
            if (is_boundary_vertex_of(t, d, u, v)) {
                members.push_back(v);
                break;
            }
        }
    }
    return members;
}

std::vector<Vertex> eccentric_set(const DistanceTables& t) {
    std::vector<char> eccentric(t.size(), 0);
    for (Vertex u = 0; u < t.size(); ++u)
        for (Vertex v = 0; v < t.size(); ++v)
            if (t.md(u, v) == t.ecc(u)) eccentric[v] = 1;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < t.size(); ++v)
        if (eccentric[v]) members.push_back(v);
    return members;
}

std::vector<Vertex> contour_set(const DistanceTables& t, const Digraph& d) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < t.size(); ++v) {
        const auto ns = underlying_neighbors(d, v);
        if (std::all_of(ns.begin(), ns.end(),
                        [&](Vertex w) { return t.ecc(w) <= t.ecc(v); }))
            members.push_back(v);
    }
    return members;
}

std::vector<Vertex> periphery_set(const DistanceTables& t) {
    const int diam = t.diameter();
    std::vector<Vertex> members;
    for (Vertex v = 0; v < t.size(); ++v)
        if (t.ecc(v) == diam) members.push_back(v);
    return members;
}

bool has_tse(const DistanceTables& t) {
    for (Vertex u = 0; u < t.size(); ++u)
        if (t.out_eccentricity(u) != t.ecc(u) || t.in_eccentricity(u) != t.ecc(u))
            return false;
    return true;
}

BoundaryReport full_report(const Digraph& d) { return full_report(d, md_tables(d)); }

BoundaryReport full_report(const Digraph& d, const DistanceTables& t) {
    BoundaryReport r;
    r.diameter = t.diameter();
    r.ecc = t.ecc_vector();
    r.boundary = boundary_set(t, d);
    r.eccentric = eccentric_set(t);
    r.contour = contour_set(t, d);
    r.periphery = periphery_set(t);
    r.tse = has_tse(t);
    return r;
}

}  // namespace mdg
