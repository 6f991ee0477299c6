#ifndef MDG_BOUNDARY_HPP
#define MDG_BOUNDARY_HPP

#include <vector>

#include "mdg/digraph.hpp"
#include "mdg/distance.hpp"

namespace mdg {

/**
 * The four boundary-type sets of a strong digraph under the md metric,
 * with the diameter, the eccentricity vector and the two-sided
 * eccentricity flag.
 *
 * Invariants: periphery is a nonempty subset of contour intersect eccentric,
 * and eccentric union contour is a subset of boundary.
 */
struct BoundaryReport {
    int diameter = 0;
    std::vector<int> ecc;
    std::vector<Vertex> boundary;
    std::vector<Vertex> eccentric;
    std::vector<Vertex> contour;
    std::vector<Vertex> periphery;
    bool tse = false;
};

/// True iff no underlying neighbour of v is farther from u than v:
/// for all w in N(v), md(u,w) <= md(u,v).
bool is_boundary_vertex_of(const DistanceTables& t, const Digraph& d, Vertex u,
                           Vertex v);

/// { v : exists u with is_boundary_vertex_of(u, v) }; u ranges over all of V.
std::vector<Vertex> boundary_set(const DistanceTables& t, const Digraph& d);

/// { v : exists u with md(u,v) = ecc(u) }.
std::vector<Vertex> eccentric_set(const DistanceTables& t);

/// { v : ecc(w) <= ecc(v) for all w in N(v) }.
std::vector<Vertex> contour_set(const DistanceTables& t, const Digraph& d);

/// { v : ecc(v) = diameter }.
std::vector<Vertex> periphery_set(const DistanceTables& t);

/// Two-sided eccentricity property: every vertex attains its eccentricity
/// both as a source and as a target of directed distance, i.e.
/// for all u there are j, k with ecc(u) = ddist(u,j) = ddist(k,u).
bool has_tse(const DistanceTables& t);

/// All of the above for one strong digraph.
BoundaryReport full_report(const Digraph& d);
BoundaryReport full_report(const Digraph& d, const DistanceTables& t);

}  // namespace mdg

#endif
