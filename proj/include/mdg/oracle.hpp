#ifndef MDG_ORACLE_HPP
#define MDG_ORACLE_HPP

#include "mdg/boundary.hpp"
#include "mdg/digraph.hpp"
#include "mdg/distance.hpp"

namespace mdg {

/// Distance tables computed by iterative arc relaxation to a fixpoint
/// (Bellman-Ford style), deliberately sharing no shortest-path code with
/// md_tables. Must agree with md_tables elementwise on every strong digraph.
DistanceTables oracle_md(const Digraph& d);

/// The four boundary-type sets of a symmetric digraph computed by an
/// independent undirected-graph implementation of the same definitions
/// (undirected BFS distances, neighbourhood = adjacency). Only valid for
/// symmetric digraphs.
BoundaryReport undirected_reference_report(const Digraph& d);

/// Brute-force strong-connectivity: BFS reachability from every vertex.
bool oracle_strongly_connected(const Digraph& d);

}  // namespace mdg

#endif
