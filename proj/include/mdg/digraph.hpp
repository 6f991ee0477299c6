#ifndef MDG_DIGRAPH_HPP
#define MDG_DIGRAPH_HPP

#include <compare>
#include <string>
#include <vector>

#include "mdg/errors.hpp"

namespace mdg {

/// Vertices are dense nonnegative integers in [0, n).
using Vertex = int;

/// An ordered pair tail -> head.
struct Arc {
    Vertex tail;
    Vertex head;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/**
 * Immutable simple digraph: no self-loops, no duplicate arcs.
 *
 * Vertices may carry optional string labels (used to record coordinate
 * provenance of product vertices). All accessors are const; instances are
 * safe to share across threads.
 */
class Digraph {
  public:
    /// Validates and builds. Throws InvalidDigraphError on out-of-range
    /// endpoints, self-loops, duplicate arcs, or malformed labels.
    static Digraph build(int n, std::vector<Arc> arcs,
                         std::vector<std::string> labels = {});

    int order() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    /// Arcs in sorted order.
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// Out-neighbours of v, ascending.
    const std::vector<Vertex>& out(Vertex v) const { return out_.at(v); }
    /// In-neighbours of v, ascending.
    const std::vector<Vertex>& in(Vertex v) const { return in_.at(v); }

    bool has_labels() const { return !labels_.empty(); }
    /// Empty when the digraph is unlabelled, otherwise one label per vertex.
    const std::vector<std::string>& labels() const { return labels_; }
    /// The label of v, or its decimal index when unlabelled.
    std::string label_of(Vertex v) const;

    int out_degree(Vertex v) const { return static_cast<int>(out_.at(v).size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_.at(v).size()); }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_ && a.labels_ == b.labels_;
    }

  private:
    Digraph() = default;

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::vector<std::string> labels_;
};

/// Same vertex set, every arc transposed. Labels are preserved.
Digraph reverse(const Digraph& d);

/// N(v) = in-neighbours union out-neighbours, ascending. The centre vertex is
/// never a member.
std::vector<Vertex> underlying_neighbors(const Digraph& d, Vertex v);

/// True iff every ordered pair is joined by a directed path. Decided by
/// reachability of all vertices from vertex 0 in both d and reverse(d).
bool is_strongly_connected(const Digraph& d);

/// True iff (u,v) in arcs implies (v,u) in arcs. Symmetric digraphs model
/// undirected graphs.
bool is_symmetric(const Digraph& d);

/// True iff d is strongly connected and every vertex has out-degree 1 and
/// in-degree 1. A single vertex is not a directed cycle.
bool is_directed_cycle(const Digraph& d);

/// The directed cycle 0 -> 1 -> ... -> k-1 -> 0.
Digraph directed_cycle(int k);

/// Canonical small digraphs used throughout the test surface.
namespace fixtures {

/// Directed triangle 0 -> 1 -> 2 -> 0.
Digraph c3();
/// Theta digraph on 5 vertices: 0 -> 1 -> 2 -> 0 plus 2 -> 3 -> 4 -> 2.
Digraph theta5();
/// reverse(theta5()).
Digraph r5();
/// Triangle with one symmetric side: 0 <-> 1, 1 -> 2, 2 -> 0.
Digraph x3();
/// Triangle with one symmetric side: 0 <-> 1, 2 -> 1, 0 -> 2.
Digraph y3();
/// Symmetric path 0 <-> 1 <-> 2.
Digraph p3u();

}  // namespace fixtures

}  // namespace mdg

#endif
