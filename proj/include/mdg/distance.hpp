#ifndef MDG_DISTANCE_HPP
#define MDG_DISTANCE_HPP

#include <vector>

#include "mdg/digraph.hpp"

namespace mdg {

/// Dense n-by-n matrix of nonnegative integers (arc counts).
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int n, int fill) : n_(n), cells_(static_cast<std::size_t>(n) * n, fill) {}

    int size() const { return n_; }
    int operator()(Vertex u, Vertex v) const { return cells_[idx(u, v)]; }
    int& operator()(Vertex u, Vertex v) { return cells_[idx(u, v)]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    std::size_t idx(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * n_ + v;
    }
    int n_ = 0;
    std::vector<int> cells_;
};

/**
 * All distance data of one strong digraph.
 *
 * ddist(u,v) is the number of arcs on a shortest directed u-v path,
 * md(u,v) = max(ddist(u,v), ddist(v,u)) is the maximum-distance metric, and
 * ecc(u) = max over v of md(u,v). All entries are finite.
 */
class DistanceTables {
  public:
    DistanceTables(IntMatrix ddist, IntMatrix md, std::vector<int> ecc)
        : ddist_(std::move(ddist)), md_(std::move(md)), ecc_(std::move(ecc)) {}

    int size() const { return ddist_.size(); }
    int ddist(Vertex u, Vertex v) const { return ddist_(u, v); }
    int md(Vertex u, Vertex v) const { return md_(u, v); }
    int ecc(Vertex u) const { return ecc_.at(u); }
    const std::vector<int>& ecc_vector() const { return ecc_; }
    const IntMatrix& ddist_matrix() const { return ddist_; }
    const IntMatrix& md_matrix() const { return md_; }

    /// max over u of ecc(u).
    int diameter() const;

    /// Largest ddist(u,v) over v (out direction) and over u (in direction).
    int out_eccentricity(Vertex u) const;
    int in_eccentricity(Vertex u) const;

  private:
    IntMatrix ddist_;
    IntMatrix md_;
    std::vector<int> ecc_;
};

/// BFS distances for every ordered pair. Throws NotStronglyConnectedError
/// (with one witness pair) when some vertex cannot reach another.
IntMatrix directed_distances(const Digraph& d);

/// Directed distances, md matrix and eccentricities of a strong digraph.
DistanceTables md_tables(const Digraph& d);

/// I(u,v) = { w : md(u,w) + md(w,v) = md(u,v) } together with its endpoints.
struct GeodeticInterval {
    Vertex u;
    Vertex v;
    std::vector<Vertex> members;  // ascending; always contains u and v
};

GeodeticInterval geodetic_interval(const DistanceTables& t, Vertex u, Vertex v);

/// I[S]: union of I(u,v) over all ordered pairs drawn from S. S must be
/// nonempty and in range.
std::vector<Vertex> geodetic_closure(const DistanceTables& t,
                                     const std::vector<Vertex>& s);

}  // namespace mdg

#endif
