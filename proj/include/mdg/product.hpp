#ifndef MDG_PRODUCT_HPP
#define MDG_PRODUCT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mdg/boundary.hpp"
#include "mdg/digraph.hpp"
#include "mdg/distance.hpp"

namespace mdg {

/// Default cap on explicit product sizes; exceeding it raises BudgetError.
inline constexpr int kDefaultVertexBudget = 4096;

/// Budget for the isomorphism check in verify_product_decomposition.
inline constexpr int kDefaultIsoBudget = 16;

/**
 * Mixed-radix encoding of product vertices, row-major with factor 0 most
 * significant: flatten({x0,...,xk}) = ((x0*n1 + x1)*n2 + x2)...
 */
class ProductIndexer {
  public:
    explicit ProductIndexer(std::vector<int> sizes);

    int factor_count() const { return static_cast<int>(sizes_.size()); }
    int size(int factor) const { return sizes_.at(factor); }
    int vertex_count() const { return total_; }

    int flatten(const std::vector<int>& coords) const;
    std::vector<int> coords(int flat) const;

  private:
    std::vector<int> sizes_;
    int total_;
};

/// Cartesian product of two digraphs. Vertex (i,r) maps to index i*n2+r and
/// carries the label "(l1,l2)". Throws BudgetError when n1*n2 exceeds the
/// vertex budget.
Digraph cartesian_product(const Digraph& d1, const Digraph& d2,
                          int vertex_budget = kDefaultVertexBudget);

/// n-ary Cartesian product with flat coordinate-tuple labels. Structurally
/// identical to the left fold of the binary product. The factor list must be
/// nonempty.
Digraph n_ary_product(const std::vector<Digraph>& factors,
                      int vertex_budget = kDefaultVertexBudget);

/// md distance between product vertices (i,r) and (j,s) computed from factor
/// tables alone:
///   max(ddist1(i,j) + ddist2(r,s), ddist1(j,i) + ddist2(s,r)).
int product_distance(const DistanceTables& t1, const DistanceTables& t2,
                     std::pair<Vertex, Vertex> a, std::pair<Vertex, Vertex> b);

/**
 * Per-factor classification and the validity of each factor-based shortcut.
 *
 * periphery/contour products and coordinate-additive eccentricities are
 * licensed when at most one factor lacks the two-sided eccentricity
 * property; ecc_shortcut_valid records that every factor has it; the
 * boundary product needs all factors to be directed cycles or all but at
 * most one to be symmetric.
 *
 * Note that ecc_shortcut_valid is a classification, not a safety proof:
 * the eccentric-set product can be a strict superset of the product's
 * eccentric set even when all factors are two-sided, so factored_sets only
 * applies that shortcut under the stronger boundary-style hypothesis.
 */
struct FactorAnalysis {
    struct Factor {
        bool tse = false;
        bool symmetric = false;
        bool directed_cycle = false;
    };
    std::vector<Factor> factors;
    int factors_without_tse = 0;
    bool per_ct_shortcut_valid = false;
    bool ecc_shortcut_valid = false;
    bool boundary_shortcut_valid = false;
};

/// Classify the factors (each must be strongly connected).
FactorAnalysis factor_analysis(const std::vector<Digraph>& factors);

/// Coordinate-sum eccentricity of the product vertex with the given
/// coordinates. Requires per_ct_shortcut_valid; otherwise throws
/// ShortcutInvalidError.
int product_ecc(const FactorAnalysis& analysis,
                const std::vector<std::vector<int>>& factor_eccs,
                const std::vector<int>& coords);

/// Whether a reported set came from the factor shortcut or from direct
/// analysis of the explicit product.
enum class SetProvenance { shortcut, direct };

/// Boundary report of a product digraph together with the provenance of each
/// piece.
struct FactoredReport {
    BoundaryReport report;
    SetProvenance boundary_source = SetProvenance::direct;
    SetProvenance eccentric_source = SetProvenance::direct;
    SetProvenance contour_source = SetProvenance::direct;
    SetProvenance periphery_source = SetProvenance::direct;
    /// Covers the eccentricity vector and the diameter.
    SetProvenance ecc_source = SetProvenance::direct;
};

/// Boundary report of the product of the given factors. Every set whose
/// shortcut is soundly licensed is assembled as a coordinate product of
/// factor sets; the rest are computed by direct analysis of the explicit
/// product (which must fit the vertex budget). The provenance fields say
/// which route each piece took.
FactoredReport factored_sets(const std::vector<Digraph>& factors,
                             const FactorAnalysis& analysis,
                             int vertex_budget = kDefaultVertexBudget);

/// Coordinate product of per-factor vertex sets, flattened through the
/// mixed-radix encoding, ascending.
std::vector<Vertex> coordinate_product(
    const ProductIndexer& indexer,
    const std::vector<std::vector<Vertex>>& factor_sets);

/// True iff d is isomorphic to the n-ary product of the factors, decided by
/// backtracking search with degree and distance-profile pruning. Requires
/// |V(d)| = product of factor sizes (InvalidDigraphError otherwise) and
/// |V(d)| within the budget (BudgetError).
bool verify_product_decomposition(const Digraph& d,
                                  const std::vector<Digraph>& factors,
                                  int vertex_budget = kDefaultIsoBudget);

}  // namespace mdg

#endif
