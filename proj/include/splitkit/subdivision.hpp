/**
 * Regular subdivisions from weight functions, tight spans, coherence of
 * weight decompositions, and the coherency index.
 *
 * A weight lifts each vertex of P to R^(d+2); the maximal cells of the
 * induced subdivision are the projections of the lower facets of the lifted
 * polyhedron, and the tight span is the complex of bounded faces of the
 * envelope { x : Vx >= -w }, dual to the interior lower faces.
 */

#ifndef SPLITKIT_SUBDIVISION_HPP
#define SPLITKIT_SUBDIVISION_HPP

#include "splitkit/polytope.hpp"

namespace splitkit {

/** One rational value per vertex of the polytope, in vertex order. */
using Weight = VectorXq;

struct RegularSubdivision {
    VPolytope polytope;
    Weight weight;
    std::vector<std::vector<int>> cells;  // sorted index sets, sorted list

    std::size_t n_cells() const { return cells.size(); }
};

struct TightSpanFace {
    std::vector<int> cells;  // tight-span vertices = maximal-cell indices
    int dim = 0;
};

struct TightSpan {
    MatrixXq vertices;  // dual vertex per maximal cell, same order as cells
    std::vector<TightSpanFace> faces;
};

RegularSubdivision regular_subdivision(const VPolytope& p, const Weight& w);

/**
 * Tight span of (P, w): one dual vertex per maximal cell, solved from
 * <v,x> = -w(v) over the cell (unique since cells span), plus the face
 * poset of the bounded envelope faces.
 */
TightSpan tight_span(const VPolytope& p, const Weight& w);

/** Maximal cells and dual vertices only (no face poset). */
std::pair<std::vector<std::vector<int>>, MatrixXq>
tight_span_vertices(const VPolytope& p, const Weight& w);

/** True iff every maximal cell of fine lies inside some maximal cell of coarse. */
bool refines(const RegularSubdivision& fine, const RegularSubdivision& coarse);

/** Is w1 + w2 a coherent decomposition, i.e. is the induced subdivision the
 *  common refinement of the two summands' subdivisions? */
bool is_coherent(const VPolytope& p, const Weight& w1, const Weight& w2);

/**
 * Coherency index of w with respect to wref: the largest lambda such that
 * (w - lambda wref, lambda wref) is coherent.  Infinite when wref is affine.
 */
ExtRat coherency_index(const VPolytope& p, const Weight& w, const Weight& wref);

bool same_subdivision(const VPolytope& p, const Weight& w1, const Weight& w2);

/** Faces of the subdivision of the given codimension not lying in the boundary of P. */
std::vector<std::vector<int>> interior_faces(const RegularSubdivision& sub, int codim);

/** Cell adjacency graph; cells are adjacent when they share a codim-1 face. */
std::vector<std::pair<int, int>> dual_graph(const RegularSubdivision& sub);

bool is_triangulation(const RegularSubdivision& sub);

/** Foldable = the dual graph of a triangulation is bipartite. */
bool is_foldable(const RegularSubdivision& sub);

/** GKZ vector of a triangulation: per vertex, the chart volumes of incident cells. */
VectorXq gkz_vector(const RegularSubdivision& sub);

}  // namespace splitkit

#endif
