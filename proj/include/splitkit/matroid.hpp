/**
 * Matroids from basis lists, matroid polytopes, the edge certificate for
 * matroid subdivisions of hypersimplices, and the matroids cut out by one
 * or two compatible splits.
 */

#ifndef SPLITKIT_MATROID_HPP
#define SPLITKIT_MATROID_HPP

#include "splitkit/hypersimplex.hpp"

namespace splitkit {

/** Extensional matroid: ground set {1..n}, bases as sorted k-subsets. */
struct Matroid {
    int n = 0, k = 0;
    std::vector<std::vector<int>> bases;
};

/** Construct with the basis-exchange axiom verified by brute force. */
Matroid make_matroid(int n, int k, std::vector<std::vector<int>> bases);

/** Check the exchange axiom without constructing. */
bool exchange_axiom_holds(int n, int k, const std::vector<std::vector<int>>& bases);

/** Convex hull of the characteristic vectors of the bases. */
VPolytope matroid_polytope(const Matroid& m);

/**
 * Is the subdivision a matroid subdivision, i.e. is every edge of every
 * maximal cell parallel to some e_i - e_j?  The base polytope must be a
 * hypersimplex.  Edges come from the polytope edge oracle.
 */
bool is_matroid_subdivision(const RegularSubdivision& sub);

/**
 * The two matroids of a split: k-subsets with at most mu elements in B,
 * and k-subsets with at most k-mu elements in A.  Their polytopes are the
 * two maximal cells of the split subdivision.
 */
std::pair<Matroid, Matroid> split_matroid(const ABSplit& s);

/**
 * The matroid of the full-dimensional non-split cell cut out by two
 * compatible splits (caps on both B and D intersections), after
 * normalizing to the case #(B cap D) <= mu + nu - k. Throws when the
 * splits are incompatible.
 */
Matroid pair_matroid(const ABSplit& s, const ABSplit& t);

/**
 * Common refinement of a matroid subdivision with a split; no new vertices
 * arise because matroid-cell edges are hypersimplex edges.  The returned
 * subdivision carries a weight that induces it.
 */
RegularSubdivision split_refines_matroid(const RegularSubdivision& sub, const Split& s);

}  // namespace splitkit

#endif
