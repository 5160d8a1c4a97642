/**
 * Splits of a polytope: subdivisions with exactly two maximal cells.
 *
 * A split is determined by a hyperplane that meets the interior of P but
 * severs no edge.  Split weights make these subdivisions regular; every
 * weight function decomposes uniquely into a nonnegative combination of
 * split weights plus a split prime remainder, with the coefficients given
 * by coherency indices.  Compatibility of splits (hyperplanes that do not
 * meet inside P) yields the split complex; weak compatibility (the sum of
 * the split weights is coherent) yields the weak faces.
 */

#ifndef SPLITKIT_SPLITS_HPP
#define SPLITKIT_SPLITS_HPP

#include <map>
#include <optional>

#include "splitkit/complex.hpp"
#include "splitkit/subdivision.hpp"

namespace splitkit {

struct Split {
    VectorXq normal;               // primitive integer, oriented toward plus
    std::vector<int> plus, minus;  // closed sides; wall vertices in both

    std::vector<int> wall() const;
    Hyperplane hyperplane() const { return Hyperplane{normal}; }
};

using SplitSystem = std::vector<Split>;

/**
 * All splits of P.  Candidate hyperplanes are spanned by d linearly
 * independent vertices (complete, since a split's wall has no new
 * vertices); a candidate survives iff it has vertices strictly on both
 * sides and severs no edge.  Deterministic order by normal.
 */
SplitSystem enumerate_splits(const VPolytope& p);

/** The split through the neighbors of v, when those span a hyperplane that splits P. */
std::optional<Split> vertex_split(const VPolytope& p, int v);

/** w_S(v) = |normal . v| on the plus side and 0 on the minus side. */
Weight split_weight(const VPolytope& p, const Split& s);

/** The subdivision {plus, minus} of a split. */
RegularSubdivision split_subdivision(const VPolytope& p, const Split& s);

/** Compatible = the two split hyperplanes do not meet in the relative interior of P. */
bool is_compatible(const VPolytope& p, const Split& s1, const Split& s2);

/**
 * Weakly compatible = the sum of the split weights is a coherent
 * decomposition; checked directly: the induced subdivision refines every
 * split and has exactly one maximal cell per full-dimensional sign region.
 */
bool is_weakly_compatible(const VPolytope& p, const SplitSystem& sys);

struct SplitDecomposition {
    SplitSystem splits;          // the splits with positive coefficient
    std::vector<Rat> coefficients;
    Weight remainder;            // split prime

    Weight reconstruct(const VPolytope& p) const;
};

/**
 * The split decomposition w = w0 + sum lambda_S w_S with split prime w0;
 * lambda_S is the coherency index of w with respect to w_S.  The remainder
 * is verified split prime before returning.
 */
SplitDecomposition split_decomposition(const VPolytope& p, const Weight& w);
SplitDecomposition split_decomposition(const VPolytope& p, const Weight& w,
                                       const SplitSystem& all_splits);

/** All coherency indices against split weights vanish (affine weights count as prime). */
bool is_split_prime(const VPolytope& p, const Weight& w);
bool is_split_prime(const VPolytope& p, const Weight& w, const SplitSystem& all_splits);

/** Pairwise compatibility graph on enumerate_splits(p). */
Graph compatibility_graph(const VPolytope& p, const SplitSystem& sys);

/** Flag complex of the compatibility graph; vertex i is the i-th split. */
SimplicialComplex split_complex(const VPolytope& p);

/** All weakly compatible subsets of size <= max_size, as split-index sets. */
std::vector<std::vector<int>> weak_split_faces(const VPolytope& p, int max_size);
std::vector<std::vector<int>> weak_split_faces(const VPolytope& p,
                                               const SplitSystem& sys, int max_size);

/**
 * The split polyhedron: the affine hull of the secondary polytope cut out
 * by the facet inequality of every split, an outer approximation of the
 * secondary polytope in R^(#vertices).
 */
HPolyhedron split_polyhedron(const VPolytope& p);

struct TreeGraph {
    MatrixXq node_coords;                   // tight-span vertices
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_split;            // index into the input system
};

/** Tight span of a compatible split system, certified to be a tree. */
TreeGraph tree_from_compatible(const VPolytope& p, const SplitSystem& sys);

}  // namespace splitkit

#endif
