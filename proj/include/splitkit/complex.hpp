/**
 * Abstract simplicial complexes with integral homology, flag complexes of
 * graphs, and exact small-graph statistics.
 */

#ifndef SPLITKIT_COMPLEX_HPP
#define SPLITKIT_COMPLEX_HPP

#include <utility>
#include <vector>

#include "splitkit/linalg.hpp"

namespace splitkit {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/** Facet list; faces are implied downward, no facet contains another. */
struct SimplicialComplex {
    int n_vertices = 0;
    std::vector<std::vector<int>> facets;  // sorted index sets, sorted list
};

struct HomologyGroup {
    int dim = 0;
    long rank = 0;
    std::vector<Int> torsion;
};

using HomologyResult = std::vector<HomologyGroup>;

/** Clique complex of a simple graph (maximal cliques become facets). */
SimplicialComplex flag_complex(const Graph& g);

/** Faces counted by dimension, starting at dimension 0. */
std::vector<long> f_vector(const SimplicialComplex& c);

/** Faces of the given dimension (k-faces have k+1 vertices). */
std::vector<std::vector<int>> faces_of_dim(const SimplicialComplex& c, int dim);

/** Reduced integral homology via Smith normal forms of the boundary maps. */
HomologyResult reduced_homology(const SimplicialComplex& c);

struct GraphStats {
    std::vector<int> degrees;  // sorted ascending
    int girth = -1;            // -1 when the graph is acyclic
    int components = 0;
    int vertex_connectivity = 0;
};

GraphStats graph_stats(const Graph& g);

}  // namespace splitkit

#endif
