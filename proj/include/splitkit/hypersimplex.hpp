/**
 * Closed-form split theory of the hypersimplices Delta(k,n), split metrics
 * on finite point sets, and tree extraction for the second hypersimplex.
 *
 * A split of Delta(k,n) is an (A,B;mu) triple: the hyperplane
 * mu * sum_A x_i = (k-mu) * sum_B x_i cuts the hypersimplex into the
 * vertices with at most mu ones in B and those with at most k-mu ones
 * in A.  Everything here cross-validates against the geometric machinery.
 */

#ifndef SPLITKIT_HYPERSIMPLEX_HPP
#define SPLITKIT_HYPERSIMPLEX_HPP

#include "splitkit/splits.hpp"

namespace splitkit {

/**
 * Split of Delta(k,n) given by a partition (A,B) of {1..n} and a level mu.
 * Canonical form: of the two descriptions (A,B;mu) and (B,A;k-mu), the one
 * whose first set is lexicographically smaller.  Members of A are 1-based.
 */
struct ABSplit {
    std::vector<int> A;  // sorted, 1-based
    int mu = 1;
    int k = 0, n = 0;

    std::vector<int> B() const;
    ABSplit canonical() const;
    bool operator==(const ABSplit& o) const;
    bool operator<(const ABSplit& o) const;
};

/** Validate the bounds 1 <= mu <= k-1 and k-mu+1 <= #A <= n-mu-1. */
bool ab_split_valid(const ABSplit& s);

/** Finite metric: symmetric, nonnegative, triangle inequality (checked). */
class FiniteMetric {
  public:
    FiniteMetric(int n, MatrixXq distances);
    int n() const { return n_; }
    const Rat& operator()(int i, int j) const { return d_(i, j); }  // 0-based

  private:
    int n_;
    MatrixXq d_;
};

/** Vertices of Delta(k,n): k-subsets of {1..n} in lexicographic order. */
std::vector<std::vector<int>> hypersimplex_vertex_sets(int k, int n);
VPolytope hypersimplex(int k, int n);

/** Position of a k-subset (sorted, 1-based) in the lexicographic vertex order. */
int hypersimplex_vertex_index(int k, int n, const std::vector<int>& subset);

std::vector<ABSplit> enumerate_ab_splits(int k, int n);

/** Closed-form number of splits of Delta(k,n). */
Int split_count(int k, int n);

/** Combinatorial compatibility test for two splits of the same Delta(k,n). */
bool ab_compatible(const ABSplit& s, const ABSplit& t);

/** The geometric split of hypersimplex(k,n) with normal mu*chi_A - (k-mu)*chi_B. */
Split ab_to_split(const VPolytope& hyps, const ABSplit& s);
Split ab_to_split(int k, int n, const ABSplit& s);

/** Weight w(e_i + e_j) = -delta(i,j) on Delta(2,n). */
Weight metric_to_weight(const FiniteMetric& delta);

/** Distance 0 within A and within B, 1 across (A, B 1-based, both sides >= 2). */
FiniteMetric split_metric(int n, const std::vector<int>& A);

/**
 * Bandelt-Dress criterion on Delta(2,n): a set of split partitions is
 * weakly compatible iff no three of them and points m0..m3 realize the
 * forbidden pattern where m_i lies in S_j's part of m0 exactly when i = j.
 */
bool weakly_compatible_k2(int n, const std::vector<std::vector<int>>& partitions);

/** Interval split system inducing the thrackle triangulation of Delta(2,n). */
std::vector<ABSplit> thrackle_system(int n);

struct LabeledTree {
    TreeGraph core;
    std::vector<int> leaf_node;  // node carrying leaf i (0-based leaves)
};

/**
 * Tree of a compatible system of (A,B;1) splits of Delta(2,n), with leaf i
 * attached to the tight-span node whose cell contains every vertex e_i+e_j.
 */
LabeledTree labeled_tree(int n, const std::vector<ABSplit>& sys);

/** Leaf partitions read back off the internal edges of a labeled tree. */
std::vector<std::vector<int>> tree_partitions(const LabeledTree& t, int n);

}  // namespace splitkit

#endif
