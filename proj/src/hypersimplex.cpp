#include "splitkit/hypersimplex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace splitkit {

namespace {

std::vector<int> complement_set(const std::vector<int>& a, int n)
{
    std::vector<int> b;
    std::size_t pos = 0;
    for (int i = 1; i <= n; ++i) {
        if (pos < a.size() && a[pos] == i)
            ++pos;
        else
            b.push_back(i);
    }
    return b;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return static_cast<int>(out.size());
}

void check_kn(int k, int n)
{
    if (n < 2 || k < 1 || k > n - 1)
        throw std::invalid_argument("hypersimplex: need n >= 2 and 1 <= k <= n-1");
}

}  // namespace

std::vector<int> ABSplit::B() const { return complement_set(A, n); }

ABSplit ABSplit::canonical() const
{
    ABSplit rev;
    rev.A = B();
    rev.mu = k - mu;
    rev.k = k;
    rev.n = n;
    return A < rev.A ? *this : rev;
}

bool ABSplit::operator==(const ABSplit& o) const
{
    ABSplit a = canonical(), b = o.canonical();
    return a.k == b.k && a.n == b.n && a.mu == b.mu && a.A == b.A;
}

bool ABSplit::operator<(const ABSplit& o) const
{
    ABSplit a = canonical(), b = o.canonical();
    return std::tie(a.A, a.mu) < std::tie(b.A, b.mu);
}

bool ab_split_valid(const ABSplit& s)
{
    const int size = static_cast<int>(s.A.size());
    if (s.n < 2 || s.k < 1 || s.k > s.n - 1)
        return false;
    if (size == 0 || size == s.n)
        return false;
    for (std::size_t i = 0; i < s.A.size(); ++i) {
        if (s.A[i] < 1 || s.A[i] > s.n)
            return false;
        if (i > 0 && s.A[i] <= s.A[i - 1])
            return false;
    }
    return 1 <= s.mu && s.mu <= s.k - 1 &&
           s.k - s.mu + 1 <= size && size <= s.n - s.mu - 1;
}

FiniteMetric::FiniteMetric(int n, MatrixXq distances) : n_(n), d_(std::move(distances))
{
    if (d_.rows() != n_ || d_.cols() != n_)
        throw std::invalid_argument("metric: wrong matrix size");
    for (int i = 0; i < n_; ++i) {
        if (d_(i, i) != 0)
            throw std::invalid_argument("metric: nonzero diagonal");
        for (int j = 0; j < n_; ++j) {
            if (d_(i, j) < 0 || d_(i, j) != d_(j, i))
                throw std::invalid_argument("metric: not symmetric nonnegative");
            for (int l = 0; l < n_; ++l)
                if (d_(i, j) + d_(j, l) < d_(i, l))
                    throw std::invalid_argument("metric: triangle inequality fails");
        }
    }
}

std::vector<std::vector<int>> hypersimplex_vertex_sets(int k, int n)
{
    check_kn(k, n);
    std::vector<std::vector<int>> sets;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i + 1;
    for (;;) {
        sets.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return sets;
}

VPolytope hypersimplex(int k, int n)
{
    auto sets = hypersimplex_vertex_sets(k, n);
    MatrixXq verts = MatrixXq::Zero(sets.size(), n);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (int e : sets[i])
            verts(static_cast<Eigen::Index>(i), e - 1) = 1;
    return VPolytope::from_vertices_unchecked(std::move(verts));
}

int hypersimplex_vertex_index(int k, int n, const std::vector<int>& subset)
{
    // lexicographic rank of a sorted k-subset of {1..n}
    auto choose = [](int a, int b) {
        if (b < 0 || b > a)
            return static_cast<long>(0);
        long r = 1;
        for (int i = 0; i < b; ++i)
            r = r * (a - i) / (i + 1);
        return r;
    };
    long rank_idx = 0;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < subset[i]; ++v)
            rank_idx += choose(n - v, k - i - 1);
        prev = subset[i];
    }
    return static_cast<int>(rank_idx);
}

std::vector<ABSplit> enumerate_ab_splits(int k, int n)
{
    check_kn(k, n);
    std::set<ABSplit> seen;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> a;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                a.push_back(i + 1);
        for (int mu = 1; mu <= k - 1; ++mu) {
            ABSplit s{a, mu, k, n};
            if (ab_split_valid(s))
                seen.insert(s.canonical());
        }
    }
    return {seen.begin(), seen.end()};
}

Int split_count(int k, int n)
{
    check_kn(k, n);
    if (2 * k > n)
        k = n - k;  // complement symmetry
    if (k < 2)
        return 0;
    auto choose = [](int a, int b) {
        Int r = 1;
        for (int i = 0; i < b; ++i)
            r = r * (a - i) / (i + 1);
        return r;
    };
    Int total = Int(k - 1) * ((Int(1) << (n - 1)) - (n + 1));
    for (int i = 2; i <= k - 1; ++i)
        total -= Int(k - i) * choose(n, i);
    return total;
}

bool ab_compatible(const ABSplit& s, const ABSplit& t)
{
    if (!ab_split_valid(s) || !ab_split_valid(t))
        throw std::invalid_argument("ab_compatible: invalid split");
    if (s.k != t.k || s.n != t.n)
        throw std::invalid_argument("ab_compatible: different hypersimplices");
    const int k = s.k;
    const auto A = s.A, B = s.B(), C = t.A, D = t.B();
    const int mu = s.mu, nu = t.mu;
    return intersection_size(A, C) <= k - mu - nu ||
           intersection_size(A, D) <= nu - mu ||
           intersection_size(B, C) <= mu - nu ||
           intersection_size(B, D) <= mu + nu - k;
}

Split ab_to_split(const VPolytope& hyps, const ABSplit& s)
{
    if (!ab_split_valid(s))
        throw std::invalid_argument("ab_to_split: invalid (A,B;mu) split");
    VectorXq normal = VectorXq::Zero(s.n);
    for (int i : s.A)
        normal(i - 1) = s.mu;
    for (int i : s.B())
        normal(i - 1) = -(s.k - s.mu);

    Split sp;
    sp.normal = normal;
    for (Eigen::Index v = 0; v < hyps.n_vertices(); ++v) {
        Rat val = hyps.vertex_matrix().row(v).dot(normal);
        if (val >= 0)
            sp.plus.push_back(static_cast<int>(v));
        if (val <= 0)
            sp.minus.push_back(static_cast<int>(v));
    }
    if (sp.plus.empty() || sp.minus.empty())
        throw std::logic_error("ab_to_split: degenerate split");
    return sp;
}

Split ab_to_split(int k, int n, const ABSplit& s)
{
    return ab_to_split(hypersimplex(k, n), s);
}

Weight metric_to_weight(const FiniteMetric& delta)
{
    const int n = delta.n();
    if (n < 2)
        throw std::invalid_argument("metric_to_weight: need n >= 2");
    auto sets = hypersimplex_vertex_sets(2, n);
    Weight w(sets.size());
    for (std::size_t v = 0; v < sets.size(); ++v)
        w(v) = -delta(sets[v][0] - 1, sets[v][1] - 1);
    return w;
}

FiniteMetric split_metric(int n, const std::vector<int>& A)
{
    std::vector<int> a = A;
    std::sort(a.begin(), a.end());
    auto b = complement_set(a, n);
    if (a.size() < 2 || b.size() < 2)
        throw std::invalid_argument("split_metric: both sides need >= 2 points");
    std::vector<bool> in_a(n + 1, false);
    for (int i : a) {
        if (i < 1 || i > n)
            throw std::invalid_argument("split_metric: element out of range");
        in_a[i] = true;
    }
    MatrixXq d = MatrixXq::Zero(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && in_a[i] != in_a[j])
                d(i - 1, j - 1) = 1;
    return FiniteMetric(n, std::move(d));
}

bool weakly_compatible_k2(int n, const std::vector<std::vector<int>>& partitions)
{
    std::vector<std::vector<bool>> in_a;
    for (const auto& part : partitions) {
        std::vector<int> a = part;
        std::sort(a.begin(), a.end());
        auto b = complement_set(a, n);
        if (a.size() < 2 || b.size() < 2)
            throw std::invalid_argument("weakly_compatible_k2: invalid partition");
        std::vector<bool> mask(n + 1, false);
        for (int i : a)
            mask[i] = true;
        in_a.push_back(std::move(mask));
    }
    const int s = static_cast<int>(partitions.size());
    // forbidden: m0..m3 and three splits with m_i on m0's side of S_j iff i == j
    for (int j1 = 0; j1 < s; ++j1)
        for (int j2 = j1 + 1; j2 < s; ++j2)
            for (int j3 = j2 + 1; j3 < s; ++j3) {
                const int js[3] = {j1, j2, j3};
                for (int m0 = 1; m0 <= n; ++m0) {
                    bool found[3] = {false, false, false};
                    for (int m = 1; m <= n; ++m) {
                        int pattern = 0;
                        for (int t = 0; t < 3; ++t)
                            if (in_a[js[t]][m] == in_a[js[t]][m0])
                                pattern |= 1 << t;
                        if (pattern == 1)
                            found[0] = true;
                        else if (pattern == 2)
                            found[1] = true;
                        else if (pattern == 4)
                            found[2] = true;
                    }
                    if (found[0] && found[1] && found[2])
                        return false;
                }
            }
    return true;
}

std::vector<ABSplit> thrackle_system(int n)
{
    if (n < 4)
        throw std::invalid_argument("thrackle_system: need n >= 4");
    std::set<ABSplit> seen;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (j - i >= n - 2)
                continue;
            std::vector<int> a;
            for (int v = i; v <= j; ++v)
                a.push_back(v);
            seen.insert(ABSplit{a, 1, 2, n}.canonical());
        }
    }
    return {seen.begin(), seen.end()};
}

LabeledTree labeled_tree(int n, const std::vector<ABSplit>& sys)
{
    VPolytope p = hypersimplex(2, n);
    SplitSystem geo;
    for (const auto& s : sys) {
        if (s.k != 2 || s.n != n)
            throw std::invalid_argument("labeled_tree: splits must live on Delta(2,n)");
        geo.push_back(ab_to_split(p, s));
    }
    LabeledTree t;
    t.core = tree_from_compatible(p, geo);

    RegularSubdivision sub;
    {
        Weight w = Weight::Zero(p.n_vertices());
        for (const auto& s : geo)
            w += split_weight(p, s);
        sub = regular_subdivision(p, w);
    }
    for (int leaf = 1; leaf <= n; ++leaf) {
        std::vector<int> pairs;  // vertex indices of e_leaf + e_j
        for (int j = 1; j <= n; ++j) {
            if (j == leaf)
                continue;
            std::vector<int> sset{std::min(leaf, j), std::max(leaf, j)};
            pairs.push_back(hypersimplex_vertex_index(2, n, sset));
        }
        std::sort(pairs.begin(), pairs.end());
        int node = -1;
        for (std::size_t c = 0; c < sub.cells.size(); ++c) {
            if (std::includes(sub.cells[c].begin(), sub.cells[c].end(),
                              pairs.begin(), pairs.end())) {
                if (node >= 0)
                    throw std::logic_error("labeled_tree: ambiguous leaf attachment");
                node = static_cast<int>(c);
            }
        }
        if (node < 0)
            throw std::logic_error("labeled_tree: no cell contains all pairs of a leaf");
        t.leaf_node.push_back(node);
    }
    return t;
}

std::vector<std::vector<int>> tree_partitions(const LabeledTree& t, int n)
{
    const Eigen::Index nodes = t.core.node_coords.rows();
    std::vector<std::vector<int>> out;
    for (std::size_t e = 0; e < t.core.edges.size(); ++e) {
        // leaves on the edge's first side after removing it
        std::vector<std::vector<int>> adj(nodes);
        for (std::size_t f = 0; f < t.core.edges.size(); ++f) {
            if (f == e)
                continue;
            adj[t.core.edges[f].first].push_back(t.core.edges[f].second);
            adj[t.core.edges[f].second].push_back(t.core.edges[f].first);
        }
        std::vector<bool> side(nodes, false);
        std::vector<int> stack{t.core.edges[e].first};
        side[t.core.edges[e].first] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!side[v]) {
                    side[v] = true;
                    stack.push_back(v);
                }
        }
        std::vector<int> part;
        for (int leaf = 0; leaf < n; ++leaf)
            if (side[t.leaf_node[leaf]])
                part.push_back(leaf + 1);
        out.push_back(std::move(part));
    }
    return out;
}

}  // namespace splitkit
