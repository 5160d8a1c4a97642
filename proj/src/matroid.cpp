#include "splitkit/matroid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace splitkit {

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return static_cast<int>(out.size());
}

}  // namespace

bool exchange_axiom_holds(int n, int k, const std::vector<std::vector<int>>& bases)
{
    std::set<std::vector<int>> base_set(bases.begin(), bases.end());
    for (const auto& b1 : bases) {
        for (const auto& b2 : bases) {
            if (b1 == b2)
                continue;
            for (int x : b1) {
                if (std::binary_search(b2.begin(), b2.end(), x))
                    continue;
                bool exchanged = false;
                for (int y : b2) {
                    if (std::binary_search(b1.begin(), b1.end(), y))
                        continue;
                    std::vector<int> cand;
                    for (int e : b1)
                        if (e != x)
                            cand.push_back(e);
                    cand.push_back(y);
                    std::sort(cand.begin(), cand.end());
                    if (base_set.count(cand)) {
                        exchanged = true;
                        break;
                    }
                }
                if (!exchanged)
                    return false;
            }
        }
    }
    (void)n;
    (void)k;
    return true;
}

Matroid make_matroid(int n, int k, std::vector<std::vector<int>> bases)
{
    if (bases.empty())
        throw std::invalid_argument("matroid: no bases");
    for (auto& b : bases) {
        std::sort(b.begin(), b.end());
        if (static_cast<int>(b.size()) != k)
            throw std::invalid_argument("matroid: basis of wrong size");
        for (int e : b)
            if (e < 1 || e > n)
                throw std::invalid_argument("matroid: element out of range");
    }
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    if (!exchange_axiom_holds(n, k, bases))
        throw std::invalid_argument("matroid: exchange axiom fails");
    return Matroid{n, k, std::move(bases)};
}

VPolytope matroid_polytope(const Matroid& m)
{
    MatrixXq verts = MatrixXq::Zero(m.bases.size(), m.n);
    for (std::size_t i = 0; i < m.bases.size(); ++i)
        for (int e : m.bases[i])
            verts(static_cast<Eigen::Index>(i), e - 1) = 1;
    return VPolytope::from_vertices_unchecked(std::move(verts));
}

namespace {

bool cell_edges_are_matroidal(const VPolytope& p, const std::vector<int>& cell)
{
    MatrixXq sub(cell.size(), p.ambient_dim());
    for (std::size_t i = 0; i < cell.size(); ++i)
        sub.row(i) = p.vertex_matrix().row(cell[i]);
    VPolytope q = VPolytope::from_vertices_unchecked(std::move(sub));
    if (q.n_vertices() < 2)
        return true;
    for (auto [a, b] : edges(q)) {
        // parallel to e_i - e_j: exactly one positive and one negative
        // entry, equal in absolute value
        VectorXq diff = q.vertex(a) - q.vertex(b);
        int plus = 0, minus = 0;
        Rat pv = 0, nv = 0;
        for (Eigen::Index c = 0; c < diff.size(); ++c) {
            if (diff(c) > 0) {
                ++plus;
                pv = diff(c);
            } else if (diff(c) < 0) {
                ++minus;
                nv = -diff(c);
            }
        }
        if (plus != 1 || minus != 1 || pv != nv)
            return false;
    }
    return true;
}

}  // namespace

bool is_matroid_subdivision(const RegularSubdivision& sub)
{
    const VPolytope& p = sub.polytope;
    // the base must be a hypersimplex: 0/1 vertices with constant row sum
    const Eigen::Index n = p.ambient_dim();
    Rat sum0 = 0;
    for (Eigen::Index c = 0; c < n; ++c)
        sum0 += p.vertex_matrix()(0, c);
    if (denominator(sum0) != 1)
        throw std::invalid_argument("is_matroid_subdivision: not a hypersimplex");
    const int k = numerator(sum0).convert_to<int>();
    auto sets = hypersimplex_vertex_sets(k, static_cast<int>(n));
    if (static_cast<Eigen::Index>(sets.size()) != p.n_vertices())
        throw std::invalid_argument("is_matroid_subdivision: not a hypersimplex");
    MatrixXq expect = MatrixXq::Zero(sets.size(), n);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (int e : sets[i])
            expect(static_cast<Eigen::Index>(i), e - 1) = 1;
    if (expect != p.vertex_matrix())
        throw std::invalid_argument("is_matroid_subdivision: not a hypersimplex");

    for (const auto& cell : sub.cells)
        if (!cell_edges_are_matroidal(p, cell))
            return false;
    return true;
}

std::pair<Matroid, Matroid> split_matroid(const ABSplit& s)
{
    if (!ab_split_valid(s))
        throw std::invalid_argument("split_matroid: invalid split");
    const auto B = s.B();
    std::vector<std::vector<int>> bases1, bases2;
    for (const auto& x : hypersimplex_vertex_sets(s.k, s.n)) {
        if (intersection_size(x, B) <= s.mu)
            bases1.push_back(x);
        if (intersection_size(x, s.A) <= s.k - s.mu)
            bases2.push_back(x);
    }
    return {make_matroid(s.n, s.k, std::move(bases1)),
            make_matroid(s.n, s.k, std::move(bases2))};
}

Matroid pair_matroid(const ABSplit& s_in, const ABSplit& t_in)
{
    if (!ab_compatible(s_in, t_in))
        throw std::invalid_argument("pair_matroid: splits are not compatible");
    const int k = s_in.k;

    // normalize (renaming sides, swapping mu and k-mu) to #(B cap D) <= mu+nu-k
    auto flipped = [](const ABSplit& s) {
        return ABSplit{s.B(), s.k - s.mu, s.k, s.n};
    };
    ABSplit s = s_in, t = t_in;
    const auto fits = [&](const ABSplit& a, const ABSplit& b) {
        return intersection_size(a.B(), b.B()) <= a.mu + b.mu - k;
    };
    if (!fits(s, t)) {
        if (fits(flipped(s), t))
            s = flipped(s);
        else if (fits(s, flipped(t)))
            t = flipped(t);
        else if (fits(flipped(s), flipped(t))) {
            s = flipped(s);
            t = flipped(t);
        } else {
            throw std::logic_error("pair_matroid: no case normalization applies");
        }
    }

    const auto B = s.B(), D = t.B();
    std::vector<std::vector<int>> bases;
    for (const auto& x : hypersimplex_vertex_sets(k, s.n))
        if (intersection_size(x, B) <= s.mu && intersection_size(x, D) <= t.mu)
            bases.push_back(x);
    return make_matroid(s.n, k, std::move(bases));
}

RegularSubdivision split_refines_matroid(const RegularSubdivision& sub, const Split& s)
{
    if (!is_matroid_subdivision(sub))
        throw std::invalid_argument("split_refines_matroid: not a matroid subdivision");
    const VPolytope& p = sub.polytope;
    const int d = p.dim();

    // no cell edge crosses the split hyperplane, so the pieces keep their
    // vertices among the hypersimplex vertices
    std::set<std::vector<int>> cells;
    for (const auto& cell : sub.cells) {
        for (int side = 0; side < 2; ++side) {
            std::vector<int> piece;
            for (int v : cell) {
                Rat val = s.normal.dot(p.vertex(v));
                if (side == 0 ? val >= 0 : val <= 0)
                    piece.push_back(v);
            }
            if (piece.empty())
                continue;
            MatrixXq m(piece.size(), p.ambient_dim());
            for (std::size_t i = 0; i < piece.size(); ++i)
                m.row(i) = p.vertex_matrix().row(piece[i]);
            if (rank(m) == d + 1)
                cells.insert(piece);
        }
    }
    std::vector<std::vector<int>> expected(cells.begin(), cells.end());
    std::sort(expected.begin(), expected.end());

    // find a coefficient along the split direction inducing the refinement
    Weight ws = split_weight(p, s);
    Rat lambda = 1;
    for (int tries = 0; tries < 64; ++tries) {
        RegularSubdivision refined = regular_subdivision(p, sub.weight + lambda * ws);
        if (refined.cells == expected)
            return refined;
        lambda /= 2;
    }
    throw std::logic_error("split_refines_matroid: no inducing weight found");
}

}  // namespace splitkit
