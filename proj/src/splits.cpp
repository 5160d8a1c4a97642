#include "splitkit/splits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace splitkit {

namespace {

// canonical key of a value pattern: primitive, first nonzero entry positive
std::vector<std::string> values_key(const VectorXq& values)
{
    VectorXq k = lex_positive(primitive_vector(values));
    std::vector<std::string> out;
    for (Eigen::Index i = 0; i < k.size(); ++i)
        out.push_back(k(i).str());
    return out;
}

// d+1 linearly independent columns of the vertex matrix; hyperplanes inside
// aff P are identified with their value pattern V a, which lives in the
// column space
MatrixXq column_basis(const VPolytope& p)
{
    const MatrixXq& v = p.vertex_matrix();
    const int want = p.dim() + 1;
    MatrixXq chosen(v.rows(), 0);
    for (Eigen::Index c = 0; c < v.cols() && chosen.cols() < want; ++c) {
        MatrixXq trial(v.rows(), chosen.cols() + 1);
        trial.leftCols(chosen.cols()) = chosen;
        trial.col(chosen.cols()) = v.col(c);
        if (rank(trial) == trial.cols())
            chosen = trial;
    }
    return chosen;
}

// value pattern of the unique hyperplane of aff P through the given
// vertices, when they span one
std::optional<VectorXq> hyperplane_values(const MatrixXq& colbasis,
                                          const std::vector<int>& subset)
{
    MatrixXq rows(subset.size(), colbasis.cols());
    for (std::size_t i = 0; i < subset.size(); ++i)
        rows.row(i) = colbasis.row(subset[i]);
    MatrixXq ker = kernel(rows);
    if (ker.cols() != 1)
        return std::nullopt;
    return VectorXq(colbasis * ker.col(0));
}

// Build the split with the given value pattern, or nothing if it is no split.
std::optional<Split> split_from_values(const VPolytope& p, const VectorXq& values,
                                       const std::vector<std::pair<int, int>>& edge_list)
{
    std::vector<int> s(p.n_vertices());
    bool has_plus = false, has_minus = false;
    for (Eigen::Index i = 0; i < p.n_vertices(); ++i) {
        s[i] = values(i) > 0 ? 1 : (values(i) < 0 ? -1 : 0);
        has_plus |= s[i] > 0;
        has_minus |= s[i] < 0;
    }
    if (!has_plus || !has_minus)
        return std::nullopt;
    for (auto [a, b] : edge_list)
        if (s[a] * s[b] < 0)
            return std::nullopt;

    // orient so the lexicographically smallest strictly-off-wall vertex
    // lands on the plus side
    int smallest = -1;
    for (Eigen::Index i = 0; i < p.n_vertices(); ++i) {
        if (s[i] == 0)
            continue;
        if (smallest < 0) {
            smallest = static_cast<int>(i);
            continue;
        }
        for (Eigen::Index c = 0; c < p.ambient_dim(); ++c) {
            const Rat &a = p.vertex_matrix()(i, c), &b = p.vertex_matrix()(smallest, c);
            if (a == b)
                continue;
            if (a < b)
                smallest = static_cast<int>(i);
            break;
        }
    }
    VectorXq vals = primitive_vector(values);
    if (s[smallest] < 0) {
        vals = -vals;
        for (auto& v : s)
            v = -v;
    }

    auto sol = solve_affine(p.vertex_matrix(), vals);
    if (!sol)
        throw std::logic_error("split_from_values: pattern not in the column space");

    Split sp;
    // scaled so V . normal is exactly the primitive value pattern
    sp.normal = sol->particular;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= 0)
            sp.plus.push_back(static_cast<int>(i));
        if (s[i] <= 0)
            sp.minus.push_back(static_cast<int>(i));
    }
    return sp;
}

}  // namespace

std::vector<int> Split::wall() const
{
    std::vector<int> w;
    std::set_intersection(plus.begin(), plus.end(), minus.begin(), minus.end(),
                          std::back_inserter(w));
    return w;
}

SplitSystem enumerate_splits(const VPolytope& p)
{
    const Eigen::Index n = p.n_vertices();
    const int d = p.dim();
    if (d < 1 || n < 2)
        return {};
    const auto edge_list = edges(p);
    const MatrixXq colbasis = column_basis(p);

    // candidate hyperplanes are spanned by d affinely independent vertices:
    // a split's wall has all its vertices among Vert P and spans the plane
    std::set<std::vector<std::string>> seen;
    std::vector<VectorXq> candidates;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i)
        idx[i] = i;
    for (;;) {
        auto values = hyperplane_values(colbasis, idx);
        if (values) {
            auto key = values_key(*values);
            if (seen.insert(key).second)
                candidates.push_back(*values);
        }
        int i = d - 1;
        while (i >= 0 && idx[i] == static_cast<int>(n) - d + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j)
            idx[j] = idx[j - 1] + 1;
    }

    SplitSystem sys;
    for (const auto& values : candidates) {
        auto sp = split_from_values(p, values, edge_list);
        if (sp)
            sys.push_back(std::move(*sp));
    }
    std::sort(sys.begin(), sys.end(), [&](const Split& a, const Split& b) {
        return values_key(p.vertex_matrix() * a.normal) <
               values_key(p.vertex_matrix() * b.normal);
    });
    return sys;
}

std::optional<Split> vertex_split(const VPolytope& p, int v)
{
    const auto edge_list = edges(p);
    std::vector<int> nbrs;
    for (auto [a, b] : edge_list) {
        if (a == v)
            nbrs.push_back(b);
        if (b == v)
            nbrs.push_back(a);
    }
    auto values = hyperplane_values(column_basis(p), nbrs);
    if (!values)
        return std::nullopt;  // neighbors do not span a common hyperplane
    return split_from_values(p, *values, edge_list);
}

Weight split_weight(const VPolytope& p, const Split& s)
{
    Weight w = Weight::Zero(p.n_vertices());
    for (int i : s.plus)
        w(i) = abs(p.vertex_matrix().row(i).dot(s.normal));
    return w;
}

RegularSubdivision split_subdivision(const VPolytope& p, const Split& s)
{
    RegularSubdivision sub;
    sub.polytope = p;
    sub.weight = split_weight(p, s);
    sub.cells = {s.plus, s.minus};
    std::sort(sub.cells.begin(), sub.cells.end());
    return sub;
}

bool is_compatible(const VPolytope& p, const Split& s1, const Split& s2)
{
    return !relint_meets(p, {s1.hyperplane(), s2.hyperplane()});
}

bool is_weakly_compatible(const VPolytope& p, const SplitSystem& sys)
{
    if (sys.empty())
        throw std::invalid_argument("is_weakly_compatible: empty system");
    Weight w = Weight::Zero(p.n_vertices());
    for (const auto& s : sys)
        w += split_weight(p, s);
    RegularSubdivision sub = regular_subdivision(p, w);
    for (const auto& s : sys)
        if (!refines(sub, split_subdivision(p, s)))
            return false;

    // one maximal cell per full-dimensional sign region
    const Eigen::Index n = p.n_vertices();
    std::size_t regions = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << sys.size()); ++mask) {
        std::vector<LinConstraint> cs;
        cs.push_back(make_constraint(VectorXq::Constant(n, 1), Rel::Eq, 1));
        for (Eigen::Index i = 0; i < n; ++i) {
            VectorXq e = VectorXq::Zero(n);
            e(i) = 1;
            cs.push_back(make_constraint(e, Rel::Gt, 0));
        }
        for (std::size_t k = 0; k < sys.size(); ++k) {
            VectorXq row(n);
            for (Eigen::Index i = 0; i < n; ++i)
                row(i) = sys[k].normal.dot(p.vertex(i));
            if (mask & (std::size_t(1) << k))
                row = -row;
            cs.push_back(make_constraint(row, Rel::Gt, 0));
        }
        if (strict_feasible_point(cs, n).has_value())
            ++regions;
    }
    return sub.cells.size() == regions;
}

Weight SplitDecomposition::reconstruct(const VPolytope& p) const
{
    Weight w = remainder;
    for (std::size_t i = 0; i < splits.size(); ++i)
        w += coefficients[i] * split_weight(p, splits[i]);
    return w;
}

SplitDecomposition split_decomposition(const VPolytope& p, const Weight& w)
{
    return split_decomposition(p, w, enumerate_splits(p));
}

SplitDecomposition split_decomposition(const VPolytope& p, const Weight& w,
                                       const SplitSystem& all_splits)
{
    SplitDecomposition dec;
    dec.remainder = w;
    for (const auto& s : all_splits) {
        ExtRat alpha = coherency_index(p, w, split_weight(p, s));
        if (alpha.is_infinite())
            throw std::logic_error("split_decomposition: infinite index against a split");
        if (alpha.value() > 0) {
            dec.splits.push_back(s);
            dec.coefficients.push_back(alpha.value());
            dec.remainder -= alpha.value() * split_weight(p, s);
        }
    }
    if (!is_split_prime(p, dec.remainder, all_splits))
        throw std::logic_error("split_decomposition: remainder is not split prime");
    return dec;
}

bool is_split_prime(const VPolytope& p, const Weight& w)
{
    return is_split_prime(p, w, enumerate_splits(p));
}

bool is_split_prime(const VPolytope& p, const Weight& w, const SplitSystem& all_splits)
{
    if (solve_affine(p.vertex_matrix(), w).has_value())
        return true;  // affine weights are zero in the quotient
    for (const auto& s : all_splits) {
        ExtRat alpha = coherency_index(p, w, split_weight(p, s));
        if (alpha.is_infinite() || alpha.value() != 0)
            return false;
    }
    return true;
}

Graph compatibility_graph(const VPolytope& p, const SplitSystem& sys)
{
    Graph g;
    g.n = static_cast<int>(sys.size());
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = i + 1; j < sys.size(); ++j)
            if (is_compatible(p, sys[i], sys[j]))
                g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return g;
}

SimplicialComplex split_complex(const VPolytope& p)
{
    SplitSystem sys = enumerate_splits(p);
    return flag_complex(compatibility_graph(p, sys));
}

std::vector<std::vector<int>> weak_split_faces(const VPolytope& p, int max_size)
{
    return weak_split_faces(p, enumerate_splits(p), max_size);
}

std::vector<std::vector<int>> weak_split_faces(const VPolytope& p,
                                               const SplitSystem& sys, int max_size)
{
    // weak compatibility is closed under subsets, so grow faces level by level
    std::vector<std::vector<int>> result, frontier;
    for (std::size_t i = 0; i < sys.size(); ++i)
        frontier.push_back({static_cast<int>(i)});
    int size = 1;
    while (!frontier.empty() && size <= max_size) {
        result.insert(result.end(), frontier.begin(), frontier.end());
        std::vector<std::vector<int>> next;
        for (const auto& face : frontier) {
            for (int j = face.back() + 1; j < static_cast<int>(sys.size()); ++j) {
                auto cand = face;
                cand.push_back(j);
                SplitSystem subsys;
                for (int i : cand)
                    subsys.push_back(sys[i]);
                if (is_weakly_compatible(p, subsys))
                    next.push_back(std::move(cand));
            }
        }
        frontier = std::move(next);
        ++size;
    }
    std::sort(result.begin(), result.end());
    return result;
}

HPolyhedron split_polyhedron(const VPolytope& p)
{
    const Eigen::Index n = p.n_vertices(), m = p.ambient_dim();
    const int d = p.dim();
    const Rat vol_p = volume(p);
    const VectorXq c_p = centroid(p);

    HPolyhedron h;
    h.width = n;
    h.equations.push_back(
        make_constraint(VectorXq::Constant(n, 1), Rel::Eq, Rat(d + 1) * vol_p));
    for (Eigen::Index k = 0; k < m; ++k) {
        VectorXq row(n);
        for (Eigen::Index i = 0; i < n; ++i)
            row(i) = p.vertex_matrix()(i, k);
        h.equations.push_back(
            make_constraint(row, Rel::Eq, Rat(d + 1) * vol_p * c_p(k)));
    }
    for (const auto& s : enumerate_splits(p)) {
        VectorXq row = VectorXq::Zero(n);
        for (int i : s.plus)
            row(i) = abs(p.vertex_matrix().row(i).dot(s.normal));
        const Rat vol_plus = volume_of_subpolytope(p, s.plus);
        const VectorXq c_plus = centroid_of_subpolytope(p, s.plus);
        const Rat rhs = abs(s.normal.dot(c_plus)) * Rat(d + 1) * vol_plus;
        h.inequalities.push_back(make_constraint(row, Rel::Ge, rhs));
    }
    return h;
}

TreeGraph tree_from_compatible(const VPolytope& p, const SplitSystem& sys)
{
    if (sys.empty())
        throw std::invalid_argument("tree_from_compatible: empty system");
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = i + 1; j < sys.size(); ++j)
            if (!is_compatible(p, sys[i], sys[j]))
                throw std::invalid_argument("tree_from_compatible: splits not compatible");

    Weight w = Weight::Zero(p.n_vertices());
    for (const auto& s : sys)
        w += split_weight(p, s);
    TightSpan ts = tight_span(p, w);

    TreeGraph tree;
    tree.node_coords = ts.vertices;
    for (const auto& f : ts.faces) {
        if (f.dim == 0)
            continue;
        if (f.dim > 1 || f.cells.size() != 2)
            throw std::logic_error("tree_from_compatible: tight span is not 1-dimensional");
        tree.edges.emplace_back(f.cells[0], f.cells[1]);
    }
    if (tree.edges.size() + 1 != static_cast<std::size_t>(ts.vertices.rows()))
        throw std::logic_error("tree_from_compatible: tight span is not a tree");

    // identify the split whose hyperplane carries each wall
    RegularSubdivision sub = regular_subdivision(p, w);
    for (auto [a, b] : tree.edges) {
        std::vector<int> wall;
        std::set_intersection(sub.cells[a].begin(), sub.cells[a].end(),
                              sub.cells[b].begin(), sub.cells[b].end(),
                              std::back_inserter(wall));
        int which = -1;
        for (std::size_t k = 0; k < sys.size() && which < 0; ++k) {
            bool on = true;
            for (int v : wall)
                if (sys[k].normal.dot(p.vertex(v)) != 0) {
                    on = false;
                    break;
                }
            if (on)
                which = static_cast<int>(k);
        }
        if (which < 0)
            throw std::logic_error("tree_from_compatible: wall matches no split");
        tree.edge_split.push_back(which);
    }
    return tree;
}

}  // namespace splitkit
