#include "splitkit/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace splitkit {

namespace {

bool is_affine_weight(const VPolytope& p, const Weight& w)
{
    // affine functions on aff P are restrictions of linear functionals
    return solve_affine(p.vertex_matrix(), w).has_value();
}

std::vector<int> cell_intersection(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

int face_dim(const VPolytope& p, const std::vector<int>& face)
{
    MatrixXq m(face.size(), p.ambient_dim());
    for (std::size_t i = 0; i < face.size(); ++i)
        m.row(i) = p.vertex_matrix().row(face[i]);
    return static_cast<int>(rank(m)) - 1;  // aff P misses the origin
}

// All faces arising as intersections of maximal cells, the cells included.
std::set<std::vector<int>> intersection_closure(const std::vector<std::vector<int>>& cells)
{
    std::set<std::vector<int>> seen(cells.begin(), cells.end());
    std::vector<std::vector<int>> queue(seen.begin(), seen.end());
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& c : cells) {
            auto inter = cell_intersection(queue[q], c);
            if (!inter.empty() && seen.insert(inter).second)
                queue.push_back(inter);
        }
    }
    return seen;
}

bool lies_in_boundary(const std::vector<int>& face,
                      const std::vector<std::vector<int>>& facets)
{
    for (const auto& f : facets)
        if (std::includes(f.begin(), f.end(), face.begin(), face.end()))
            return true;
    return false;
}

}  // namespace

RegularSubdivision regular_subdivision(const VPolytope& p, const Weight& w)
{
    const Eigen::Index n = p.n_vertices(), m = p.ambient_dim();
    if (w.size() != n)
        throw std::invalid_argument("regular_subdivision: weight length mismatch");

    RegularSubdivision sub;
    sub.polytope = p;
    sub.weight = w;

    if (is_affine_weight(p, w)) {  // degenerate lift: trivial subdivision
        std::vector<int> all(n);
        for (Eigen::Index i = 0; i < n; ++i)
            all[i] = static_cast<int>(i);
        sub.cells.push_back(all);
        return sub;
    }

    MatrixXq lifted(n + 1, m + 1);
    lifted.block(0, 0, n, m) = p.vertex_matrix();
    lifted.col(m).head(n) = w;
    lifted.row(n).setZero();
    lifted(n, m) = 1;  // upward ray

    ConeDescription cone = cone_dual(lifted, MatrixXq(0, m + 1));
    for (Eigen::Index i = 0; i < cone.rays.rows(); ++i) {
        if (cone.rays(i, m) <= 0)
            continue;  // vertical facet, not part of the lower hull
        std::vector<int> cell;
        for (int t : cone.tight[i])
            if (t < n)
                cell.push_back(t);
        sub.cells.push_back(std::move(cell));
    }
    std::sort(sub.cells.begin(), sub.cells.end());
    return sub;
}

std::pair<std::vector<std::vector<int>>, MatrixXq>
tight_span_vertices(const VPolytope& p, const Weight& w)
{
    RegularSubdivision sub = regular_subdivision(p, w);
    MatrixXq verts(sub.cells.size(), p.ambient_dim());
    for (std::size_t c = 0; c < sub.cells.size(); ++c) {
        const auto& cell = sub.cells[c];
        MatrixXq a(cell.size(), p.ambient_dim());
        VectorXq b(cell.size());
        for (std::size_t i = 0; i < cell.size(); ++i) {
            a.row(i) = p.vertex_matrix().row(cell[i]);
            b(i) = -w(cell[i]);
        }
        auto sol = solve_affine(a, b);
        if (!sol || sol->nullspace.cols() != 0)
            throw std::logic_error("tight_span: dual vertex solve failed");
        verts.row(c) = sol->particular.transpose();
    }
    return {sub.cells, verts};
}

TightSpan tight_span(const VPolytope& p, const Weight& w)
{
    auto [cells, verts] = tight_span_vertices(p, w);
    TightSpan ts;
    ts.vertices = verts;

    const int d = p.dim();
    const auto facets = facet_incidences(p);
    for (const auto& face : intersection_closure(cells)) {
        if (lies_in_boundary(face, facets))
            continue;
        TightSpanFace f;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (std::includes(cells[i].begin(), cells[i].end(),
                              face.begin(), face.end()))
                f.cells.push_back(static_cast<int>(i));
        f.dim = d - face_dim(p, face);
        ts.faces.push_back(std::move(f));
    }
    std::sort(ts.faces.begin(), ts.faces.end(),
              [](const TightSpanFace& a, const TightSpanFace& b) {
                  return std::tie(a.dim, a.cells) < std::tie(b.dim, b.cells);
              });
    return ts;
}

bool refines(const RegularSubdivision& fine, const RegularSubdivision& coarse)
{
    if (fine.polytope.vertex_matrix() != coarse.polytope.vertex_matrix())
        throw std::invalid_argument("refines: subdivisions of different polytopes");
    for (const auto& cf : fine.cells) {
        bool inside = false;
        for (const auto& cc : coarse.cells) {
            if (std::includes(cc.begin(), cc.end(), cf.begin(), cf.end())) {
                inside = true;
                break;
            }
        }
        if (!inside)
            return false;
    }
    return true;
}

namespace {

// do the relative interiors of conv(c1) and conv(c2) intersect?
bool cells_overlap(const VPolytope& p, const std::vector<int>& c1,
                   const std::vector<int>& c2)
{
    const Eigen::Index m = p.ambient_dim();
    const Eigen::Index vars = static_cast<Eigen::Index>(c1.size() + c2.size());
    std::vector<LinConstraint> cs;
    VectorXq sum1 = VectorXq::Zero(vars), sum2 = VectorXq::Zero(vars);
    for (std::size_t i = 0; i < c1.size(); ++i)
        sum1(i) = 1;
    for (std::size_t i = 0; i < c2.size(); ++i)
        sum2(c1.size() + i) = 1;
    cs.push_back(make_constraint(sum1, Rel::Eq, 1));
    cs.push_back(make_constraint(sum2, Rel::Eq, 1));
    for (Eigen::Index k = 0; k < m; ++k) {
        VectorXq row = VectorXq::Zero(vars);
        for (std::size_t i = 0; i < c1.size(); ++i)
            row(i) = p.vertex_matrix()(c1[i], k);
        for (std::size_t i = 0; i < c2.size(); ++i)
            row(c1.size() + i) = -p.vertex_matrix()(c2[i], k);
        cs.push_back(make_constraint(row, Rel::Eq, 0));
    }
    for (Eigen::Index i = 0; i < vars; ++i) {
        VectorXq e = VectorXq::Zero(vars);
        e(i) = 1;
        cs.push_back(make_constraint(e, Rel::Gt, 0));
    }
    return strict_feasible_point(cs, vars).has_value();
}

}  // namespace

bool is_coherent(const VPolytope& p, const Weight& w1, const Weight& w2)
{
    RegularSubdivision sub = regular_subdivision(p, w1 + w2);
    RegularSubdivision s1 = regular_subdivision(p, w1);
    RegularSubdivision s2 = regular_subdivision(p, w2);
    if (!refines(sub, s1) || !refines(sub, s2))
        return false;
    std::size_t overlaps = 0;
    for (const auto& c1 : s1.cells)
        for (const auto& c2 : s2.cells)
            if (cells_overlap(p, c1, c2))
                ++overlaps;
    return overlaps == sub.cells.size();
}

ExtRat coherency_index(const VPolytope& p, const Weight& w, const Weight& wref)
{
    auto [cells_w, xs] = tight_span_vertices(p, w);
    auto [cells_r, xrefs] = tight_span_vertices(p, wref);
    const Eigen::Index n = p.n_vertices();

    ExtRat outer;
    bool outer_set = false;
    for (Eigen::Index i = 0; i < xs.rows(); ++i) {
        ExtRat best;  // max over reference tight-span vertices
        bool best_set = false;
        for (Eigen::Index j = 0; j < xrefs.rows(); ++j) {
            const auto& cell = cells_r[j];
            ExtRat inner = ExtRat::infinity();  // min over vertices off the cell
            for (Eigen::Index v = 0; v < n; ++v) {
                if (std::binary_search(cell.begin(), cell.end(), static_cast<int>(v)))
                    continue;
                Rat den = p.vertex_matrix().row(v).dot(xrefs.row(j)) + wref(v);
                Rat num = p.vertex_matrix().row(v).dot(xs.row(i)) + w(v);
                ExtRat ratio{num / den};
                if (ratio < inner)
                    inner = ratio;
            }
            if (!best_set || inner > best) {
                best = inner;
                best_set = true;
            }
        }
        if (!outer_set || best < outer) {
            outer = best;
            outer_set = true;
        }
    }
    return outer;
}

bool same_subdivision(const VPolytope& p, const Weight& w1, const Weight& w2)
{
    return regular_subdivision(p, w1).cells == regular_subdivision(p, w2).cells;
}

std::vector<std::vector<int>> interior_faces(const RegularSubdivision& sub, int codim)
{
    if (codim < 1)
        throw std::invalid_argument("interior_faces: codim must be >= 1");
    const VPolytope& p = sub.polytope;
    const int d = p.dim();
    const auto facets = facet_incidences(p);
    std::vector<std::vector<int>> out;
    for (const auto& face : intersection_closure(sub.cells)) {
        if (lies_in_boundary(face, facets))
            continue;
        if (d - face_dim(p, face) == codim)
            out.push_back(face);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> dual_graph(const RegularSubdivision& sub)
{
    const int d = sub.polytope.dim();
    std::vector<std::pair<int, int>> adj;
    for (std::size_t i = 0; i < sub.cells.size(); ++i) {
        for (std::size_t j = i + 1; j < sub.cells.size(); ++j) {
            auto inter = cell_intersection(sub.cells[i], sub.cells[j]);
            if (!inter.empty() && face_dim(sub.polytope, inter) == d - 1)
                adj.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return adj;
}

bool is_triangulation(const RegularSubdivision& sub)
{
    const int d = sub.polytope.dim();
    for (const auto& cell : sub.cells) {
        if (static_cast<int>(cell.size()) != d + 1)
            return false;
        if (face_dim(sub.polytope, cell) != d)
            return false;
    }
    return true;
}

bool is_foldable(const RegularSubdivision& sub)
{
    if (!is_triangulation(sub))
        throw std::invalid_argument("is_foldable: not a triangulation");
    const std::size_t n = sub.cells.size();
    std::vector<std::vector<int>> nbrs(n);
    for (auto [a, b] : dual_graph(sub)) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    }
    std::vector<int> color(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (color[s] >= 0)
            continue;
        color[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (int v : nbrs[u]) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    stack.push_back(static_cast<std::size_t>(v));
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

VectorXq gkz_vector(const RegularSubdivision& sub)
{
    if (!is_triangulation(sub))
        throw std::invalid_argument("gkz_vector: not a triangulation");
    const VPolytope& p = sub.polytope;
    VectorXq g = VectorXq::Zero(p.n_vertices());
    for (const auto& cell : sub.cells) {
        Rat v = simplex_chart_volume(p, cell);
        for (int idx : cell)
            g(idx) += v;
    }
    return g;
}

}  // namespace splitkit
