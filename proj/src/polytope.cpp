#include "splitkit/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace splitkit {

namespace {

std::vector<int> sorted(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

bool rows_equal(const MatrixXq& m, Eigen::Index i, Eigen::Index j)
{
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        if (m(i, c) != m(j, c))
            return false;
    return true;
}

// Is point i contained in the convex hull of the other rows?
bool in_hull_of_others(const MatrixXq& pts, Eigen::Index i)
{
    const Eigen::Index n = pts.rows(), m = pts.cols();
    if (n <= 1)
        return false;
    std::vector<LinConstraint> cs;
    const Eigen::Index vars = n - 1;  // lambda over the others
    VectorXq ones = VectorXq::Constant(vars, 1);
    cs.push_back(make_constraint(ones, Rel::Eq, 1));
    for (Eigen::Index c = 0; c < m; ++c) {
        VectorXq row(vars);
        Eigen::Index k = 0;
        for (Eigen::Index j = 0; j < n; ++j)
            if (j != i)
                row(k++) = pts(j, c);
        cs.push_back(make_constraint(row, Rel::Eq, pts(i, c)));
    }
    for (Eigen::Index j = 0; j < vars; ++j) {
        VectorXq e = VectorXq::Zero(vars);
        e(j) = 1;
        cs.push_back(make_constraint(e, Rel::Ge, 0));
    }
    VectorXq zero = VectorXq::Zero(vars);
    return lp_optimize(cs, zero, LpSense::Max).optimal();
}

}  // namespace

void VPolytope::finish()
{
    const Eigen::Index n = verts_.rows(), m = verts_.cols();
    dim_ = static_cast<int>(rank(verts_)) - 1;
    // chart: greedy lexicographic column choice spanning the direction space
    chart_.clear();
    if (dim_ <= 0)
        return;
    MatrixXq dirs(n - 1, m);
    for (Eigen::Index i = 1; i < n; ++i)
        dirs.row(i - 1) = verts_.row(i) - verts_.row(0);
    MatrixXq chosen(n - 1, 0);
    for (Eigen::Index c = 0; c < m && static_cast<int>(chart_.size()) < dim_; ++c) {
        MatrixXq trial(n - 1, chosen.cols() + 1);
        trial.leftCols(chosen.cols()) = chosen;
        trial.col(chosen.cols()) = dirs.col(c);
        if (rank(trial) == trial.cols()) {
            chosen = trial;
            chart_.push_back(static_cast<int>(c));
        }
    }
}

VPolytope VPolytope::embed(const MatrixXq& points)
{
    if (points.rows() == 0)
        throw std::invalid_argument("embed: no points");

    // convention: some c with V c = 1 for all rows
    MatrixXq pts = points;
    bool compliant = solve_affine(pts, VectorXq::Constant(pts.rows(), 1)).has_value();
    if (!compliant) {
        MatrixXq lifted(pts.rows(), pts.cols() + 1);
        lifted.col(0) = VectorXq::Constant(pts.rows(), 1);
        lifted.rightCols(pts.cols()) = pts;
        pts = std::move(lifted);
    }

    // drop duplicates, then non-vertices
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
        bool dup = false;
        for (Eigen::Index j : keep)
            if (rows_equal(pts, i, j))
                dup = true;
        if (!dup)
            keep.push_back(i);
    }
    MatrixXq uniq(keep.size(), pts.cols());
    for (std::size_t i = 0; i < keep.size(); ++i)
        uniq.row(i) = pts.row(keep[i]);

    std::vector<Eigen::Index> verts;
    for (Eigen::Index i = 0; i < uniq.rows(); ++i)
        if (!in_hull_of_others(uniq, i))
            verts.push_back(i);

    VPolytope p;
    p.verts_.resize(verts.size(), uniq.cols());
    for (std::size_t i = 0; i < verts.size(); ++i)
        p.verts_.row(i) = uniq.row(verts[i]);
    p.embedded_ = !compliant;
    p.finish();
    return p;
}

VPolytope VPolytope::from_vertices(const MatrixXq& verts)
{
    if (verts.rows() == 0)
        throw std::invalid_argument("from_vertices: no points");
    if (!solve_affine(verts, VectorXq::Constant(verts.rows(), 1)).has_value())
        throw std::invalid_argument("from_vertices: embedding convention violated");
    for (Eigen::Index i = 0; i < verts.rows(); ++i)
        for (Eigen::Index j = i + 1; j < verts.rows(); ++j)
            if (rows_equal(verts, i, j))
                throw std::invalid_argument("from_vertices: repeated vertex");
    for (Eigen::Index i = 0; i < verts.rows(); ++i)
        if (in_hull_of_others(verts, i))
            throw std::invalid_argument("from_vertices: row is not a vertex");
    VPolytope p;
    p.verts_ = verts;
    p.finish();
    return p;
}

VPolytope VPolytope::from_vertices_unchecked(MatrixXq verts)
{
    VPolytope p;
    p.verts_ = std::move(verts);
    p.finish();
    return p;
}

std::vector<std::pair<int, int>> edges(const VPolytope& p)
{
    const Eigen::Index n = p.n_vertices(), m = p.ambient_dim();
    if (n < 2)
        throw std::invalid_argument("edges: need at least two vertices");
    std::vector<std::pair<int, int>> result;
    for (Eigen::Index v = 0; v < n; ++v) {
        for (Eigen::Index w = v + 1; w < n; ++w) {
            // c . v = c . w > c . u for all other vertices u
            std::vector<LinConstraint> cs;
            cs.push_back(make_constraint(
                (p.vertex(v) - p.vertex(w)).eval(), Rel::Eq, 0));
            for (Eigen::Index u = 0; u < n; ++u) {
                if (u == v || u == w)
                    continue;
                cs.push_back(make_constraint(
                    (p.vertex(v) - p.vertex(u)).eval(), Rel::Gt, 0));
            }
            if (n == 2 || strict_feasible_point(cs, m).has_value())
                result.emplace_back(static_cast<int>(v), static_cast<int>(w));
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// double description

namespace {

struct Ray {
    VectorXq dir;
    std::set<int> tight;  // processed inequality rows tight at this ray
};

bool is_adjacent(const std::vector<Ray>& rays, std::size_t a, std::size_t b)
{
    std::set<int> common;
    std::set_intersection(rays[a].tight.begin(), rays[a].tight.end(),
                          rays[b].tight.begin(), rays[b].tight.end(),
                          std::inserter(common, common.begin()));
    for (std::size_t r = 0; r < rays.size(); ++r) {
        if (r == a || r == b)
            continue;
        if (std::includes(rays[r].tight.begin(), rays[r].tight.end(),
                          common.begin(), common.end()))
            return false;
    }
    return true;
}

}  // namespace

ConeDescription cone_dual(const MatrixXq& ineqs, const MatrixXq& eqs)
{
    const Eigen::Index m = ineqs.cols() > 0 ? ineqs.cols() : eqs.cols();

    std::vector<VectorXq> lin;
    for (Eigen::Index i = 0; i < m; ++i) {
        VectorXq e = VectorXq::Zero(m);
        e(i) = 1;
        lin.push_back(e);
    }
    std::vector<Ray> rays;
    std::set<int> processed;  // inequality rows handled so far

    auto reduce_lineality = [&](const VectorXq& a, bool as_equation, int row) {
        // some lineality vector crosses the constraint: use it to clear
        std::size_t pick = 0;
        while ((a.dot(lin[pick])) == 0)
            ++pick;
        VectorXq l0 = lin[pick];
        Rat al0 = a.dot(l0);
        if (!as_equation && al0 < 0) {
            l0 = -l0;
            al0 = -al0;
        }
        std::vector<VectorXq> nl;
        for (std::size_t i = 0; i < lin.size(); ++i) {
            if (i == pick)
                continue;
            nl.push_back(lin[i] - (a.dot(lin[i]) / al0) * l0);
        }
        lin = std::move(nl);
        for (auto& r : rays) {
            Rat ar = a.dot(r.dir);
            if (ar != 0)
                r.dir = primitive_vector(r.dir - (ar / al0) * l0);
            if (row >= 0)
                r.tight.insert(row);
        }
        if (!as_equation) {
            // the surviving direction was lineality, so it is tight for
            // every earlier constraint but strictly positive on this one
            Ray nr;
            nr.dir = primitive_vector(l0);
            nr.tight = processed;
            rays.push_back(std::move(nr));
        }
    };

    auto combine = [&](const VectorXq& a, bool as_equation, int row) {
        std::vector<std::size_t> pos, neg;
        std::vector<Rat> vals(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            vals[i] = a.dot(rays[i].dir);
            if (vals[i] > 0)
                pos.push_back(i);
            else if (vals[i] < 0)
                neg.push_back(i);
            else if (row >= 0)
                rays[i].tight.insert(row);
        }
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (vals[i] == 0 || (!as_equation && vals[i] > 0))
                next.push_back(rays[i]);
        }
        for (auto ip : pos) {
            for (auto in : neg) {
                if (!is_adjacent(rays, ip, in))
                    continue;
                Ray nr;
                nr.dir = primitive_vector(vals[ip] * rays[in].dir -
                                          vals[in] * rays[ip].dir);
                std::set_intersection(rays[ip].tight.begin(), rays[ip].tight.end(),
                                      rays[in].tight.begin(), rays[in].tight.end(),
                                      std::inserter(nr.tight, nr.tight.begin()));
                if (row >= 0)
                    nr.tight.insert(row);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    };

    for (Eigen::Index e = 0; e < eqs.rows(); ++e) {
        VectorXq a = eqs.row(e).transpose();
        bool crosses = false;
        for (const auto& l : lin)
            if (a.dot(l) != 0)
                crosses = true;
        if (crosses)
            reduce_lineality(a, true, -1);
        else
            combine(a, true, -1);
    }

    // inequalities: repeatedly insert the one satisfied by fewest generators
    std::vector<bool> done(ineqs.rows(), false);
    for (Eigen::Index step = 0; step < ineqs.rows(); ++step) {
        Eigen::Index best = -1;
        std::size_t best_sat = 0;
        bool best_crosses = false;
        for (Eigen::Index i = 0; i < ineqs.rows(); ++i) {
            if (done[i])
                continue;
            VectorXq a = ineqs.row(i).transpose();
            bool crosses = false;
            for (const auto& l : lin)
                if (a.dot(l) != 0)
                    crosses = true;
            std::size_t sat = 0;
            for (const auto& r : rays)
                if (a.dot(r.dir) >= 0)
                    ++sat;
            if (best < 0 || (crosses && !best_crosses) ||
                (crosses == best_crosses && sat < best_sat)) {
                best = i;
                best_sat = sat;
                best_crosses = crosses;
            }
        }
        done[best] = true;
        VectorXq a = ineqs.row(best).transpose();
        if (best_crosses)
            reduce_lineality(a, false, static_cast<int>(best));
        else
            combine(a, false, static_cast<int>(best));
        processed.insert(static_cast<int>(best));
    }

    ConeDescription out;
    out.rays.resize(rays.size(), m);
    out.tight.resize(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
        out.rays.row(i) = rays[i].dir.transpose();
        out.tight[i].assign(rays[i].tight.begin(), rays[i].tight.end());
    }
    out.lineality.resize(lin.size(), m);
    for (std::size_t i = 0; i < lin.size(); ++i)
        out.lineality.row(i) = primitive_vector(lin[i]).transpose();
    return out;
}

DualDescription dual_description(const HPolyhedron& h)
{
    const Eigen::Index m = h.width;
    MatrixXq ineqs(h.inequalities.size() + 1, m + 1);
    ineqs.row(0).setZero();
    ineqs(0, 0) = 1;  // homogenization coordinate is nonnegative
    for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
        const auto& c = h.inequalities[i];
        ineqs(i + 1, 0) = -c.rhs;
        ineqs.row(i + 1).tail(m) = c.coeffs.transpose();
    }
    MatrixXq eqs(h.equations.size(), m + 1);
    for (std::size_t i = 0; i < h.equations.size(); ++i) {
        const auto& c = h.equations[i];
        eqs(i, 0) = -c.rhs;
        eqs.row(i).tail(m) = c.coeffs.transpose();
    }

    ConeDescription cone = cone_dual(ineqs, eqs);

    std::vector<VectorXq> verts, rays;
    for (Eigen::Index i = 0; i < cone.rays.rows(); ++i) {
        VectorXq r = cone.rays.row(i).transpose();
        if (r(0) > 0)
            verts.push_back((r.tail(m) / r(0)).eval());
        else
            rays.push_back(primitive_vector(r.tail(m).eval()));
    }

    auto lex_less = [](const VectorXq& a, const VectorXq& b) {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if (a(i) != b(i))
                return a(i) < b(i);
        }
        return false;
    };
    std::sort(verts.begin(), verts.end(), lex_less);
    std::sort(rays.begin(), rays.end(), lex_less);

    DualDescription dd;
    dd.feasible = !verts.empty();
    dd.vertices.resize(verts.size(), m);
    for (std::size_t i = 0; i < verts.size(); ++i)
        dd.vertices.row(i) = verts[i].transpose();
    dd.rays.resize(rays.size(), m);
    for (std::size_t i = 0; i < rays.size(); ++i)
        dd.rays.row(i) = rays[i].transpose();
    if (!dd.feasible) {
        dd.rays.resize(0, m);
        dd.lineality.resize(0, m);
        return dd;
    }
    dd.lineality.resize(cone.lineality.rows(), m);
    for (Eigen::Index i = 0; i < cone.lineality.rows(); ++i)
        dd.lineality.row(i) = cone.lineality.row(i).tail(m);
    return dd;
}

std::vector<std::vector<int>> facet_incidences(const VPolytope& p)
{
    const MatrixXq& v = p.vertex_matrix();
    ConeDescription cone = cone_dual(v, MatrixXq(0, v.cols()));
    std::vector<std::vector<int>> facets;
    for (const auto& t : cone.tight)
        facets.push_back(t);
    std::sort(facets.begin(), facets.end());
    return facets;
}

FaceLattice face_lattice(const MatrixXq& verts,
                         const std::vector<std::vector<int>>& facets)
{
    const Eigen::Index n = verts.rows();
    auto aff_rank = [&](const std::vector<int>& face) {
        MatrixXq m(face.size(), verts.cols() + 1);
        for (std::size_t i = 0; i < face.size(); ++i) {
            m(i, 0) = 1;
            m.row(i).tail(verts.cols()) = verts.row(face[i]);
        }
        return static_cast<int>(rank(m)) - 1;
    };

    std::vector<int> full(n);
    for (Eigen::Index i = 0; i < n; ++i)
        full[i] = static_cast<int>(i);
    const int dim = aff_rank(full);

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (const auto& f : facets) {
        auto s = sorted(f);
        if (!s.empty() && seen.insert(s).second)
            queue.push_back(s);
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const auto face = queue[q];
        for (const auto& f : facets) {
            std::vector<int> inter;
            std::set_intersection(face.begin(), face.end(), f.begin(), f.end(),
                                  std::back_inserter(inter));
            if (!inter.empty() && inter != face && seen.insert(inter).second)
                queue.push_back(inter);
        }
    }

    FaceLattice fl;
    fl.dim = dim;
    fl.faces_by_dim.assign(std::max(dim, 0), {});
    for (const auto& face : seen) {
        int fd = aff_rank(face);
        if (fd >= 0 && fd < dim)
            fl.faces_by_dim[fd].push_back(face);
    }
    for (auto& level : fl.faces_by_dim) {
        std::sort(level.begin(), level.end());
        fl.f_vector.push_back(static_cast<long>(level.size()));
    }
    return fl;
}

// ---------------------------------------------------------------------------
// volume and triangulation

namespace {

void triangulate_rec(const MatrixXq& verts, const std::vector<int>& indices,
                     std::vector<std::vector<int>>& out)
{
    MatrixXq sub(indices.size(), verts.cols());
    for (std::size_t i = 0; i < indices.size(); ++i)
        sub.row(i) = verts.row(indices[i]);
    const Eigen::Index r = rank(sub);  // affine dim + 1 under the convention
    if (static_cast<Eigen::Index>(indices.size()) == r) {
        out.push_back(indices);
        return;
    }
    ConeDescription cone = cone_dual(sub, MatrixXq(0, verts.cols()));
    const int apex = indices[0];
    for (const auto& t : cone.tight) {
        std::vector<int> facet;
        for (int local : t)
            facet.push_back(indices[local]);
        if (std::find(facet.begin(), facet.end(), apex) != facet.end())
            continue;
        std::vector<std::vector<int>> sub_simplices;
        triangulate_rec(verts, sorted(facet), sub_simplices);
        for (auto s : sub_simplices) {
            s.push_back(apex);
            out.push_back(sorted(s));
        }
    }
}

}  // namespace

std::vector<std::vector<int>> pulling_triangulation(const VPolytope& p)
{
    std::vector<int> all(p.n_vertices());
    for (Eigen::Index i = 0; i < p.n_vertices(); ++i)
        all[i] = static_cast<int>(i);
    std::vector<std::vector<int>> simplices;
    triangulate_rec(p.vertex_matrix(), all, simplices);
    std::sort(simplices.begin(), simplices.end());
    return simplices;
}

Rat simplex_chart_volume(const VPolytope& p, const std::vector<int>& simplex)
{
    const auto& chart = p.chart();
    const int d = p.dim();
    if (static_cast<int>(simplex.size()) != d + 1)
        throw std::invalid_argument("simplex_chart_volume: wrong vertex count");
    if (d == 0)
        return 1;
    MatrixXq m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m(i, j) = p.vertex_matrix()(simplex[i + 1], chart[j]) -
                      p.vertex_matrix()(simplex[0], chart[j]);

    // exact determinant by elimination
    Rat det = 1;
    for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int r = c; r < d; ++r)
            if (m(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            return 0;
        if (piv != c) {
            m.row(piv).swap(m.row(c));
            det = -det;
        }
        det *= m(c, c);
        for (int r = c + 1; r < d; ++r) {
            if (m(r, c) != 0)
                m.row(r) -= (m(r, c) / m(c, c)) * m.row(c);
        }
    }
    Rat fact = 1;
    for (int i = 2; i <= d; ++i)
        fact *= i;
    return abs(det) / fact;
}

Rat volume(const VPolytope& p)
{
    if (p.dim() == 0)
        return 1;  // conventional volume of a point
    Rat total = 0;
    for (const auto& s : pulling_triangulation(p))
        total += simplex_chart_volume(p, s);
    return total;
}

VectorXq centroid(const VPolytope& p)
{
    if (p.dim() == 0)
        return p.vertex(0);
    VectorXq num = VectorXq::Zero(p.ambient_dim());
    Rat total = 0;
    for (const auto& s : pulling_triangulation(p)) {
        Rat v = simplex_chart_volume(p, s);
        VectorXq c = VectorXq::Zero(p.ambient_dim());
        for (int idx : s)
            c += p.vertex(idx);
        c /= Rat(static_cast<int>(s.size()));
        num += v * c;
        total += v;
    }
    return num / total;
}

Rat volume_of_subpolytope(const VPolytope& p, const std::vector<int>& vertex_set)
{
    MatrixXq sub(vertex_set.size(), p.ambient_dim());
    for (std::size_t i = 0; i < vertex_set.size(); ++i)
        sub.row(i) = p.vertex_matrix().row(vertex_set[i]);
    VPolytope q = VPolytope::from_vertices_unchecked(std::move(sub));
    if (q.dim() != p.dim())
        throw std::invalid_argument("volume_of_subpolytope: not full-dimensional");
    Rat total = 0;
    for (const auto& s : pulling_triangulation(q)) {
        std::vector<int> mapped;
        for (int idx : s)
            mapped.push_back(vertex_set[idx]);
        total += simplex_chart_volume(p, mapped);
    }
    return total;
}

VectorXq centroid_of_subpolytope(const VPolytope& p, const std::vector<int>& vertex_set)
{
    MatrixXq sub(vertex_set.size(), p.ambient_dim());
    for (std::size_t i = 0; i < vertex_set.size(); ++i)
        sub.row(i) = p.vertex_matrix().row(vertex_set[i]);
    return centroid(VPolytope::from_vertices_unchecked(std::move(sub)));
}

bool relint_meets(const VPolytope& p, const std::vector<Hyperplane>& planes)
{
    if (planes.empty())
        throw std::invalid_argument("relint_meets: no hyperplanes");
    const Eigen::Index n = p.n_vertices();
    // strictly positive convex combination landing on every hyperplane
    std::vector<LinConstraint> cs;
    cs.push_back(make_constraint(VectorXq::Constant(n, 1), Rel::Eq, 1));
    for (const auto& h : planes) {
        VectorXq row(n);
        for (Eigen::Index i = 0; i < n; ++i)
            row(i) = h.normal.dot(p.vertex(i));
        cs.push_back(make_constraint(row, Rel::Eq, 0));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        VectorXq e = VectorXq::Zero(n);
        e(i) = 1;
        cs.push_back(make_constraint(e, Rel::Gt, 0));
    }
    return strict_feasible_point(cs, n).has_value();
}

}  // namespace splitkit
