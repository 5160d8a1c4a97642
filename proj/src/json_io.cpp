#include "splitkit/json_io.hpp"

#include <stdexcept>

namespace splitkit {

namespace {

Rat parse_entry(const json& j)
{
    if (j.is_number_integer())
        return Rat(j.get<long long>());
    if (j.is_string())
        return parse_rat(j.get<std::string>());
    throw std::invalid_argument("expected a rational as integer or \"p/q\" string");
}

}  // namespace

json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const json& j) { return parse_entry(j); }

json vector_to_json(const VectorXq& v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(rat_str(v(i)));
    return out;
}

VectorXq vector_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected an array of rationals");
    VectorXq v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = parse_entry(j[i]);
    return v;
}

json matrix_to_json(const MatrixXq& m)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        out.push_back(vector_to_json(m.row(i).transpose()));
    return out;
}

MatrixXq matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a nonempty array of rows");
    const std::size_t cols = j[0].size();
    MatrixXq m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        m.row(i) = vector_from_json(j[i]).transpose();
    }
    return m;
}

json polytope_to_json(const VPolytope& p)
{
    return json{{"vertices", matrix_to_json(p.vertex_matrix())}};
}

VPolytope polytope_from_json(const json& j)
{
    if (!j.contains("vertices"))
        throw std::invalid_argument("polytope JSON needs a \"vertices\" field");
    return VPolytope::embed(matrix_from_json(j["vertices"]));
}

json constraint_to_json(const LinConstraint& c)
{
    const char* rel = c.rel == Rel::Eq ? "=" : (c.rel == Rel::Ge ? ">=" : ">");
    return json{{"coeffs", vector_to_json(c.coeffs)}, {"rel", rel},
                {"rhs", rat_str(c.rhs)}};
}

LinConstraint constraint_from_json(const json& j)
{
    LinConstraint c;
    c.coeffs = vector_from_json(j.at("coeffs"));
    std::string rel = j.at("rel").get<std::string>();
    if (rel == "=")
        c.rel = Rel::Eq;
    else if (rel == ">=")
        c.rel = Rel::Ge;
    else if (rel == ">")
        c.rel = Rel::Gt;
    else
        throw std::invalid_argument("constraint rel must be =, >= or >");
    c.rhs = parse_entry(j.at("rhs"));
    return c;
}

json hpolyhedron_to_json(const HPolyhedron& h)
{
    json eqs = json::array(), ineqs = json::array();
    for (const auto& c : h.equations)
        eqs.push_back(constraint_to_json(c));
    for (const auto& c : h.inequalities)
        ineqs.push_back(constraint_to_json(c));
    return json{{"equations", eqs}, {"inequalities", ineqs}};
}

HPolyhedron hpolyhedron_from_json(const json& j)
{
    HPolyhedron h;
    for (const auto& c : j.at("equations"))
        h.equations.push_back(constraint_from_json(c));
    for (const auto& c : j.at("inequalities"))
        h.inequalities.push_back(constraint_from_json(c));
    if (!h.equations.empty())
        h.width = h.equations[0].coeffs.size();
    else if (!h.inequalities.empty())
        h.width = h.inequalities[0].coeffs.size();
    return h;
}

json subdivision_to_json(const RegularSubdivision& s)
{
    return json{{"cells", s.cells}};
}

json tight_span_to_json(const TightSpan& t)
{
    json faces = json::array();
    for (const auto& f : t.faces)
        faces.push_back(json{{"cells", f.cells}, {"dim", f.dim}});
    return json{{"poset", faces}, {"vertices", matrix_to_json(t.vertices)}};
}

json split_to_json(const Split& s)
{
    return json{{"minus", s.minus}, {"normal", vector_to_json(s.normal)},
                {"plus", s.plus}};
}

Split split_from_json(const json& j)
{
    Split s;
    s.normal = vector_from_json(j.at("normal"));
    s.plus = j.at("plus").get<std::vector<int>>();
    s.minus = j.at("minus").get<std::vector<int>>();
    return s;
}

json decomposition_to_json(const SplitDecomposition& d)
{
    json terms = json::array();
    for (std::size_t i = 0; i < d.splits.size(); ++i)
        terms.push_back(json{{"lambda", rat_str(d.coefficients[i])},
                             {"split", split_to_json(d.splits[i])}});
    return json{{"remainder", vector_to_json(d.remainder)}, {"terms", terms}};
}

json ab_split_to_json(const ABSplit& s)
{
    return json{{"A", s.A}, {"k", s.k}, {"mu", s.mu}, {"n", s.n}};
}

ABSplit ab_split_from_json(const json& j, int default_k, int default_n)
{
    ABSplit s;
    s.A = j.at("A").get<std::vector<int>>();
    std::sort(s.A.begin(), s.A.end());
    s.mu = j.value("mu", 1);
    s.k = j.value("k", default_k);
    s.n = j.value("n", default_n);
    if (!ab_split_valid(s))
        throw std::invalid_argument("invalid (A,B;mu) split");
    return s;
}

json metric_to_json(const FiniteMetric& m)
{
    // upper triangle rows: d[i] = (delta(i,i+1), ..., delta(i,n-1))
    json rows = json::array();
    for (int i = 0; i + 1 < m.n(); ++i) {
        json row = json::array();
        for (int j = i + 1; j < m.n(); ++j)
            row.push_back(rat_str(m(i, j)));
        rows.push_back(row);
    }
    return json{{"d", rows}, {"n", m.n()}};
}

FiniteMetric metric_from_json(const json& j)
{
    const int n = j.at("n").get<int>();
    MatrixXq d = MatrixXq::Zero(n, n);
    const auto& rows = j.at("d");
    for (int i = 0; i < n - 1; ++i) {
        if (static_cast<int>(rows.size()) <= i ||
            static_cast<int>(rows[i].size()) != n - 1 - i)
            throw std::invalid_argument("metric: expected upper-triangle rows");
        for (int c = 0; c < n - 1 - i; ++c) {
            d(i, i + 1 + c) = parse_entry(rows[i][c]);
            d(i + 1 + c, i) = d(i, i + 1 + c);
        }
    }
    return FiniteMetric(n, std::move(d));
}

json matroid_to_json(const Matroid& m)
{
    return json{{"bases", m.bases}, {"k", m.k}, {"n", m.n}};
}

Matroid matroid_from_json(const json& j)
{
    return make_matroid(j.at("n").get<int>(), j.at("k").get<int>(),
                        j.at("bases").get<std::vector<std::vector<int>>>());
}

json complex_to_json(const SimplicialComplex& c)
{
    return json{{"facets", c.facets}};
}

SimplicialComplex complex_from_json(const json& j)
{
    SimplicialComplex c;
    c.facets = j.at("facets").get<std::vector<std::vector<int>>>();
    int top = -1;
    for (auto& f : c.facets) {
        std::sort(f.begin(), f.end());
        for (int v : f)
            top = std::max(top, v);
    }
    std::sort(c.facets.begin(), c.facets.end());
    c.n_vertices = top + 1;
    return c;
}

json homology_to_json(const HomologyResult& h)
{
    json out = json::array();
    for (const auto& g : h) {
        json tors = json::array();
        for (const auto& t : g.torsion)
            tors.push_back(t.str());
        out.push_back(json{{"dim", g.dim}, {"rank", g.rank}, {"torsion", tors}});
    }
    return out;
}

Weight weight_from_json(const json& j, Eigen::Index expected)
{
    VectorXq w = j.is_array() ? vector_from_json(j)
                              : vector_from_json(j.at("values"));
    if (expected >= 0 && w.size() != expected)
        throw std::invalid_argument("weight length does not match the vertex count");
    return w;
}

json tree_to_json(const LabeledTree& t)
{
    json edges = json::array();
    for (std::size_t e = 0; e < t.core.edges.size(); ++e)
        edges.push_back(json{{"nodes", {t.core.edges[e].first, t.core.edges[e].second}},
                             {"split", t.core.edge_split[e]}});
    json leaves = json::array();
    for (std::size_t i = 0; i < t.leaf_node.size(); ++i)
        leaves.push_back(json{{"label", static_cast<int>(i) + 1},
                              {"node", t.leaf_node[i]}});
    return json{{"edges", edges}, {"leaves", leaves},
                {"nodes", matrix_to_json(t.core.node_coords)}};
}

}  // namespace splitkit
