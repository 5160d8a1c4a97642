#include "splitkit/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace splitkit {

namespace {

std::vector<std::vector<bool>> adjacency(const Graph& g)
{
    std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
    for (auto [a, b] : g.edges) {
        if (a == b || a < 0 || b < 0 || a >= g.n || b >= g.n)
            throw std::invalid_argument("graph: bad edge");
        adj[a][b] = adj[b][a] = true;
    }
    return adj;
}

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int>& r,
                   std::set<int> p, std::set<int> x,
                   std::vector<std::vector<int>>& out)
{
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // pivot on the vertex with most neighbors in p
    int pivot = -1, best = -1;
    for (int u : p) {
        int cnt = 0;
        for (int v : p)
            if (adj[u][v])
                ++cnt;
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    }
    for (int u : x) {
        int cnt = 0;
        for (int v : p)
            if (adj[u][v])
                ++cnt;
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    }
    std::vector<int> candidates;
    for (int v : p)
        if (pivot < 0 || !adj[pivot][v])
            candidates.push_back(v);
    for (int v : candidates) {
        std::set<int> np, nx;
        for (int w : p)
            if (adj[v][w])
                np.insert(w);
        for (int w : x)
            if (adj[v][w])
                nx.insert(w);
        r.push_back(v);
        bron_kerbosch(adj, r, np, nx, out);
        r.pop_back();
        p.erase(v);
        x.insert(v);
    }
}

}  // namespace

SimplicialComplex flag_complex(const Graph& g)
{
    auto adj = adjacency(g);
    std::vector<std::vector<int>> cliques;
    std::vector<int> r;
    std::set<int> p, x;
    for (int i = 0; i < g.n; ++i)
        p.insert(i);
    bron_kerbosch(adj, r, p, x, cliques);
    for (auto& c : cliques)
        std::sort(c.begin(), c.end());
    std::sort(cliques.begin(), cliques.end());

    SimplicialComplex sc;
    sc.n_vertices = g.n;
    sc.facets = std::move(cliques);
    return sc;
}

std::vector<std::vector<int>> faces_of_dim(const SimplicialComplex& c, int dim)
{
    std::set<std::vector<int>> faces;
    const std::size_t k = static_cast<std::size_t>(dim) + 1;
    for (const auto& facet : c.facets) {
        if (facet.size() < k)
            continue;
        // all k-subsets of the facet
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i)
            idx[i] = i;
        for (;;) {
            std::vector<int> face(k);
            for (std::size_t i = 0; i < k; ++i)
                face[i] = facet[idx[i]];
            faces.insert(face);
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == facet.size() - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return {faces.begin(), faces.end()};
}

std::vector<long> f_vector(const SimplicialComplex& c)
{
    int top = -1;
    for (const auto& f : c.facets)
        top = std::max(top, static_cast<int>(f.size()) - 1);
    std::vector<long> fv;
    for (int d = 0; d <= top; ++d)
        fv.push_back(static_cast<long>(faces_of_dim(c, d).size()));
    return fv;
}

HomologyResult reduced_homology(const SimplicialComplex& c)
{
    int top = -1;
    for (const auto& f : c.facets)
        top = std::max(top, static_cast<int>(f.size()) - 1);
    if (top < 0)
        return {};

    std::vector<std::vector<std::vector<int>>> faces(top + 1);
    std::vector<std::map<std::vector<int>, int>> index(top + 1);
    for (int d = 0; d <= top; ++d) {
        faces[d] = faces_of_dim(c, d);
        for (std::size_t i = 0; i < faces[d].size(); ++i)
            index[d][faces[d][i]] = static_cast<int>(i);
    }

    // boundary_d : C_d -> C_{d-1}; row count of boundary_0 is 1 (augmentation)
    auto boundary = [&](int d) {
        const auto& dom = faces[d];
        Eigen::Index rows = d == 0 ? 1 : static_cast<Eigen::Index>(faces[d - 1].size());
        MatrixXz b = MatrixXz::Zero(rows, static_cast<Eigen::Index>(dom.size()));
        for (std::size_t j = 0; j < dom.size(); ++j) {
            if (d == 0) {
                b(0, static_cast<Eigen::Index>(j)) = 1;
                continue;
            }
            int sign = 1;
            for (std::size_t drop = 0; drop < dom[j].size(); ++drop) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < dom[j].size(); ++i)
                    if (i != drop)
                        sub.push_back(dom[j][i]);
                b(index[d - 1].at(sub), static_cast<Eigen::Index>(j)) = sign;
                sign = -sign;
            }
        }
        return b;
    };

    std::vector<std::vector<Int>> snf(top + 2);
    std::vector<long> rank_of(top + 2, 0);
    for (int d = 0; d <= top; ++d) {
        snf[d] = smith_normal_form(boundary(d));
        rank_of[d] = static_cast<long>(snf[d].size());
    }

    HomologyResult res;
    for (int d = 0; d <= top; ++d) {
        HomologyGroup h;
        h.dim = d;
        h.rank = static_cast<long>(faces[d].size()) - rank_of[d] - rank_of[d + 1];
        if (d + 1 <= top)
            for (const auto& f : snf[d + 1])
                if (f > 1)
                    h.torsion.push_back(f);
        res.push_back(std::move(h));
    }
    return res;
}

GraphStats graph_stats(const Graph& g)
{
    auto adj = adjacency(g);
    GraphStats st;
    st.degrees.resize(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (adj[i][j])
                ++st.degrees[i];
    std::sort(st.degrees.begin(), st.degrees.end());

    // girth: per start vertex, BFS tracking the parent edge
    int girth = -1;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1), parent(g.n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < g.n; ++v) {
                if (!adj[u][v])
                    continue;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (girth < 0 || len < girth)
                        girth = len;
                }
            }
        }
    }
    st.girth = girth;

    // connected components
    std::vector<int> comp(g.n, -1);
    int ncomp = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0)
            continue;
        comp[s] = ncomp;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < g.n; ++v)
                if (adj[u][v] && comp[v] < 0) {
                    comp[v] = ncomp;
                    q.push(v);
                }
        }
        ++ncomp;
    }
    st.components = ncomp;

    // vertex connectivity by Menger: min over non-adjacent pairs of the
    // max number of internally disjoint paths (unit vertex capacities)
    if (ncomp > 1) {
        st.vertex_connectivity = 0;
    } else if (g.n <= 1) {
        st.vertex_connectivity = 0;
    } else {
        bool complete = true;
        for (int i = 0; i < g.n && complete; ++i)
            for (int j = i + 1; j < g.n; ++j)
                if (!adj[i][j]) {
                    complete = false;
                    break;
                }
        if (complete) {
            st.vertex_connectivity = g.n - 1;
        } else {
            int best = g.n;
            for (int s = 0; s < g.n; ++s) {
                for (int t = s + 1; t < g.n; ++t) {
                    if (adj[s][t])
                        continue;
                    // split each vertex into in/out nodes, unit capacities
                    const int N = 2 * g.n;
                    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
                    for (int v = 0; v < g.n; ++v)
                        cap[2 * v][2 * v + 1] = (v == s || v == t) ? g.n : 1;
                    for (int u = 0; u < g.n; ++u)
                        for (int v = 0; v < g.n; ++v)
                            if (adj[u][v])
                                cap[2 * u + 1][2 * v] = g.n;
                    int flow = 0;
                    for (;;) {
                        std::vector<int> prev(N, -1);
                        std::queue<int> q;
                        q.push(2 * s + 1);
                        prev[2 * s + 1] = 2 * s + 1;
                        while (!q.empty()) {
                            int u = q.front();
                            q.pop();
                            for (int v = 0; v < N; ++v)
                                if (prev[v] < 0 && cap[u][v] > 0) {
                                    prev[v] = u;
                                    q.push(v);
                                }
                        }
                        if (prev[2 * t] < 0)
                            break;
                        int v = 2 * t;
                        while (v != 2 * s + 1) {
                            int u = prev[v];
                            --cap[u][v];
                            ++cap[v][u];
                            v = u;
                        }
                        ++flow;
                    }
                    best = std::min(best, flow);
                }
            }
            st.vertex_connectivity = best;
        }
    }
    return st;
}

}  // namespace splitkit
