#include "partilab/graph.hpp"

#include "partilab/embedding.hpp"
#include "partilab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace partilab {

Graph::Graph(int n, std::vector<Edge> edges)
    : n_(n)
{
    if (n < 0)
        throw error(errc::out_of_range, "negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw error(errc::out_of_range,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw error(errc::self_loop, "self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw error(errc::duplicate_edge, "duplicate edge");
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    matrix_.assign((static_cast<std::size_t>(n_) * n_ + 63) / 64, 0);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        const std::size_t a = static_cast<std::size_t>(u) * n_ + v;
        const std::size_t b = static_cast<std::size_t>(v) * n_ + u;
        matrix_[a >> 6] |= 1ULL << (a & 63);
        matrix_[b >> 6] |= 1ULL << (b & 63);
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());
}

Graph make_graph(int n, std::vector<Edge> edges)
{
    return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    std::vector<Edge> edges = g.edges();
    edges.reserve(g.edge_count() + h.edge_count());
    const int shift = g.vertex_count();
    for (const auto& [u, v] : h.edges())
        edges.emplace_back(u + shift, v + shift);
    return Graph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

Graph join(const Graph& g, const Graph& h)
{
    std::vector<Edge> edges = g.edges();
    const int gn = g.vertex_count();
    const int hn = h.vertex_count();
    edges.reserve(g.edge_count() + h.edge_count() + static_cast<std::size_t>(gn) * hn);
    for (const auto& [u, v] : h.edges())
        edges.emplace_back(u + gn, v + gn);
    for (int u = 0; u < gn; ++u)
        for (int v = 0; v < hn; ++v)
            edges.emplace_back(u, gn + v);
    return Graph(gn + hn, std::move(edges));
}

Graph complement(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int v = s[i];
        if (v < 0 || v >= g.vertex_count())
            throw error(errc::out_of_range, "vertex " + std::to_string(v) + " out of range");
        if (pos[v] != -1)
            throw error(errc::out_of_range, "vertex " + std::to_string(v) + " repeated");
        pos[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (pos[u] != -1 && pos[v] != -1)
            edges.emplace_back(pos[u], pos[v]);
    return Graph(static_cast<int>(s.size()), std::move(edges));
}

Graph delete_vertex(const Graph& g, int v)
{
    VertexSet keep;
    keep.reserve(g.vertex_count() - 1);
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v)
            keep.push_back(u);
    return induced_subgraph(g, keep);
}

IdentifyResult identify_vertices(const Graph& g, const std::vector<VertexSet>& classes)
{
    const int n = g.vertex_count();
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::vector<bool> used(n, false);
    for (const auto& cls : classes) {
        if (cls.empty())
            continue;
        int r = *std::min_element(cls.begin(), cls.end());
        for (int v : cls) {
            if (v < 0 || v >= n)
                throw error(errc::out_of_range, "class vertex out of range");
            if (used[v])
                throw error(errc::precondition, "classes not pairwise disjoint");
            used[v] = true;
            rep[v] = r;
        }
    }

    // new ids in increasing order of class representative
    std::vector<int> new_id(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (rep[v] == v)
            new_id[v] = next++;
    std::vector<int> vertex_map(n);
    for (int v = 0; v < n; ++v)
        vertex_map[v] = new_id[rep[v]];

    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        int a = vertex_map[u], b = vertex_map[v];
        if (a == b)
            throw error(errc::loop_created,
                "merged adjacent vertices " + std::to_string(u) + "," + std::to_string(v));
        if (a > b)
            std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return IdentifyResult{Graph(next, std::move(edges)), std::move(vertex_map)};
}

std::vector<Triangle> enumerate_triangles(const Graph& g)
{
    std::vector<Triangle> out;
    for (const auto& [u, v] : g.edges()) {
        // common neighbours above v close a triangle exactly once
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        auto iu = std::upper_bound(nu.begin(), nu.end(), v);
        auto iv = std::upper_bound(nv.begin(), nv.end(), v);
        while (iu != nu.end() && iv != nv.end()) {
            if (*iu < *iv)
                ++iu;
            else if (*iv < *iu)
                ++iv;
            else {
                out.push_back({u, v, *iu});
                ++iu;
                ++iv;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Triangle& x, const Triangle& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    return out;
}

std::vector<InducedP3> enumerate_induced_p3(const Graph& g)
{
    std::vector<InducedP3> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j]))
                    out.push_back({nb[i], v, nb[j]});
    }
    std::sort(out.begin(), out.end(), [](const InducedP3& x, const InducedP3& y) {
        return std::tie(x.u, x.v, x.w) < std::tie(y.u, y.v, y.w);
    });
    return out;
}

bool is_clique(const Graph& g)
{
    const long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_independent(const Graph& g)
{
    return g.edge_count() == 0;
}

bool is_triangle_free(const Graph& g)
{
    for (const auto& [u, v] : g.edges()) {
        const auto& nu = g.neighbors(u);
        for (int w : nu)
            if (w != v && g.adjacent(v, w))
                return false;
    }
    return true;
}

bool is_cluster(const Graph& g)
{
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j]))
                    return false;
    }
    return true;
}

bool is_bipartite(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

    const Graph& pattern_2k2()
    {
        static const Graph g = make_graph(4, {{0, 1}, {2, 3}});
        return g;
    }

    const Graph& pattern_c4()
    {
        static const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        return g;
    }

    const Graph& pattern_c5()
    {
        static const Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        return g;
    }

    const Graph& pattern_p4()
    {
        static const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
        return g;
    }

} // namespace

bool is_split(const Graph& g)
{
    return !contains_induced(g, pattern_2k2()) && !contains_induced(g, pattern_c4())
        && !contains_induced(g, pattern_c5());
}

bool is_threshold(const Graph& g)
{
    return !contains_induced(g, pattern_2k2()) && !contains_induced(g, pattern_c4())
        && !contains_induced(g, pattern_p4());
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        std::queue<int> q;
        q.push(s);
        out[id].push_back(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (comp[v] == -1) {
                    comp[v] = id;
                    out[id].push_back(v);
                    q.push(v);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

bool co_connected(const Graph& g)
{
    return is_connected(complement(g));
}

std::vector<int> bfs_distances(const Graph& g, int src)
{
    std::vector<int> dist(g.vertex_count(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

namespace {

    // Grow chordless paths from a fixed start vertex. Every vertex on the path
    // is larger than the start; a new vertex may touch only the path's last
    // vertex, except that touching the start closes an induced cycle.
    struct CycleSearch {
        const Graph& g;
        int max_len;
        std::vector<int> path;
        std::vector<bool> on_path;
        std::vector<std::vector<int>>& out;

        void extend()
        {
            const int start = path[0];
            const int last = path.back();
            for (int u : g.neighbors(last)) {
                if (u <= start || on_path[u])
                    continue;
                bool chord = false;
                bool closes = false;
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    if (g.adjacent(u, path[i])) {
                        if (i == 0)
                            closes = true;
                        else {
                            chord = true;
                            break;
                        }
                    }
                }
                if (chord)
                    continue;
                if (closes) {
                    if (path.size() + 1 >= 4 && path[1] < u) {
                        auto cycle = path;
                        cycle.push_back(u);
                        out.push_back(std::move(cycle));
                    }
                    continue; // extending past u would leave the chord u-start
                }
                if (static_cast<int>(path.size()) + 1 >= max_len)
                    continue;
                path.push_back(u);
                on_path[u] = true;
                extend();
                on_path[u] = false;
                path.pop_back();
            }
        }
    };

} // namespace

std::vector<std::vector<int>> find_induced_cycles_up_to(const Graph& g, int max_len)
{
    if (max_len < 4)
        throw error(errc::precondition, "cycle length bound must be at least 4");
    std::vector<std::vector<int>> out;
    CycleSearch search{g, max_len, {}, std::vector<bool>(g.vertex_count(), false), out};
    for (int s = 0; s < g.vertex_count(); ++s) {
        search.path = {s};
        search.on_path.assign(g.vertex_count(), false);
        search.on_path[s] = true;
        search.extend();
    }
    return out;
}

} // namespace partilab
