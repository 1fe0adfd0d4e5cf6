#include "partilab/embedding.hpp"

#include <algorithm>
#include <numeric>

namespace partilab {

namespace {

    struct Backtracker {
        const Graph& host;
        const Graph& pattern;
        std::vector<int> order;  // pattern vertices, connectivity-first
        std::vector<int> map;    // pattern -> host, -1 unassigned
        std::vector<bool> taken; // host vertices in use

        bool place(std::size_t depth)
        {
            if (depth == order.size())
                return true;
            const int p = order[depth];
            for (int h = 0; h < host.vertex_count(); ++h) {
                if (taken[h] || pattern.degree(p) > host.degree(h))
                    continue;
                bool ok = true;
                for (std::size_t i = 0; i < depth; ++i) {
                    const int q = order[i];
                    if (pattern.adjacent(p, q) != host.adjacent(h, map[q])) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    continue;
                map[p] = h;
                taken[h] = true;
                if (place(depth + 1))
                    return true;
                taken[h] = false;
                map[p] = -1;
            }
            return false;
        }
    };

    // Order pattern vertices so each one (where possible) touches an already
    // placed vertex; ties by higher degree, then lower id. Keeps the search
    // anchored and the result deterministic.
    std::vector<int> search_order(const Graph& pattern)
    {
        const int n = pattern.vertex_count();
        std::vector<int> order;
        std::vector<bool> placed(n, false);
        std::vector<int> attach(n, 0);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v])
                    continue;
                if (best == -1 || attach[v] > attach[best]
                    || (attach[v] == attach[best] && pattern.degree(v) > pattern.degree(best)))
                    best = v;
            }
            placed[best] = true;
            order.push_back(best);
            for (int u : pattern.neighbors(best))
                ++attach[u];
        }
        return order;
    }

} // namespace

bool is_embedding(const Graph& host, const Graph& pattern, const Embedding& emb)
{
    if (static_cast<int>(emb.size()) != pattern.vertex_count())
        return false;
    std::vector<bool> seen(host.vertex_count(), false);
    for (int h : emb) {
        if (h < 0 || h >= host.vertex_count() || seen[h])
            return false;
        seen[h] = true;
    }
    for (int u = 0; u < pattern.vertex_count(); ++u)
        for (int v = u + 1; v < pattern.vertex_count(); ++v)
            if (pattern.adjacent(u, v) != host.adjacent(emb[u], emb[v]))
                return false;
    return true;
}

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern)
{
    if (pattern.vertex_count() > host.vertex_count())
        return std::nullopt;
    if (pattern.vertex_count() == 0)
        return Embedding{};
    Backtracker bt{host, pattern, search_order(pattern),
        std::vector<int>(pattern.vertex_count(), -1),
        std::vector<bool>(host.vertex_count(), false)};
    if (!bt.place(0))
        return std::nullopt;
    // contract: an embedding is re-verified before it is returned
    if (!is_embedding(host, pattern, bt.map))
        return std::nullopt;
    return bt.map;
}

bool is_isomorphic(const Graph& a, const Graph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return contains_induced(b, a).has_value();
}

} // namespace partilab
