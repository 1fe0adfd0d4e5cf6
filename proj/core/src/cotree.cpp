#include "partilab/cotree.hpp"

#include "partilab/errors.hpp"
#include "partilab/rng.hpp"

#include <algorithm>
#include <numeric>

namespace partilab {

Cotree Cotree::leaf(int v)
{
    Cotree t;
    t.kind = Kind::leaf;
    t.vertex = v;
    return t;
}

Cotree Cotree::make_union(std::vector<Cotree> children)
{
    if (children.size() < 2)
        throw error(errc::precondition, "union node needs at least two children");
    Cotree t;
    t.kind = Kind::cunion;
    t.children = std::move(children);
    return t;
}

Cotree Cotree::make_join(std::vector<Cotree> children)
{
    if (children.size() < 2)
        throw error(errc::precondition, "join node needs at least two children");
    Cotree t;
    t.kind = Kind::join;
    t.children = std::move(children);
    return t;
}

int Cotree::leaf_count() const
{
    if (kind == Kind::leaf)
        return 1;
    int total = 0;
    for (const auto& c : children)
        total += c.leaf_count();
    return total;
}

namespace {

    // First induced P4 in the subgraph spanned by `ids`, in original ids.
    P4Witness find_p4(const Graph& g, const VertexSet& ids)
    {
        const int k = static_cast<int>(ids.size());
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                if (b == a || !g.adjacent(ids[a], ids[b]))
                    continue;
                for (int c = 0; c < k; ++c) {
                    if (c == a || c == b)
                        continue;
                    if (!g.adjacent(ids[b], ids[c]) || g.adjacent(ids[a], ids[c]))
                        continue;
                    for (int d = a + 1; d < k; ++d) {
                        if (d == b || d == c)
                            continue;
                        if (g.adjacent(ids[c], ids[d]) && !g.adjacent(ids[a], ids[d])
                            && !g.adjacent(ids[b], ids[d]))
                            return P4Witness{{ids[a], ids[b], ids[c], ids[d]}};
                    }
                }
            }
        throw error(errc::precondition, "indecomposable part without induced path on four vertices");
    }

    std::vector<VertexSet> components_within(const Graph& g, const VertexSet& ids, bool in_complement)
    {
        std::vector<int> stack;
        std::vector<bool> in_set(g.vertex_count(), false);
        std::vector<bool> seen(g.vertex_count(), false);
        for (int v : ids)
            in_set[v] = true;
        std::vector<VertexSet> comps;
        for (int s : ids) {
            if (seen[s])
                continue;
            VertexSet comp;
            seen[s] = true;
            stack.push_back(s);
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                comp.push_back(u);
                for (int v : ids) {
                    if (seen[v])
                        continue;
                    const bool adj = g.adjacent(u, v);
                    if (adj != in_complement) {
                        seen[v] = true;
                        stack.push_back(v);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    CographResult decompose(const Graph& g, const VertexSet& ids)
    {
        if (ids.size() == 1)
            return Cotree::leaf(ids[0]);

        auto comps = components_within(g, ids, false);
        if (comps.size() > 1) {
            std::vector<Cotree> children;
            for (const auto& comp : comps) {
                auto sub = decompose(g, comp);
                if (std::holds_alternative<P4Witness>(sub))
                    return sub;
                children.push_back(std::get<Cotree>(std::move(sub)));
            }
            return Cotree::make_union(std::move(children));
        }

        auto co_comps = components_within(g, ids, true);
        if (co_comps.size() > 1) {
            std::vector<Cotree> children;
            for (const auto& comp : co_comps) {
                auto sub = decompose(g, comp);
                if (std::holds_alternative<P4Witness>(sub))
                    return sub;
                children.push_back(std::get<Cotree>(std::move(sub)));
            }
            return Cotree::make_join(std::move(children));
        }

        return find_p4(g, ids);
    }

} // namespace

CographResult cotree_of(const Graph& g)
{
    if (g.vertex_count() == 0)
        throw error(errc::precondition, "empty graph has no cotree");
    VertexSet all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return decompose(g, all);
}

bool is_cograph(const Graph& g)
{
    return std::holds_alternative<Cotree>(cotree_of(g));
}

namespace {

    void collect_leaves(const Cotree& t, VertexSet& out)
    {
        if (t.kind == Cotree::Kind::leaf) {
            out.push_back(t.vertex);
            return;
        }
        for (const auto& c : t.children)
            collect_leaves(c, out);
    }

    void collect_edges(const Cotree& t, std::vector<Edge>& edges)
    {
        if (t.kind == Cotree::Kind::leaf)
            return;
        std::vector<VertexSet> leaves(t.children.size());
        for (std::size_t i = 0; i < t.children.size(); ++i)
            collect_leaves(t.children[i], leaves[i]);
        if (t.kind == Cotree::Kind::join)
            for (std::size_t i = 0; i < t.children.size(); ++i)
                for (std::size_t j = i + 1; j < t.children.size(); ++j)
                    for (int u : leaves[i])
                        for (int v : leaves[j])
                            edges.emplace_back(std::min(u, v), std::max(u, v));
        for (const auto& c : t.children)
            collect_edges(c, edges);
    }

} // namespace

Graph cotree_to_graph(const Cotree& t)
{
    VertexSet leaves;
    collect_leaves(t, leaves);
    VertexSet sorted = leaves;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i))
            throw error(errc::precondition, "cotree leaves must be a permutation of 0..n-1");
    std::vector<Edge> edges;
    collect_edges(t, edges);
    return Graph(static_cast<int>(leaves.size()), std::move(edges));
}

namespace {

    // Random composition of n into at least two parts, by a uniformly chosen
    // nonempty subset of the n-1 gaps.
    std::vector<int> random_composition(int n, Rng& rng)
    {
        std::vector<int> parts;
        while (parts.size() < 2) {
            parts.clear();
            int run = 1;
            for (int gap = 1; gap < n; ++gap) {
                if (rng.chance(0.5)) {
                    parts.push_back(run);
                    run = 1;
                } else {
                    ++run;
                }
            }
            parts.push_back(run);
        }
        return parts;
    }

    Cotree random_tree(int n, bool join_node, int& next_leaf, Rng& rng)
    {
        if (n == 1)
            return Cotree::leaf(next_leaf++);
        std::vector<int> parts = random_composition(n, rng);
        std::vector<Cotree> children;
        children.reserve(parts.size());
        for (int size : parts)
            children.push_back(random_tree(size, !join_node, next_leaf, rng));
        return join_node ? Cotree::make_join(std::move(children))
                         : Cotree::make_union(std::move(children));
    }

} // namespace

Graph random_cograph(int n, std::uint64_t seed)
{
    if (n < 1)
        throw error(errc::precondition, "need at least one vertex");
    Rng rng(seed);
    if (n == 1)
        return Graph(1, {});
    int next_leaf = 0;
    Cotree t = random_tree(n, rng.chance(0.5), next_leaf, rng);
    return cotree_to_graph(t);
}

} // namespace partilab
