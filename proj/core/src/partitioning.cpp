#include "partilab/partitioning.hpp"

#include "partilab/cotree.hpp"
#include "partilab/errors.hpp"

#include <algorithm>

namespace partilab {

VertexSet Partition::side(Color c) const
{
    VertexSet out;
    for (std::size_t v = 0; v < color.size(); ++v)
        if (color[v] == c)
            out.push_back(static_cast<int>(v));
    return out;
}

VerifyResult verify_partition(const Graph& g, const Partition& p)
{
    if (static_cast<int>(p.color.size()) != g.vertex_count())
        throw error(errc::size_mismatch, "partition does not cover the graph");
    for (const auto& t : enumerate_triangles(g))
        if (p.color[t.a] == Color::red && p.color[t.b] == Color::red
            && p.color[t.c] == Color::red)
            return {false, Violation{Color::red, t.a, t.b, t.c}};
    for (const auto& t : enumerate_induced_p3(g))
        if (p.color[t.u] == Color::blue && p.color[t.v] == Color::blue
            && p.color[t.w] == Color::blue)
            return {false, Violation{Color::blue, t.u, t.v, t.w}};
    return {true, std::nullopt};
}

CnfFormula encode_partition(const Graph& g)
{
    CnfFormula f;
    f.num_vars = g.vertex_count();
    for (const auto& t : enumerate_triangles(g))
        f.add_clause({-(t.a + 1), -(t.b + 1), -(t.c + 1)});
    for (const auto& t : enumerate_induced_p3(g))
        f.add_clause({t.u + 1, t.v + 1, t.w + 1});
    return f;
}

namespace {

    std::vector<int> forced_literals(const Graph& g, const ForcedColors& forced)
    {
        std::vector<int> lits;
        lits.reserve(forced.size());
        for (const auto& [v, c] : forced) {
            if (v < 0 || v >= g.vertex_count())
                throw error(errc::out_of_range, "forced vertex out of range");
            lits.push_back(c == Color::red ? v + 1 : -(v + 1));
        }
        return lits;
    }

    Partition from_assignment(const Graph& g, const Assignment& a)
    {
        Partition p;
        p.color.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            p.color[v] = a(v + 1) ? Color::red : Color::blue;
        return p;
    }

} // namespace

std::optional<Partition> decide_partition(const Graph& g, const ForcedColors& forced,
    SolveStats* stats)
{
    const CnfFormula f = encode_partition(g);
    const std::vector<int> lits = forced_literals(g, forced);
    auto model = dpll(f, lits, stats);
    if (!model)
        return std::nullopt;
    Partition p = from_assignment(g, *model);
    if (!verify_partition(g, p).ok)
        throw error(errc::precondition, "solver returned an invalid certificate");
    return p;
}

std::optional<Partition> brute_force_partition(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 22)
        throw error(errc::too_large, "brute force capped at 22 vertices");
    if (n == 0)
        return Partition{};

    // vertex v maps to mask bit n-1-v so counting masks upward walks color
    // strings in lexicographic order with red (0) preferred
    const auto vbit = [n](int v) { return 1u << (n - 1 - v); };
    std::vector<unsigned> triangle_masks, p3_masks;
    for (const auto& t : enumerate_triangles(g))
        triangle_masks.push_back(vbit(t.a) | vbit(t.b) | vbit(t.c));
    for (const auto& t : enumerate_induced_p3(g))
        p3_masks.push_back(vbit(t.u) | vbit(t.v) | vbit(t.w));

    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (unsigned tm : triangle_masks)
            if ((mask & tm) == 0) { // all three red
                ok = false;
                break;
            }
        if (!ok)
            continue;
        for (unsigned pm : p3_masks)
            if ((mask & pm) == pm) { // all three blue
                ok = false;
                break;
            }
        if (!ok)
            continue;
        Partition p;
        p.color.resize(n);
        for (int v = 0; v < n; ++v)
            p.color[v] = (mask & vbit(v)) ? Color::blue : Color::red;
        return p;
    }
    return std::nullopt;
}

bool verify_monopolar(const Graph& g, const Partition& p)
{
    if (static_cast<int>(p.color.size()) != g.vertex_count())
        throw error(errc::size_mismatch, "partition does not cover the graph");
    for (const auto& [u, v] : g.edges())
        if (p.color[u] == Color::red && p.color[v] == Color::red)
            return false;
    for (const auto& t : enumerate_induced_p3(g))
        if (p.color[t.u] == Color::blue && p.color[t.v] == Color::blue
            && p.color[t.w] == Color::blue)
            return false;
    return true;
}

std::optional<Partition> decide_monopolar(const Graph& g)
{
    CnfFormula f;
    f.num_vars = g.vertex_count();
    for (const auto& [u, v] : g.edges())
        f.add_clause({-(u + 1), -(v + 1)});
    for (const auto& t : enumerate_induced_p3(g))
        f.add_clause({t.u + 1, t.v + 1, t.w + 1});
    auto model = dpll(f);
    if (!model)
        return std::nullopt;
    Partition p = from_assignment(g, *model);
    if (!verify_monopolar(g, p))
        throw error(errc::precondition, "solver returned an invalid certificate");
    return p;
}

bool decide_12_cograph(const Graph& g)
{
    if (!is_cograph(g))
        throw error(errc::not_a_cograph, "the one-clique-two-stable decision needs a cograph");
    // variable v+1 true = vertex in the clique part
    CnfFormula f;
    f.num_vars = g.vertex_count();
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v))
                f.add_clause({-(u + 1), -(v + 1)});
    for (const auto& t : enumerate_triangles(g))
        f.add_clause({t.a + 1, t.b + 1, t.c + 1});
    return dpll(f).has_value();
}

bool decide_21_cograph(const Graph& g)
{
    return decide_12_cograph(complement(g));
}

} // namespace partilab
