#include "partilab/negators.hpp"

#include "partilab/catalog.hpp"
#include "partilab/errors.hpp"

#include <algorithm>

namespace partilab {

std::string to_string(const NegatorSpec& spec)
{
    switch (spec.kind) {
    case NegatorKind::octahedron: return "octahedron";
    case NegatorKind::p62: return "p62";
    case NegatorKind::two_wheel: return "two-wheel";
    case NegatorKind::sun: return "sun";
    case NegatorKind::bullfree: return "bullfree";
    case NegatorKind::strong_triangle:
        return "strong-tri(" + to_string(NegatorSpec::plain(spec.base)) + ")";
    case NegatorKind::strong_square:
        return "strong-sq(" + to_string(NegatorSpec::plain(spec.base)) + ")";
    }
    return "?";
}

std::optional<NegatorSpec> negator_from_string(const std::string& name)
{
    if (name == "octahedron")
        return NegatorSpec::plain(NegatorKind::octahedron);
    if (name == "p62")
        return NegatorSpec::plain(NegatorKind::p62);
    if (name == "two-wheel" || name == "two_wheel")
        return NegatorSpec::plain(NegatorKind::two_wheel);
    if (name == "sun")
        return NegatorSpec::plain(NegatorKind::sun);
    if (name == "bullfree")
        return NegatorSpec::plain(NegatorKind::bullfree);
    if (name == "strong-tri" || name == "strong_tri")
        return NegatorSpec::strong_tri();
    if (name == "strong-sq" || name == "strong_sq")
        return NegatorSpec::strong_sq();
    return std::nullopt;
}

namespace {

    NegatorInstance from_gadget(catalog::Gadget gadget, const NegatorSpec& spec)
    {
        return {std::move(gadget.graph), gadget.endpoints[0], gadget.endpoints[1], spec};
    }

    DashedSkeleton uniform_skeleton(const catalog::Skeleton& sk, const NegatorSpec& kind)
    {
        DashedSkeleton out;
        out.n = sk.n;
        out.plain = sk.plain;
        for (const auto& [u, v] : sk.dashed)
            out.dashed.push_back({u, v, kind});
        return out;
    }

} // namespace

NegatorInstance instantiate_negator(const NegatorSpec& spec)
{
    switch (spec.kind) {
    case NegatorKind::octahedron:
        return from_gadget(catalog::octahedron(), spec);
    case NegatorKind::p62:
        return from_gadget(catalog::p62_component(), spec);
    case NegatorKind::two_wheel:
        return from_gadget(catalog::two_wheel(), spec);
    case NegatorKind::sun:
        return from_gadget(catalog::sun_component(), spec);
    case NegatorKind::bullfree:
        return from_gadget(catalog::bullfree_component(), spec);
    case NegatorKind::strong_triangle: {
        const catalog::Skeleton sk = catalog::strong_triangle_skeleton();
        auto expanded = expand_dashed(uniform_skeleton(sk, NegatorSpec::plain(spec.base)));
        return {std::move(expanded.graph), expanded.vertex_map[sk.endpoints[0]],
            expanded.vertex_map[sk.endpoints[1]], spec};
    }
    case NegatorKind::strong_square: {
        const catalog::Skeleton sk = catalog::strong_square_skeleton();
        auto expanded = expand_dashed(uniform_skeleton(sk, NegatorSpec::plain(spec.base)));
        return {std::move(expanded.graph), expanded.vertex_map[sk.endpoints[0]],
            expanded.vertex_map[sk.endpoints[1]], spec};
    }
    }
    throw error(errc::unknown_kind, "unknown negator kind");
}

ExpandResult expand_dashed(const DashedSkeleton& sk)
{
    for (const auto& d : sk.dashed)
        if (d.u < 0 || d.u >= sk.n || d.v < 0 || d.v >= sk.n)
            throw error(errc::out_of_range, "dashed edge out of range");

    // union of the skeleton and all negator copies, then endpoint merges;
    // skeleton vertices come first so they keep their ids in the quotient
    Graph combined(sk.n, sk.plain);
    std::vector<VertexSet> classes(sk.n);
    for (int v = 0; v < sk.n; ++v)
        classes[v].push_back(v);
    for (const auto& d : sk.dashed) {
        const NegatorInstance copy = instantiate_negator(d.kind);
        const int offset = combined.vertex_count();
        combined = disjoint_union(combined, copy.graph);
        classes[d.u].push_back(offset + copy.x);
        classes[d.v].push_back(offset + copy.y);
    }
    auto merged = identify_vertices(combined, classes);
    ExpandResult out;
    out.graph = std::move(merged.graph);
    out.vertex_map.assign(merged.vertex_map.begin(), merged.vertex_map.begin() + sk.n);
    return out;
}

namespace {

    bool feasible(const Graph& g, const ForcedColors& forced)
    {
        return decide_partition(g, forced).has_value();
    }

    // exactly-one pattern: `colored` endpoint takes the colour, the other is
    // blue or red accordingly; the blue one must have no blue neighbour
    bool clean_single(const Graph& g, int colored, int other, Color color)
    {
        const Color opposite = color == Color::red ? Color::blue : Color::red;
        ForcedColors forced = {{colored, color}, {other, opposite}};
        const int blue_endpoint = color == Color::blue ? colored : other;
        for (int nb : g.neighbors(blue_endpoint))
            if (nb != colored && nb != other)
                forced.emplace_back(nb, Color::red);
        return feasible(g, forced);
    }

} // namespace

NegatorReport verify_negator(const NegatorInstance& inst, Color color)
{
    const Color opposite = color == Color::red ? Color::blue : Color::red;
    NegatorReport report;
    report.both_forced_infeasible
        = !feasible(inst.graph, {{inst.x, color}, {inst.y, color}});
    report.single_realizable = feasible(inst.graph, {{inst.x, opposite}, {inst.y, opposite}})
        || feasible(inst.graph, {{inst.x, color}, {inst.y, opposite}})
        || feasible(inst.graph, {{inst.x, opposite}, {inst.y, color}});
    report.clean_xy = clean_single(inst.graph, inst.x, inst.y, color);
    report.clean_yx = clean_single(inst.graph, inst.y, inst.x, color);
    return report;
}

} // namespace partilab
