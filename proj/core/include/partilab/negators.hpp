#pragma once

#include "partilab/graph.hpp"
#include "partilab/partitioning.hpp"

#include <optional>
#include <string>
#include <vector>

namespace partilab {

// A blue negator admits no partition with both endpoints blue; a red negator
// none with both endpoints red. Strong negators are both at once and are
// assembled from base negators via a dashed skeleton.
enum class NegatorKind {
    octahedron,
    p62,
    two_wheel,
    sun,
    bullfree,
    strong_triangle,
    strong_square,
};

struct NegatorSpec {
    NegatorKind kind;
    NegatorKind base = NegatorKind::p62; // only read for the strong kinds

    static NegatorSpec plain(NegatorKind k) { return {k, NegatorKind::p62}; }
    static NegatorSpec strong_tri(NegatorKind base = NegatorKind::p62)
    {
        return {NegatorKind::strong_triangle, base};
    }
    static NegatorSpec strong_sq(NegatorKind base = NegatorKind::sun)
    {
        return {NegatorKind::strong_square, base};
    }
};

std::string to_string(const NegatorSpec& spec);
std::optional<NegatorSpec> negator_from_string(const std::string& name);

struct NegatorInstance {
    Graph graph;
    int x = -1;
    int y = -1;
    NegatorSpec spec{NegatorKind::p62};
};

NegatorInstance instantiate_negator(const NegatorSpec& spec);

struct DashedSkeleton {
    struct DashedEdge {
        int u, v;
        NegatorSpec kind;
    };

    int n = 0;
    std::vector<Edge> plain;
    std::vector<DashedEdge> dashed;
};

struct ExpandResult {
    Graph graph;
    std::vector<int> vertex_map; // skeleton id -> output id (the identity here)
};

// Replaces each dashed edge by a fresh negator copy whose endpoints are
// identified with the edge's endpoints. Skeleton vertices keep their ids.
ExpandResult expand_dashed(const DashedSkeleton& sk);

struct NegatorReport {
    bool both_forced_infeasible = false; // no partition with both endpoints the colour
    bool single_realizable = false;      // some partition with at most one such endpoint
    bool clean_xy = false;               // x takes the colour, blue endpoint internally clean
    bool clean_yx = false;               // y takes the colour

    bool pass() const
    {
        return both_forced_infeasible && single_realizable && clean_xy && clean_yx;
    }
};

// Exact solver checks of the negator contract for the given colour:
//  (a) forcing both endpoints to the colour is infeasible;
//  (b) some partition has at most one endpoint of the colour;
//  (c) both exactly-one patterns are realizable with the blue endpoint having
//      no blue neighbour inside the gadget (the composability partition).
NegatorReport verify_negator(const NegatorInstance& inst, Color color);

} // namespace partilab
