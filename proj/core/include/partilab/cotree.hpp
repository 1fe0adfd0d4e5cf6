#pragma once

#include "partilab/graph.hpp"

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

namespace partilab {

// Recursive union/join decomposition; leaves carry the graph's vertex ids.
// Canonical form: a union node has no union child, a join node no join child.
struct Cotree {
    enum class Kind { leaf, cunion, join };

    Kind kind = Kind::leaf;
    int vertex = -1;
    std::vector<Cotree> children;

    static Cotree leaf(int v);
    static Cotree make_union(std::vector<Cotree> children);
    static Cotree make_join(std::vector<Cotree> children);

    int leaf_count() const;
};

struct P4Witness {
    std::array<int, 4> path; // consecutive vertices adjacent, rest not
};

using CographResult = std::variant<Cotree, P4Witness>;

CographResult cotree_of(const Graph& g);
bool is_cograph(const Graph& g);

// Inverse of cotree_of up to equality: leaves place vertices at their own ids.
Graph cotree_to_graph(const Cotree& t);

// Deterministic for a fixed seed; output always passes cotree_of.
Graph random_cograph(int n, std::uint64_t seed);

} // namespace partilab
