#pragma once

#include "partilab/cnf.hpp"
#include "partilab/dpll.hpp"
#include "partilab/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace partilab {

// Red = triangle-free side, Blue = cluster (P3-free) side.
enum class Color : unsigned char { red, blue };

struct Partition {
    std::vector<Color> color;

    VertexSet side(Color c) const;
};

struct Violation {
    // all-red triangle or all-blue induced P3
    Color side;
    int a, b, c;
};

struct VerifyResult {
    bool ok;
    std::optional<Violation> violation;
};

VerifyResult verify_partition(const Graph& g, const Partition& p);

// One clause per triangle (not all red) and per induced P3 (not all blue);
// variable v+1 is true when vertex v is red. Models are exactly the valid
// partitions.
CnfFormula encode_partition(const Graph& g);

using ForcedColors = std::vector<std::pair<int, Color>>;

std::optional<Partition> decide_partition(const Graph& g, const ForcedColors& forced = {},
    SolveStats* stats = nullptr);

// Exhaustive oracle, lexicographic over color strings with red < blue.
std::optional<Partition> brute_force_partition(const Graph& g);

// Red independent set, blue disjoint cliques.
std::optional<Partition> decide_monopolar(const Graph& g);
bool verify_monopolar(const Graph& g, const Partition& p);

// One clique plus two independent sets; the local encoding is only valid on
// cographs, callers get not_a_cograph otherwise.
bool decide_12_cograph(const Graph& g);
bool decide_21_cograph(const Graph& g);

} // namespace partilab
