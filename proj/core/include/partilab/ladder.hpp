#pragma once

#include "partilab/negators.hpp"

#include <utility>
#include <vector>

namespace partilab {

// Truth-assignment ladder: rungs u_j - v_j and rails along both sides, every
// edge expanded into a negator copy. Rung endpoints are exposed alternating
// (x_j on top for odd j, bottom for even j) so that all x_j fall in one
// colour class and form an independent set, and likewise the y_j.
struct Ladder {
    Graph graph;
    std::vector<std::pair<int, int>> rungs; // (x_j, y_j) for j = 1..m
};

Ladder build_ladder(int rungs, const NegatorSpec& rung_kind, const NegatorSpec& rail_kind);

} // namespace partilab
