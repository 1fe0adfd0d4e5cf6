#pragma once

#include "partilab/graph.hpp"

#include <optional>
#include <vector>

namespace partilab {

// Injective map pattern vertex -> host vertex preserving both edges and
// non-edges (induced embedding).
using Embedding = std::vector<int>;

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern);

bool is_embedding(const Graph& host, const Graph& pattern, const Embedding& emb);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace partilab
