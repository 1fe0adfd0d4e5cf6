#include "partilab/ladder.hpp"

#include "partilab/errors.hpp"

namespace partilab {

Ladder build_ladder(int rungs, const NegatorSpec& rung_kind, const NegatorSpec& rail_kind)
{
    if (rungs < 1)
        throw error(errc::precondition, "ladder needs at least one rung");
    // top u_j = j-1, bottom v_j = rungs + j - 1 (1-based j)
    DashedSkeleton sk;
    sk.n = 2 * rungs;
    for (int j = 0; j < rungs; ++j)
        sk.dashed.push_back({j, rungs + j, rung_kind});
    for (int j = 0; j + 1 < rungs; ++j) {
        sk.dashed.push_back({j, j + 1, rail_kind});
        sk.dashed.push_back({rungs + j, rungs + j + 1, rail_kind});
    }
    auto expanded = expand_dashed(sk);

    Ladder out;
    out.graph = std::move(expanded.graph);
    for (int j = 1; j <= rungs; ++j) {
        const int top = expanded.vertex_map[j - 1];
        const int bottom = expanded.vertex_map[rungs + j - 1];
        if (j % 2 == 1)
            out.rungs.emplace_back(top, bottom);
        else
            out.rungs.emplace_back(bottom, top);
    }
    return out;
}

} // namespace partilab
