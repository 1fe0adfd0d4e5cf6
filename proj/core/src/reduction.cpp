#include "partilab/reduction.hpp"

#include "partilab/catalog.hpp"
#include "partilab/embedding.hpp"
#include "partilab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>

namespace partilab {

std::string VariantSpec::name() const
{
    switch (variant) {
    case Variant::generic: return "generic";
    case Variant::planar_shape: return "planar-shape";
    case Variant::k4free: return "k4free";
    case Variant::bullfree: return "bullfree";
    case Variant::holes: return "holes:" + std::to_string(hole_bound);
    case Variant::perfect: return "perfect";
    }
    return "?";
}

std::optional<VariantSpec> variant_from_string(const std::string& name)
{
    if (name == "generic")
        return VariantSpec{Variant::generic, 0};
    if (name == "planar-shape" || name == "planar_shape")
        return VariantSpec{Variant::planar_shape, 0};
    if (name == "k4free")
        return VariantSpec{Variant::k4free, 0};
    if (name == "bullfree")
        return VariantSpec{Variant::bullfree, 0};
    if (name == "perfect")
        return VariantSpec{Variant::perfect, 0};
    if (name.rfind("holes:", 0) == 0) {
        const int k = std::atoi(name.c_str() + 6);
        if (k >= 5)
            return VariantSpec{Variant::holes, k};
    }
    return std::nullopt;
}

NegatorSpec default_negator(const VariantSpec& variant)
{
    switch (variant.variant) {
    case Variant::generic:
    case Variant::planar_shape:
    case Variant::perfect:
    // the hole-sensitive variant needs a hole-free negator; the sun component
    // contains induced 5-cycles, the strong triangle over p62 contains none
    case Variant::holes:
        return NegatorSpec::strong_tri(NegatorKind::p62);
    case Variant::k4free:
        return NegatorSpec::plain(NegatorKind::sun);
    case Variant::bullfree:
        return NegatorSpec::plain(NegatorKind::bullfree);
    }
    return NegatorSpec::strong_tri(NegatorKind::p62);
}

const ReductionOutput::VarTac& ReductionOutput::tac_of(int variable) const
{
    for (const auto& tac : tacs)
        if (tac.variable == variable)
            return tac;
    throw error(errc::out_of_range, "no tac for variable " + std::to_string(variable));
}

namespace {

    struct ClauseVars {
        std::array<int, 3> lits;
    };

    std::vector<ClauseVars> checked_3sat_clauses(const CnfFormula& f)
    {
        std::vector<ClauseVars> out;
        for (std::size_t i = 0; i < f.clauses.size(); ++i) {
            const auto& clause = f.clauses[i];
            if (clause.size() != 3)
                throw error(errc::not_three_sat,
                    "clause " + std::to_string(i + 1) + " does not have three literals");
            const std::array<int, 3> lits = {clause[0], clause[1], clause[2]};
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    if (std::abs(lits[a]) == std::abs(lits[b]))
                        throw error(errc::duplicate_variable_in_clause,
                            "clause " + std::to_string(i + 1) + " repeats variable "
                                + std::to_string(std::abs(lits[a])));
            out.push_back({lits});
        }
        return out;
    }

    std::vector<int> occurring_variables(const std::vector<ClauseVars>& clauses)
    {
        std::vector<int> vars;
        for (const auto& c : clauses)
            for (int l : c.lits)
                vars.push_back(std::abs(l));
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return vars;
    }

    // Shared tac scaffolding: one ladder skeleton per occurring variable, all
    // edges dashed with the chosen negator; junction ids are final ids.
    struct TacLayout {
        DashedSkeleton skeleton;
        std::map<int, int> base; // variable -> first skeleton id of its ladder
        int rungs_per_tac;

        int top(int variable, int rung) const // rung 1-based
        {
            return base.at(variable) + rung - 1;
        }
        int bottom(int variable, int rung) const
        {
            return base.at(variable) + rungs_per_tac + rung - 1;
        }
        int x_vertex(int variable, int rung) const
        {
            return rung % 2 == 1 ? top(variable, rung) : bottom(variable, rung);
        }
        int y_vertex(int variable, int rung) const
        {
            return rung % 2 == 1 ? bottom(variable, rung) : top(variable, rung);
        }
    };

    TacLayout lay_out_tacs(const std::vector<int>& variables, int rungs, const NegatorSpec& kind)
    {
        TacLayout layout;
        layout.rungs_per_tac = rungs;
        layout.skeleton.n = 0;
        for (int var : variables) {
            const int base = layout.skeleton.n;
            layout.base[var] = base;
            layout.skeleton.n += 2 * rungs;
            for (int j = 0; j < rungs; ++j)
                layout.skeleton.dashed.push_back({base + j, base + rungs + j, kind});
            for (int j = 0; j + 1 < rungs; ++j) {
                layout.skeleton.dashed.push_back({base + j, base + j + 1, kind});
                layout.skeleton.dashed.push_back({base + rungs + j, base + rungs + j + 1, kind});
            }
        }
        return layout;
    }

    void record_tacs(ReductionOutput& out, const TacLayout& layout,
        const std::vector<int>& variables, const std::vector<int>& vertex_map)
    {
        for (int var : variables) {
            ReductionOutput::VarTac tac;
            tac.variable = var;
            for (int j = 1; j <= layout.rungs_per_tac; ++j)
                tac.rungs.emplace_back(vertex_map[layout.x_vertex(var, j)],
                    vertex_map[layout.y_vertex(var, j)]);
            out.tacs.push_back(std::move(tac));
        }
    }

} // namespace

ReductionOutput reduce_3sat(const CnfFormula& f, const VariantSpec& variant,
    std::optional<NegatorSpec> negator_override)
{
    if (variant.variant == Variant::perfect)
        throw error(errc::precondition, "the perfect variant reduces from positive 1-in-3 input");
    if (variant.variant == Variant::holes && variant.hole_bound < 5)
        throw error(errc::precondition, "hole bound must be at least 5");

    const auto clauses = checked_3sat_clauses(f);
    const auto variables = occurring_variables(clauses);
    const NegatorSpec negator = negator_override.value_or(default_negator(variant));
    const int m = static_cast<int>(clauses.size());
    const int stride = variant.variant == Variant::holes ? variant.hole_bound : 1;
    const int rungs = std::max(1, stride * m);

    TacLayout layout = lay_out_tacs(variables, rungs, negator);

    // satisfaction test component: a P3 over identified tac vertices, in
    // literal order (end, middle, end)
    std::vector<std::array<int, 3>> stc_ids;
    for (int j = 0; j < m; ++j) {
        std::array<int, 3> ids;
        for (int k = 0; k < 3; ++k) {
            const int lit = clauses[j].lits[k];
            const int rung = (j + 1) * stride;
            ids[k] = lit > 0 ? layout.x_vertex(std::abs(lit), rung)
                             : layout.y_vertex(std::abs(lit), rung);
        }
        layout.skeleton.plain.emplace_back(std::min(ids[0], ids[1]), std::max(ids[0], ids[1]));
        layout.skeleton.plain.emplace_back(std::min(ids[1], ids[2]), std::max(ids[1], ids[2]));
        stc_ids.push_back(ids);
    }

    auto expanded = expand_dashed(layout.skeleton);

    ReductionOutput out;
    out.graph = std::move(expanded.graph);
    out.variant = variant;
    out.negator = negator;
    record_tacs(out, layout, variables, expanded.vertex_map);
    for (int j = 0; j < m; ++j) {
        ReductionOutput::ClauseInfo info;
        for (int k = 0; k < 3; ++k)
            info.stc[k] = expanded.vertex_map[stc_ids[j][k]];
        out.clauses.push_back(info);
    }
    return out;
}

ReductionOutput reduce_1in3(const OneInThreeInstance& inst,
    std::optional<NegatorSpec> negator_override)
{
    std::vector<ClauseVars> clauses;
    for (std::size_t i = 0; i < inst.clauses.size(); ++i) {
        const auto& c = inst.clauses[i];
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
            throw error(errc::invalid_instance,
                "clause " + std::to_string(i + 1) + " repeats a variable");
        for (int v : c)
            if (v < 1 || v > inst.num_vars)
                throw error(errc::invalid_instance, "variable out of range");
        clauses.push_back({{c[0], c[1], c[2]}});
    }
    const auto variables = occurring_variables(clauses);
    const NegatorSpec negator
        = negator_override.value_or(default_negator(VariantSpec{Variant::perfect, 0}));
    const int m = static_cast<int>(clauses.size());
    const int rungs = std::max(1, m);

    TacLayout layout = lay_out_tacs(variables, rungs, negator);

    // rung used by each literal = occurrence index of its variable
    std::map<int, int> occurrences;
    const catalog::Skeleton literal_sk = catalog::literal_gadget_skeleton();
    const catalog::Skeleton prop_sk = catalog::propagator_gadget_skeleton();

    std::vector<std::array<int, 3>> literal_ids, prop_ids;
    for (int j = 0; j < m; ++j) {
        std::array<int, 3> xs, ys;
        for (int k = 0; k < 3; ++k) {
            const int var = clauses[j].lits[k];
            const int occ = ++occurrences[var];
            xs[k] = layout.x_vertex(var, occ);
            ys[k] = layout.y_vertex(var, occ);
        }
        literal_ids.push_back(xs);
        prop_ids.push_back(ys);

        // splice one literal gadget onto the x vertices and one propagator
        // onto the y vertices; skeleton endpoints map to the tac junctions
        const auto splice = [&](const catalog::Skeleton& sk, const std::array<int, 3>& targets) {
            std::vector<int> ids(sk.n, -1);
            for (int k = 0; k < 3; ++k)
                ids[sk.endpoints[k]] = targets[k];
            for (int v = 0; v < sk.n; ++v)
                if (ids[v] == -1) {
                    ids[v] = layout.skeleton.n;
                    ++layout.skeleton.n;
                }
            for (const auto& [u, v] : sk.plain)
                layout.skeleton.plain.emplace_back(std::min(ids[u], ids[v]),
                    std::max(ids[u], ids[v]));
            for (const auto& [u, v] : sk.dashed)
                layout.skeleton.dashed.push_back({ids[u], ids[v], negator});
        };
        splice(literal_sk, xs);
        splice(prop_sk, ys);
    }

    auto expanded = expand_dashed(layout.skeleton);

    ReductionOutput out;
    out.graph = std::move(expanded.graph);
    out.variant = VariantSpec{Variant::perfect, 0};
    out.negator = negator;
    record_tacs(out, layout, variables, expanded.vertex_map);
    for (int j = 0; j < m; ++j) {
        ReductionOutput::ClauseInfo info;
        for (int k = 0; k < 3; ++k) {
            info.stc[k] = expanded.vertex_map[literal_ids[j][k]];
            info.propagator[k] = expanded.vertex_map[prop_ids[j][k]];
        }
        out.clauses.push_back(info);
    }
    return out;
}

void write_mapping(std::ostream& out, const ReductionOutput& r)
{
    for (const auto& tac : r.tacs)
        for (std::size_t j = 0; j < tac.rungs.size(); ++j)
            out << "var " << tac.variable << " rung " << j + 1 << " x " << tac.rungs[j].first
                << " y " << tac.rungs[j].second << '\n';
    for (std::size_t j = 0; j < r.clauses.size(); ++j) {
        const auto& c = r.clauses[j];
        out << "clause " << j + 1 << " stc " << c.stc[0] << ' ' << c.stc[1] << ' ' << c.stc[2]
            << '\n';
        if (c.propagator[0] >= 0)
            out << "clause " << j + 1 << " prop " << c.propagator[0] << ' ' << c.propagator[1]
                << ' ' << c.propagator[2] << '\n';
    }
}

namespace {

    ClauseGadget build_clause_gadget(const catalog::Skeleton& sk)
    {
        DashedSkeleton dashed;
        dashed.n = sk.n;
        dashed.plain = sk.plain;
        for (const auto& [u, v] : sk.dashed)
            dashed.dashed.push_back({u, v, NegatorSpec::strong_tri(NegatorKind::p62)});
        auto expanded = expand_dashed(dashed);
        ClauseGadget out;
        out.graph = std::move(expanded.graph);
        for (int k = 0; k < 3; ++k)
            out.endpoints[k] = expanded.vertex_map[sk.endpoints[k]];
        return out;
    }

} // namespace

ClauseGadget build_literal_gadget()
{
    return build_clause_gadget(catalog::literal_gadget_skeleton());
}

ClauseGadget build_propagator_gadget()
{
    return build_clause_gadget(catalog::propagator_gadget_skeleton());
}

namespace {

    std::vector<EndpointPatternResult> endpoint_patterns(const ClauseGadget& gadget)
    {
        std::vector<EndpointPatternResult> out;
        for (int bits = 0; bits < 8; ++bits) {
            EndpointPatternResult r;
            ForcedColors forced;
            for (int k = 0; k < 3; ++k) {
                r.pattern[k] = (bits >> k) & 1 ? Color::blue : Color::red;
                forced.emplace_back(gadget.endpoints[k], r.pattern[k]);
            }
            r.feasible = decide_partition(gadget.graph, forced).has_value();
            out.push_back(r);
        }
        return out;
    }

    int blue_count(const EndpointPatternResult& r)
    {
        int blues = 0;
        for (Color c : r.pattern)
            blues += c == Color::blue ? 1 : 0;
        return blues;
    }

} // namespace

GadgetCountsReport verify_gadget_endpoint_counts()
{
    GadgetCountsReport report;
    report.literal = endpoint_patterns(build_literal_gadget());
    report.propagator = endpoint_patterns(build_propagator_gadget());

    report.literal_ok = true;
    for (const auto& r : report.literal)
        if (r.feasible != (blue_count(r) >= 2)) {
            report.literal_ok = false;
            break;
        }
    report.propagator_ok = true;
    for (const auto& r : report.propagator) {
        const int blues = blue_count(r);
        if (r.feasible != (blues == 1 || blues == 3)) {
            report.propagator_ok = false;
            break;
        }
    }
    return report;
}

namespace {

    std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& f)
    {
        if (f.num_vars > 20)
            throw error(errc::too_large, "brute-force formula verdict capped at 20 variables");
        for (unsigned bits = 0; bits < (1u << f.num_vars); ++bits) {
            std::vector<bool> value(f.num_vars + 1, false);
            for (int v = 1; v <= f.num_vars; ++v)
                value[v] = (bits >> (v - 1)) & 1;
            bool ok = true;
            for (const auto& clause : f.clauses) {
                bool sat = false;
                for (int l : clause)
                    if ((l > 0) == value[std::abs(l)]) {
                        sat = true;
                        break;
                    }
                if (!sat) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                return value;
        }
        return std::nullopt;
    }

    std::optional<std::vector<bool>> brute_force_1in3(const OneInThreeInstance& inst)
    {
        if (inst.num_vars > 20)
            throw error(errc::too_large, "brute-force verdict capped at 20 variables");
        for (unsigned bits = 0; bits < (1u << inst.num_vars); ++bits) {
            std::vector<bool> value(inst.num_vars + 1, false);
            for (int v = 1; v <= inst.num_vars; ++v)
                value[v] = (bits >> (v - 1)) & 1;
            if (one_in_three_satisfies(inst, value))
                return value;
        }
        return std::nullopt;
    }

    // Force the junction pattern induced by a truth assignment: true literal
    // vertices red, false blue, and the y side opposite.
    ForcedColors junction_forcing(const ReductionOutput& out, const std::vector<bool>& value)
    {
        ForcedColors forced;
        for (const auto& tac : out.tacs) {
            const bool truth = value[static_cast<std::size_t>(tac.variable)];
            for (const auto& [x, y] : tac.rungs) {
                forced.emplace_back(x, truth ? Color::red : Color::blue);
                forced.emplace_back(y, truth ? Color::blue : Color::red);
            }
        }
        return forced;
    }

    EquivalenceReport equivalence(const ReductionOutput& out,
        const std::optional<std::vector<bool>>& formula_model)
    {
        if (out.graph.vertex_count() > 2000)
            throw error(errc::too_large, "reduction verification capped at 2000 vertices");
        EquivalenceReport report;
        report.formula_satisfiable = formula_model.has_value();
        report.graph_partitionable = decide_partition(out.graph).has_value();
        if (formula_model) {
            auto lifted = decide_partition(out.graph, junction_forcing(out, *formula_model));
            report.lifted_certificate_ok
                = lifted.has_value() && verify_partition(out.graph, *lifted).ok;
        }
        return report;
    }

} // namespace

EquivalenceReport verify_reduction(const CnfFormula& f, const VariantSpec& variant,
    std::optional<NegatorSpec> negator_override)
{
    if (f.num_vars > 8)
        throw error(errc::too_large, "verification capped at 8 variables");
    return equivalence(reduce_3sat(f, variant, negator_override), brute_force_sat(f));
}

EquivalenceReport verify_reduction(const OneInThreeInstance& inst)
{
    if (inst.num_vars > 8)
        throw error(errc::too_large, "verification capped at 8 variables");
    return equivalence(reduce_1in3(inst), brute_force_1in3(inst));
}

namespace {

    void check_no_holes(StructureReport& report, const Graph& g, int lo, int hi,
        bool odd_only, const std::string& what)
    {
        for (const auto& cycle : find_induced_cycles_up_to(g, hi)) {
            const int len = static_cast<int>(cycle.size());
            if (len < lo)
                continue;
            if (odd_only && len % 2 == 0)
                continue;
            report.fail(what + ": induced cycle of length " + std::to_string(len));
            return;
        }
    }

    void check_even_endpoint_paths(StructureReport& report, const ClauseGadget& gadget,
        const std::string& what)
    {
        // exhaustive chordless path enumeration between each endpoint pair
        const Graph& g = gadget.graph;
        std::vector<int> path;
        std::vector<bool> on_path(g.vertex_count(), false);
        int target = -1;
        bool all_even = true;

        auto extend = [&](auto&& self, int last) -> void {
            if (!all_even)
                return;
            for (int u : g.neighbors(last)) {
                if (on_path[u])
                    continue;
                bool chord = false;
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    if (g.adjacent(u, path[i])) {
                        chord = true;
                        break;
                    }
                if (chord)
                    continue;
                if (u == target) {
                    // closing at u gives path.size() edges
                    if (path.size() % 2 == 1)
                        all_even = false;
                    continue;
                }
                path.push_back(u);
                on_path[u] = true;
                self(self, u);
                on_path[u] = false;
                path.pop_back();
            }
        };

        for (int a = 0; a < 3 && all_even; ++a)
            for (int b = a + 1; b < 3 && all_even; ++b) {
                path = {gadget.endpoints[a]};
                on_path.assign(g.vertex_count(), false);
                on_path[gadget.endpoints[a]] = true;
                target = gadget.endpoints[b];
                extend(extend, gadget.endpoints[a]);
            }
        if (!all_even)
            report.fail(what + ": odd-length induced path between endpoints");
    }

} // namespace

StructureReport check_structure(const ReductionOutput& out)
{
    StructureReport report;
    switch (out.variant.variant) {
    case Variant::k4free:
        if (contains_induced(out.graph, catalog::complete(4)))
            report.fail("output contains K4");
        break;
    case Variant::bullfree:
        if (contains_induced(out.graph, catalog::bull()))
            report.fail("output contains a bull");
        break;
    case Variant::holes:
        check_no_holes(report, out.graph, 5, out.variant.hole_bound, false, "output");
        break;
    case Variant::perfect:
        check_no_holes(report, out.graph, 5, 11, true, "output");
        if (contains_induced(out.graph, complement(catalog::cycle(7))))
            report.fail("output contains the complement of C7");
        if (contains_induced(out.graph, complement(catalog::cycle(9))))
            report.fail("output contains the complement of C9");
        break;
    case Variant::generic:
    case Variant::planar_shape:
        break;
    }
    return report;
}

StructureReport check_gadget_structure()
{
    StructureReport report;
    const ClauseGadget literal = build_literal_gadget();
    const ClauseGadget propagator = build_propagator_gadget();
    check_no_holes(report, literal.graph, 5, 11, true, "literal gadget");
    check_no_holes(report, propagator.graph, 5, 11, true, "propagator gadget");
    check_even_endpoint_paths(report, literal, "literal gadget");
    check_even_endpoint_paths(report, propagator, "propagator gadget");
    return report;
}

} // namespace partilab
