#pragma once

#include "partilab/cnf.hpp"
#include "partilab/graph.hpp"
#include "partilab/negators.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace partilab {

enum class Variant { generic, planar_shape, k4free, bullfree, holes, perfect };

struct VariantSpec {
    Variant variant = Variant::generic;
    int hole_bound = 0; // holes only: longest excluded cycle length, >= 5

    std::string name() const;
};

std::optional<VariantSpec> variant_from_string(const std::string& name);

NegatorSpec default_negator(const VariantSpec& variant);

struct ReductionOutput {
    Graph graph;
    VariantSpec variant;
    NegatorSpec negator;

    struct VarTac {
        int variable;                            // 1-based, as in the formula
        std::vector<std::pair<int, int>> rungs;  // (x_{i,j}, y_{i,j}) per rung
    };
    std::vector<VarTac> tacs; // occurring variables, ascending

    struct ClauseInfo {
        std::array<int, 3> stc;                  // vertices in literal order
        std::array<int, 3> propagator{-1, -1, -1}; // perfect variant only
    };
    std::vector<ClauseInfo> clauses;

    const VarTac& tac_of(int variable) const;
};

// Every clause needs exactly three literals over three distinct variables.
ReductionOutput reduce_3sat(const CnfFormula& f, const VariantSpec& variant,
    std::optional<NegatorSpec> negator_override = std::nullopt);

ReductionOutput reduce_1in3(const OneInThreeInstance& inst,
    std::optional<NegatorSpec> negator_override = std::nullopt);

void write_mapping(std::ostream& out, const ReductionOutput& out_graph);

// Standalone clause gadgets of the perfect reduction (endpoints unidentified).
struct ClauseGadget {
    Graph graph;
    std::array<int, 3> endpoints;
};

ClauseGadget build_literal_gadget();
ClauseGadget build_propagator_gadget();

struct EndpointPatternResult {
    std::array<Color, 3> pattern;
    bool feasible;
};

struct GadgetCountsReport {
    std::vector<EndpointPatternResult> literal;    // all 8 endpoint patterns
    std::vector<EndpointPatternResult> propagator;
    bool literal_ok = false;    // infeasible iff fewer than two blue endpoints
    bool propagator_ok = false; // feasible iff exactly one or three blue endpoints
    bool pass() const { return literal_ok && propagator_ok; }
};

GadgetCountsReport verify_gadget_endpoint_counts();

struct EquivalenceReport {
    bool formula_satisfiable = false;
    bool graph_partitionable = false;
    bool lifted_certificate_ok = true; // satisfiable case only
    bool agree() const { return formula_satisfiable == graph_partitionable; }
    bool pass() const { return agree() && lifted_certificate_ok; }
};

// Brute-force formula verdict vs solver verdict on the reduction graph; on
// satisfiable inputs the truth assignment is lifted onto the junctions and
// completed to a checked certificate.
EquivalenceReport verify_reduction(const CnfFormula& f, const VariantSpec& variant,
    std::optional<NegatorSpec> negator_override = std::nullopt);
EquivalenceReport verify_reduction(const OneInThreeInstance& inst);

struct StructureReport {
    bool pass = true;
    std::vector<std::string> violations;

    void fail(std::string what)
    {
        pass = false;
        violations.push_back(std::move(what));
    }
};

// Variant-specific guarantees of the output graph: K4-freeness, bull-freeness,
// absence of holes up to the bound, bounded Berge checks for the perfect
// variant.
StructureReport check_structure(const ReductionOutput& out);

// Checks on the standalone clause gadgets: no odd induced cycle and only
// even-length induced paths between endpoint pairs.
StructureReport check_gadget_structure();

} // namespace partilab
