#pragma once

#include "partilab/graph.hpp"

#include <memory>
#include <string>
#include <vector>

namespace partilab {

// Grammar:
//   expr   := term ('+' term)*            disjoint union
//   term   := factor ('*' factor)*        join, binds tighter than '+'
//   factor := [INT] atom | '(' expr ')'
//   atom   := 'K'INT | 'P'INT | 'C'INT
// An INT prefix means that many disjoint copies, e.g. 2K3.
struct ExprAst {
    enum class Kind { leaf, cunion, join };
    enum class Primitive { complete, path, cycle };

    Kind kind = Kind::leaf;
    Primitive primitive = Primitive::complete;
    int order = 0; // leaf: number of vertices of the primitive
    int count = 1; // leaf: number of disjoint copies
    std::vector<ExprAst> children;
};

ExprAst parse_expr(const std::string& text);
Graph eval_expr(const ExprAst& ast);
Graph eval_expr(const std::string& text);

} // namespace partilab
