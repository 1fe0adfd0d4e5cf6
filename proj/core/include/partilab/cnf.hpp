#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace partilab {

// Clause list over signed DIMACS literals: +v / -v, variables 1..num_vars.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    void add_clause(std::vector<int> lits);
    void validate() const;
};

struct Assignment {
    std::vector<bool> value; // index 0 unused, 1..num_vars

    bool operator()(int var) const { return value[static_cast<std::size_t>(var)]; }
    bool satisfies(const CnfFormula& f) const;
};

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
void write_dimacs(std::ostream& out, const CnfFormula& f);

// Positive 1-in-3 instance: every clause is three distinct positive variables.
struct OneInThreeInstance {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses; // 1-based variable ids
};

OneInThreeInstance parse_1in3(std::istream& in);
OneInThreeInstance parse_1in3(const std::string& text);

// Satisfied with exactly one true literal per clause?
bool one_in_three_satisfies(const OneInThreeInstance& inst, const std::vector<bool>& value);

} // namespace partilab
