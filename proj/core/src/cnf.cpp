#include "partilab/cnf.hpp"

#include "partilab/errors.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace partilab {

void CnfFormula::add_clause(std::vector<int> lits)
{
    for (int l : lits)
        if (l == 0 || std::abs(l) > num_vars)
            throw error(errc::out_of_range, "literal out of range");
    clauses.push_back(std::move(lits));
}

void CnfFormula::validate() const
{
    for (const auto& clause : clauses)
        for (int l : clause)
            if (l == 0 || std::abs(l) > num_vars)
                throw error(errc::out_of_range, "literal out of range");
}

bool Assignment::satisfies(const CnfFormula& f) const
{
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (int l : clause) {
            const bool v = value[static_cast<std::size_t>(std::abs(l))];
            if ((l > 0) == v) {
                sat = true;
                break;
            }
        }
        if (!sat)
            return false;
    }
    return true;
}

CnfFormula parse_dimacs(std::istream& in)
{
    std::string line;
    int lineno = 0;
    CnfFormula f;
    int declared_clauses = -1;
    bool have_header = false;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        if (first == "c")
            continue;
        if (first == "p") {
            std::string kind;
            if (!(ls >> kind >> f.num_vars >> declared_clauses) || kind != "cnf"
                || f.num_vars < 0 || declared_clauses < 0)
                throw error(errc::syntax_error,
                    "line " + std::to_string(lineno) + ": bad cnf header");
            have_header = true;
            continue;
        }
        if (!have_header)
            throw error(errc::syntax_error,
                "line " + std::to_string(lineno) + ": clause before header");
        std::istringstream body(line);
        int lit;
        while (body >> lit) {
            if (lit == 0) {
                f.add_clause(pending);
                pending.clear();
            } else {
                if (std::abs(lit) > f.num_vars)
                    throw error(errc::syntax_error,
                        "line " + std::to_string(lineno) + ": literal out of range");
                pending.push_back(lit);
            }
        }
        if (body.fail() && !body.eof())
            throw error(errc::syntax_error,
                "line " + std::to_string(lineno) + ": bad clause line");
    }
    if (!have_header)
        throw error(errc::syntax_error, "missing cnf header");
    if (!pending.empty())
        throw error(errc::syntax_error, "unterminated clause");
    if (declared_clauses != static_cast<int>(f.clauses.size()))
        throw error(errc::syntax_error, "clause count does not match header");
    return f;
}

CnfFormula parse_dimacs(const std::string& text)
{
    std::istringstream in(text);
    return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& f)
{
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int l : clause)
            out << l << ' ';
        out << "0\n";
    }
}

OneInThreeInstance parse_1in3(std::istream& in)
{
    CnfFormula f = parse_dimacs(in);
    OneInThreeInstance inst;
    inst.num_vars = f.num_vars;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& clause = f.clauses[i];
        for (int l : clause)
            if (l < 0)
                throw error(errc::negative_literal_in_1in3,
                    "clause " + std::to_string(i + 1) + " has a negative literal");
        if (clause.size() != 3)
            throw error(errc::invalid_instance,
                "clause " + std::to_string(i + 1) + " does not have three literals");
        if (clause[0] == clause[1] || clause[0] == clause[2] || clause[1] == clause[2])
            throw error(errc::invalid_instance,
                "clause " + std::to_string(i + 1) + " repeats a variable");
        inst.clauses.push_back({clause[0], clause[1], clause[2]});
    }
    return inst;
}

OneInThreeInstance parse_1in3(const std::string& text)
{
    std::istringstream in(text);
    return parse_1in3(in);
}

bool one_in_three_satisfies(const OneInThreeInstance& inst, const std::vector<bool>& value)
{
    for (const auto& clause : inst.clauses) {
        int trues = 0;
        for (int v : clause)
            trues += value[static_cast<std::size_t>(v)] ? 1 : 0;
        if (trues != 1)
            return false;
    }
    return true;
}

} // namespace partilab
