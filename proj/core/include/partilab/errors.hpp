#pragma once

#include <stdexcept>
#include <string>

namespace partilab {

enum class errc {
    out_of_range,
    self_loop,
    duplicate_edge,
    loop_created,
    size_mismatch,
    too_large,
    parse_error,
    zero_count,
    unknown_name,
    unknown_kind,
    not_a_cograph,
    not_connected,
    premise_not_met,
    not_three_sat,
    duplicate_variable_in_clause,
    invalid_instance,
    negative_literal_in_1in3,
    syntax_error,
    precondition,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what)
        , code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace partilab
