#pragma once

#include <stdexcept>
#include <string>

namespace hypercent {

/// Error categories raised by the library. Each maps 1:1 onto a
/// validation or runtime failure named in the public API contracts.
enum class errc {
    repeated_node,
    empty_block,
    non_positive_weight,
    unknown_node,
    non_uniform,
    not_directed,
    non_tail_uniform,
    mixed_kinds,
    index_out_of_range,
    wrong_arity,
    length_mismatch,
    non_finite_input,
    too_large,
    not_strongly_connected,
    not_converged,
    not_f_hypergraph,
    degenerate_input,
    k_out_of_range,
    parse_error,
    empty_side,
    io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

/// Parse failure carrying the 1-based input line it occurred on.
class ParseError : public Error {
  public:
    ParseError(int line, const std::string& reason)
        : Error(errc::parse_error, "line " + std::to_string(line) + ": " + reason), line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hypercent
