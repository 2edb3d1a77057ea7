// Error taxonomy shared by all aglpoly modules.
//
// Validation failures (bad user input, out-of-domain parameters) and
// internal invariant violations are kept apart so the CLI can map them
// to distinct exit codes.

#pragma once

#include <stdexcept>
#include <string>

namespace aglpoly {

enum class errc {
    not_prime,
    even_characteristic,
    overflow,
    division_by_zero,
    mixed_contexts,
    zero_element,
    non_positive,
    out_of_range,
    q_too_small,
    degenerate_a,
    intersection_violation,
    odd_extension_degree,
    cutoff_exceeded,
    not_a_divisor,
    n_too_small,
    invalid_argument,
    inconsistent_table,  // internal: a structural theorem failed on computed data
    internal_error,      // internal: unreachable state
};

const char* errc_name(errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

    // Internal errors indicate a bug in this library rather than bad input.
    bool is_internal() const noexcept {
        return code_ == errc::inconsistent_table || code_ == errc::internal_error;
    }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace aglpoly
