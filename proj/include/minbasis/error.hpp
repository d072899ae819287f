#pragma once

#include <stdexcept>
#include <string>

namespace minbasis {

// Error codes surfaced by library operations. The CLI maps these to exit
// status 1 (bad input/config) or 2 (a check ran and failed).
enum class Errc {
    rejected,               // partition spec violates an invariant
    bad_param,              // argument outside its documented range
    empty_support,
    nonpositive,
    cap_exceeded,           // window/subset/prefix/period cap hit
    precondition_violated,  // decomposition congruence fails
    infeasible,             // decomposition ran out of nodes: implementation bug
    wrong_arity,
    zero_not_in_w1,
    t_too_small,
    condition_unavailable,  // theorem hypothesis not verifiable for given T
    not_a_basis_element,
    space_too_large,        // enumeration space above cap
    window_inconclusive,    // sumset window does not reach its own bound
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace minbasis
