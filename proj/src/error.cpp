#include "minbasis/error.hpp"

namespace minbasis {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::rejected: return "REJECTED";
        case Errc::bad_param: return "BAD-PARAM";
        case Errc::empty_support: return "EMPTY-SUPPORT";
        case Errc::nonpositive: return "NONPOSITIVE";
        case Errc::cap_exceeded: return "CAP-EXCEEDED";
        case Errc::precondition_violated: return "PRECONDITION-VIOLATED";
        case Errc::infeasible: return "INFEASIBLE";
        case Errc::wrong_arity: return "WRONG-ARITY";
        case Errc::zero_not_in_w1: return "ZERO-NOT-IN-W1";
        case Errc::t_too_small: return "T-TOO-SMALL";
        case Errc::condition_unavailable: return "CONDITION-UNAVAILABLE";
        case Errc::not_a_basis_element: return "NOT-A-BASIS-ELEMENT";
        case Errc::space_too_large: return "SPACE-TOO-LARGE";
        case Errc::window_inconclusive: return "WINDOW-INCONCLUSIVE";
        case Errc::io_error: return "IO-ERROR";
    }
    return "UNKNOWN";
}

}  // namespace minbasis
