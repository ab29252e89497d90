#include "mulli/error.hpp"

namespace mulli {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_p: return "invalid-p";
        case ErrorKind::invalid_partition: return "invalid-partition";
        case ErrorKind::empty_partition: return "empty-partition";
        case ErrorKind::cell_outside_diagram: return "cell-outside-diagram";
        case ErrorKind::not_p_regular: return "not-p-regular";
        case ErrorKind::not_self_conjugate: return "not-self-conjugate";
        case ErrorKind::invalid_symbol: return "invalid-symbol";
        case ErrorKind::malformed_growth: return "malformed-growth";
        case ErrorKind::not_bg_partition: return "not-bg-partition";
        case ErrorKind::not_self_mullineux: return "not-self-mullineux";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::parse_error: return "parse-error";
        case ErrorKind::overflow: return "overflow";
        case ErrorKind::invariant_violation: return "invariant-violation";
    }
    return "unknown";
}

}  // namespace mulli
