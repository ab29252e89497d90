#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mulli {

enum class ErrorKind {
    invalid_p,
    invalid_partition,
    empty_partition,
    cell_outside_diagram,
    not_p_regular,
    not_self_conjugate,
    invalid_symbol,
    malformed_growth,
    not_bg_partition,
    not_self_mullineux,
    precondition,
    parse_error,
    overflow,
    invariant_violation,
};

/// Stable kebab-case name, used in machine-readable error output.
std::string_view to_string(ErrorKind kind) noexcept;

/// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace mulli
