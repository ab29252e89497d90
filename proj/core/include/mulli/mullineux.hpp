#pragma once

#include <string>
#include <vector>

#include "mulli/modulus.hpp"
#include "mulli/partition.hpp"
#include "mulli/symbol.hpp"

namespace mulli {

/// The chain lambda = lambda^(0), lambda^(1), ..., lambda^(l) obtained by
/// repeatedly removing the p-rim; the empty partition is not included.
std::vector<Partition> p_rim_chain(const Partition& lambda, Modulus p);

/// G_p(lambda): column i holds the size of the i-th p-rim and the number of
/// rows of lambda^(i). Throws not_p_regular.
Symbol compute_symbol(const Partition& lambda, Modulus p);

/// Outcome of checking the Mullineux-symbol inequalities.
struct SymbolCheck {
    bool valid = true;
    int failed_condition = 0;  ///< 1..4, or 0 when valid
    std::string diagnostic;

    explicit operator bool() const noexcept { return valid; }
};

/// Checks, with epsilon_i = [p does not divide a_i]:
///   (1) eps_i <= r_i - r_{i+1} < p + eps_i                         (i < l)
///   (2) 1 <= r_l < p + eps_l
///   (3) r_i - r_{i+1} + eps_{i+1} <= a_i - a_{i+1}
///                                 < p + r_i - r_{i+1} + eps_{i+1}   (i < l)
///   (4) r_l <= a_l < p + r_l
/// Conditions are tried in that order and the first failure is reported.
/// The epsilon above is used whatever the symbol's kind.
SymbolCheck validate_symbol(const Symbol& symbol);

/// Inverse of compute_symbol. Starts from the hook of size a_l with r_l rows
/// and, for i = l-1 .. 0, grows the i-th p-rim bottom-up: the first node goes
/// to the first free place of row r_i, the first group holds a_i mod p nodes
/// (p when p | a_i) and every later group p nodes. Inside a group each node
/// goes on top of the previous one when that place is free, otherwise to its
/// right; a new group starts at the first free place of the row above. The
/// growth must finish in row 1.
///
/// Throws invalid_symbol when validate_symbol fails and malformed_growth when
/// the growth leaves the shape of a partition.
Partition reconstruct(const Symbol& symbol);

/// The Mullineux involution: replaces r_i by s_i = a_i + eps_i - r_i.
Partition mullineux_map(const Partition& lambda, Modulus p);

/// Fixed point test through the symbol: a_i == 2 r_i - eps_i for all i.
bool is_self_mullineux(const Partition& lambda, Modulus p);

/// Same test applied to a symbol directly (Mullineux epsilon).
bool is_self_mullineux_symbol(const Symbol& symbol);

}  // namespace mulli
