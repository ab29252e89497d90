#pragma once

#include <vector>

#include "mulli/modulus.hpp"
#include "mulli/partition.hpp"
#include "mulli/symbol.hpp"

namespace mulli {

/// lambda = lambda^(0)*, lambda^(1)*, ..., lambda^(l)*: repeated p-rim*
/// removal. Throws not_self_conjugate.
std::vector<Partition> p_rim_star_chain(const Partition& lambda, Modulus p);

/// The BG-symbol (a*_i ; r*_i) of a self-conjugate partition. Defined on all
/// self-conjugate partitions, not only BG-partitions. The empty partition has
/// the empty symbol.
Symbol compute_bg_symbol(const Partition& lambda, Modulus p);

/// Adds one p-rim* layer to the self-conjugate partition `base`.
///
/// The result lambda is the unique self-conjugate partition with
/// a*_lambda = eps (mod 2), r*_lambda - eps*_lambda = residue (mod p), and
/// remove_p_rim_star(lambda) == base.
///
/// Preconditions (Error(precondition) otherwise): eps in {0, 1}, residue in
/// [0, p), residue == 0 when eps == 0, eps == 1 when base is empty. A base
/// that is not self-conjugate throws not_self_conjugate.
Partition extend_by_rim_star(const Partition& base, int eps, int residue, Modulus p);

/// BG-partition -> self-Mullineux partition, the reconstruction of the
/// BG-symbol read as a Mullineux symbol. Throws not_bg_partition.
Partition bg_to_mullineux(const Partition& lambda, Modulus p);

/// Self-Mullineux partition -> BG-partition. Seeds with the hook
/// (r_l, 1^(r_l - 1)) and folds extend_by_rim_star over the remaining symbol
/// columns from right to left. Each step's layer conditions and BG
/// membership are checked; a failure throws invariant_violation.
/// Throws not_self_mullineux for other input.
Partition mullineux_to_bg(const Partition& lambda, Modulus p);

}  // namespace mulli
