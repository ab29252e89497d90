#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mulli/modulus.hpp"
#include "mulli/partition.hpp"

namespace mulli {

/// Calls `visit` on every partition of n, in decreasing lexicographic order.
/// n = 0 yields the empty partition once.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

std::vector<Partition> partitions_of(int n);

/// Parts pairwise distinct, all odd, none divisible by p.
bool is_distinct_odd_nondivisible(const Partition& lambda, Modulus p);

/// The partition (h_11, h_22, ..., h_kk) of a self-conjugate partition; its
/// parts are distinct odd integers. Throws not_self_conjugate.
Partition diagonal_hook_partition(const Partition& lambda);

/// Inverse of diagonal_hook_partition. Throws invalid_partition unless the
/// parts of `hooks` are distinct and odd.
Partition self_conjugate_from_hooks(const Partition& hooks);

struct BijectionPair {
    Partition bg;
    Partition mullineux;

    friend bool operator==(const BijectionPair&, const BijectionPair&) = default;
};

/// The four families of partitions of n for one p, plus the bijection.
/// All lists are in decreasing lexicographic order; pairs follow `bg`.
struct CensusReport {
    Modulus p{3};
    int n = 0;
    std::int64_t all_count = 0;
    std::int64_t p_regular_count = 0;
    std::vector<Partition> self_conjugate;
    std::vector<Partition> bg;
    std::vector<Partition> self_mullineux;
    std::vector<Partition> distinct_odd_nondiv;
    std::vector<BijectionPair> pairs;
};

/// Exhaustive census over all partitions of n. The BG test is cross-checked
/// against the diagonal-hook description; a disagreement throws
/// invariant_violation.
CensusReport census(Modulus p, int n);

/// Coefficients of t^0 .. t^n_max in prod over odd k <= n_max, p not | k, of
/// (1 + t^k). Exact int64 arithmetic; throws overflow if a coefficient does
/// not fit.
std::vector<std::int64_t> bg_count_via_gf(Modulus p, int n_max);

}  // namespace mulli
