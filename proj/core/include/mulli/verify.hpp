#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mulli/modulus.hpp"

namespace mulli {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::int64_t cases = 0;   ///< number of instances checked
    std::string counterexample;  ///< first failure, empty when passed
};

/// Exhaustively checks every structural property of the toolkit for one p on
/// all partitions of n = 0 .. n_max. Properties that only concern small n
/// (hook multisets, the p > n conjugation case) use the smaller range.
std::vector<PropertyResult> verify_properties(Modulus p, int n_max);

}  // namespace mulli
