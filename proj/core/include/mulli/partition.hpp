#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "mulli/modulus.hpp"

namespace mulli {

/// Largest partition size accepted anywhere in the library.
inline constexpr int kMaxPartitionSize = 1'000'000;

/// A node (i, j) of a Young diagram, 1-based, rows growing downwards.
struct Cell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Mirror image across the main diagonal.
constexpr Cell transpose(Cell c) noexcept { return {c.col, c.row}; }

/// A set of cells, iterated in lexicographic (row, col) order.
using NodeSet = std::set<Cell>;

/// An integer partition stored as its non-zero parts in weakly decreasing
/// order. The empty partition (of 0) has no parts.
class Partition {
public:
    Partition() = default;

    /// Throws Error(invalid_partition) if the parts are not positive and
    /// weakly decreasing, or if the size exceeds kMaxPartitionSize.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Like the constructor, but trailing zero rows are dropped first.
    static Partition from_row_lengths(std::vector<int> rows);

    /// The hook (arm + 1, 1^leg) with the given first row and number of rows.
    static Partition hook(int first_row, int rows);

    std::span<const int> parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// lambda_i for 1-based i; 0 past the last row.
    int part(int i) const noexcept {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    int operator[](int i) const noexcept { return part(i); }

    bool contains(Cell c) const noexcept {
        return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
    }

    /// All nodes of the Young diagram.
    NodeSet cells() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    /// Lexicographic on parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition conjugate(const Partition& lambda);

/// h_{ij} = lambda_i + lambda'_j - i - j + 1. Throws cell_outside_diagram.
int hook_length(const Partition& lambda, Cell c);

/// k(lambda) = max{ i : lambda_i >= i }, the number of diagonal nodes.
int durfee_length(const Partition& lambda) noexcept;

/// Hook lengths h_{11}, h_{22}, ..., h_{kk}.
std::vector<int> diagonal_hook_lengths(const Partition& lambda);

/// No part value occurs p or more times.
bool is_p_regular(const Partition& lambda, Modulus p);

bool is_self_conjugate(const Partition& lambda);

/// Self-conjugate with no diagonal hook length divisible by p.
bool is_bg_partition(const Partition& lambda, Modulus p);

/// (lambda_1, ..., lambda_k) with k = durfee_length. Throws on empty input.
Partition truncate_to_k(const Partition& lambda);

}  // namespace mulli
