#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mulli/modulus.hpp"
#include "mulli/partition.hpp"

namespace mulli {

/// The south-east border {(i,j) in [lambda] : (i+1,j+1) not in [lambda]},
/// ordered from the top-right node to the bottom-left node. Position k in
/// the vector carries rim label k + 1.
using RimPath = std::vector<Cell>;

/// The p-rim: the concatenation of the p-segments of the rim.
struct PRim {
    std::vector<Cell> cells;
    /// Index into `cells` where each p-segment starts; segment_starts[0] == 0.
    std::vector<std::size_t> segment_starts;

    int size() const noexcept { return static_cast<int>(cells.size()); }
    std::size_t segment_count() const noexcept { return segment_starts.size(); }
    std::span<const Cell> segment(std::size_t s) const;
    NodeSet node_set() const { return {cells.begin(), cells.end()}; }
};

/// The symmetric p-rim* of a self-conjugate partition.
struct PRimStar {
    NodeSet upper;  ///< p-rim nodes with row <= col
    NodeSet lower;  ///< mirror image of `upper`
    int a_star = 0;  ///< #(upper U lower)
    int r_star = 0;  ///< #upper
    int eps_star = 0;  ///< a_star mod 2

    NodeSet node_set() const;
    bool has_diagonal_node() const noexcept { return eps_star == 1; }
};

/// Throws Error(empty_partition) for the empty partition.
RimPath rim(const Partition& lambda);

/// Segments are built along the rim labels: take p consecutive labels; if the
/// segment ends in row i above the last row, the next segment restarts at the
/// smallest label of row i + 1. Every segment but the last has p nodes.
PRim p_rim(const Partition& lambda, Modulus p);

Partition remove_p_rim(const Partition& lambda, Modulus p);

/// Requires lambda self-conjugate and nonempty.
PRimStar p_rim_star(const Partition& lambda, Modulus p);

/// Removing a p-rim* keeps the partition self-conjugate.
Partition remove_p_rim_star(const Partition& lambda, Modulus p);

/// lambda minus `cells`, where the removed cells of every row must form a
/// suffix of that row and the remainder must be a partition. Throws
/// malformed_growth otherwise.
Partition remove_cells(const Partition& lambda, const NodeSet& cells);

}  // namespace mulli
