#pragma once

#include <string>
#include <vector>

#include "mulli/modulus.hpp"
#include "mulli/partition.hpp"

namespace mulli {

enum class LayerKind { p_rim, p_rim_star };

/// The i-th entry holds the nodes of the i-th p-rim (or p-rim*) of lambda.
std::vector<NodeSet> layers(const Partition& lambda, Modulus p, LayerKind kind);

/// Diagram rows top-down; "[ ]" for a plain node, "[#]" for a highlighted one.
std::string render_highlight(const Partition& lambda, const NodeSet& highlighted);

/// Every node labeled with the index of the layer that removes it, e.g. for
/// (9,6,3,1) and p = 5:
///
///     [2][2][2][2][1][0][0][0][0]
///     [2][1][1][1][1][0]
///     [0][0][0]
///     [0]
///
/// Labels are right-aligned when some index has more than one digit.
std::string render_layers(const Partition& lambda, Modulus p, LayerKind kind);

}  // namespace mulli
