#pragma once

#include <optional>
#include <vector>

#include "hookring/partition.hpp"

namespace hookring {

// One mu-expansion of lambda: the added boxes with their labels and the
// resulting shape.
struct Expansion {
    Partition base;
    struct Box {
        int row;   // 0-based
        int col;   // 0-based
        int label; // 1-based, as in the tableau
    };
    std::vector<Box> boxes;
    Partition shape;
};

// All mu-expansions of lambda, restricted to shape nu when given.
// Depth-first, label by label, pruning on the diagram / column-strict /
// lattice-word conditions as boxes are placed.
std::vector<Expansion> enumerate_expansions(const Partition& lambda, const Partition& mu,
                                            const std::optional<Partition>& nu = std::nullopt);

// Littlewood-Richardson coefficient; 0 on size mismatch or when nu does not
// contain lambda.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

} // namespace hookring
