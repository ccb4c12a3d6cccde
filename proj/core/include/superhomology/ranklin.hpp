#pragma once

#include "superhomology/chain.hpp"

#include <chrono>
#include <cstddef>
#include <utility>
#include <vector>

namespace superhomology {

struct EliminationReport {
    std::size_t rank = 0;
    /// (row, col) of each pivot, in elimination order, original indices.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    /// Nonzeros created at positions that were zero before elimination.
    std::size_t fill_in = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Fraction-free (Bareiss) elimination over the integers after clearing
/// each row's denominators. The pivot row is an active row of fewest
/// nonzeros (ties: lowest leading column, then lowest row); within it the
/// column with the fewest active nonzeros (ties: lowest column).
EliminationReport eliminate(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// cols - rank.
std::size_t kernel_dim(const RationalMatrix& m);

} // namespace superhomology
