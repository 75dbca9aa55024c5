#pragma once

#include <utility>
#include <vector>

#include "cq/arith.hpp"
#include "cq/coxeter.hpp"

namespace cq {

// Default bound on exhaustive tableau fillings (number of boxes).
inline constexpr unsigned kDefaultBoxCutoff = 10;

/// Integer partition: weakly decreasing positive parts. The empty part list
/// is the unique partition of 0.
struct Partition {
    std::vector<unsigned> parts;

    unsigned weight() const;
    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// All partitions of n, lexicographically descending: (4) > (3,1) > (2,2) ...
std::vector<Partition> partitions_of(unsigned n);

/// Number of standard fillings of the partition's diagram, by the
/// corner-removal recurrence with memoization.
Int num_syt(const Partition& lambda);

/// Sum of num_syt over all partitions of n.
Int total_syt(unsigned n);

/// Sequence of nonempty partitions stacked corner-to-corner: each factor is
/// placed below and to the left of the previous one so the two diagrams
/// touch at a single diagonal step and share no row or column.
struct SkewShape {
    std::vector<Partition> factors;

    unsigned weight() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

/// Every sequence of nonempty partitions of total weight n, exactly once.
/// Ordered by the weight composition (lexicographically ascending), then by
/// factor partitions (each lexicographically descending). Rejects n = 0.
std::vector<SkewShape> skew_shapes_of(unsigned n);

/// (row, column) cells realizing the shape, rows growing downward, columns
/// rightward, normalized so the smallest column is 0. Factors occupy
/// pairwise disjoint row and column ranges.
std::vector<std::pair<int, int>> skew_cells(const SkewShape& shape);

/// Multinomial prefactor times the product of the factors' filling counts.
Int num_skew_syt(const SkewShape& shape);

/// Exact filling count by backtracking placement of 1..n into the cell
/// grid, increasing along rows and down columns. This is the brute-force
/// cross-check for num_skew_syt. Refuses shapes above the box cutoff.
Int enumerate_syt(const SkewShape& shape, unsigned box_cutoff = kDefaultBoxCutoff);

/// Number of self-inverse permutations of [n], via the two-term recurrence
/// I(n) = I(n-1) + (n-1) I(n-2).
Int involution_count(unsigned n);

/// All self-inverse permutations of [n] by full scan, lexicographic order.
/// Refuses n above the permutation cutoff.
std::vector<Permutation> enumerate_involutions(unsigned n,
                                               unsigned perm_cutoff = kDefaultPermCutoff);

} // namespace cq
