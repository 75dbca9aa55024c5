#pragma once

#include <functional>
#include <vector>

#include "cq/arith.hpp"

namespace cq {

// Default bound on full permutation scans (descent sums, involution
// enumeration, conjecture sweeps). 9! * ~34 statistic evaluations stays
// comfortably interactive; anything larger must be requested explicitly.
inline constexpr unsigned kDefaultPermCutoff = 9;

/// Permutation of [n] in one-line notation; values are 1-based.
struct Permutation {
    std::vector<unsigned> one_line;

    unsigned size() const { return static_cast<unsigned>(one_line.size()); }
    unsigned operator()(unsigned i) const { return one_line[i - 1]; }

    static Permutation identity(unsigned n);
    bool is_involution() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Set of descent positions {i in [n-1] : w(i) > w(i+1)}, sorted.
std::vector<unsigned> descent_set(const Permutation& w);

/// Number of inversions |{(i,j) : i < j, w(i) > w(j)}|; test-facing.
unsigned inversion_count(const Permutation& w);

/// Subset of [n-1]; member i stands for the adjacent transposition (i, i+1)
/// and the corresponding simple root.
struct RootSubset {
    unsigned n = 0;
    std::vector<unsigned> members; // sorted, each in [1, n-1]

    bool contains(unsigned i) const;
    bool is_special() const; // no two consecutive members
    /// Lengths of the maximal runs of consecutive members, in order.
    std::vector<unsigned> run_lengths() const;

    friend bool operator==(const RootSubset&, const RootSubset&) = default;
};

/// n! / prod (len_r + 1)! over the maximal consecutive runs of J; the number
/// of minimal coset representatives for the parabolic subgroup of J.
Int coset_count(const RootSubset& J);

/// w is a minimal coset representative iff it has no descent inside J.
bool is_min_coset_rep(const Permutation& w, const RootSubset& J);

/// All minimal coset representatives in lexicographic one-line order.
/// Verifies the generated count against coset_count before returning.
std::vector<Permutation> min_coset_reps(unsigned n, const RootSubset& J);

/// Longest element of the parabolic subgroup: reverses every block of
/// positions spanned by a maximal run of J.
Permutation longest_parabolic_element(unsigned n, const RootSubset& J);

/// All subsets of [n-1], ordered by size then lexicographically.
std::vector<RootSubset> all_subsets(unsigned n);

/// The subsets with no two consecutive members, same ordering.
std::vector<RootSubset> special_subsets(unsigned n);

/// |special_subsets(n)| via the two-term recurrence; matches enumeration.
Int special_subset_count(unsigned n);

/// Descents i of w with neither i nor i-1 in J (i-1 = 0 is never in J).
unsigned stat_a(const Permutation& w, const RootSubset& J);

/// Descents i of w with i-1 in J, i not in J, and w(i+1) < w(i-1) < w(i).
unsigned stat_b(const Permutation& w, const RootSubset& J);

/// Integer vector in the standard-basis coordinates, index i = coordinate
/// of the i-th basis vector.
struct WeightVector {
    std::vector<int> coords;
};

/// True iff the lowest-index nonzero coordinate is positive. This is the
/// positivity convention the descent statistics are checked against; the
/// partial-sum (root-cone) convention is NOT equivalent.
bool lex_positive(const WeightVector& v);

/// For each simple-root index i outside J: form the vector of the i-th
/// simple root plus its image under the longest parabolic element, push it
/// through w via w(e_j) = e_{w(j)}, negate, and count the lex-positive
/// results. Requires J special and w a minimal coset representative.
unsigned root_exponent(const Permutation& w, const RootSubset& J);

/// Generalized orbit enumerator: sum of q^(stat_a + stat_b) over all
/// minimal coset representatives of J. J may be any subset of [n-1].
/// Scans permutations in lexicographic order, partitioned by first entry
/// across `jobs` workers; the merge is coefficient-wise addition.
IntPoly b_poly(unsigned n, const RootSubset& J, unsigned jobs = 1);

/// Descent-count histogram over all of S_n: sum of q^|Des(w)|. Computed by
/// an independent scan (it never consults the coset statistics).
IntPoly eulerian_poly(unsigned n, unsigned jobs = 1);

} // namespace cq
