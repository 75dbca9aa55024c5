#pragma once

#include <string>
#include <vector>

#include "cq/arith.hpp"
#include "cq/coxeter.hpp"
#include "cq/hermite.hpp"
#include "cq/tableaux.hpp"

namespace cq {

/// Ordered sequence of positive integers.
struct Composition {
    std::vector<unsigned> parts;

    unsigned total() const;

    friend bool operator==(const Composition&, const Composition&) = default;
};

/// All 2^(n-1) compositions of n, lexicographically ascending:
/// (1,1,1) < (1,2) < (2,1) < (3). Rejects n = 0.
std::vector<Composition> compositions_of(unsigned n);

/// Complement in [n-1] of the proper partial sums of the composition. The
/// run lengths of the image are the parts minus one; this is a bijection
/// onto the subsets of [n-1].
RootSubset composition_to_subset(const Composition& gamma);

/// Orbit count as the sum over compositions of n of
/// multinomial(n, parts) * prod involution_count(part). Evaluated by the
/// suffix factorization of that sum (grouping on the first part), which
/// keeps it O(n^2); the literal enumeration is kept as a test oracle.
Int b_via_compositions(unsigned n);

/// Orbit count as the sum of num_skew_syt over all skew shapes of weight n.
/// Grouped by the factor-weight composition (all factor choices of a given
/// weight sum to total_syt), then factored as above; the literal shape
/// enumeration is kept as a test oracle.
Int b_via_skew(unsigned n);

/// Orbit count as sum over special J of sum over minimal coset reps of
/// 2^(stat_a + stat_b), i.e. the enumerator polynomials evaluated at 2.
/// Full permutation scan; refuses n above the cutoff.
Int b_via_descents(unsigned n, unsigned perm_cutoff = kDefaultPermCutoff,
                   unsigned jobs = 1);

enum class Method { Compositions, Skew, Hermite, Descents };

const char* method_name(Method m);
bool parse_method(const std::string& name, Method& out);

/// Dispatch to one of the four counting routes.
Int borel_orbit_count(unsigned n, Method method,
                      unsigned perm_cutoff = kDefaultPermCutoff,
                      unsigned jobs = 1);

/// Number of ordered set partitions of an n-set, by the binomial recurrence
/// b_n = sum_k C(n,k) b_{n-k}.
Int ordered_bell(unsigned n);

/// Fibonacci numbers with F_1 = F_2 = 1. Rejects n = 0.
Int fibonacci(unsigned n);

/// Sum over all subsets I of [n-1] of (n!)^2 / prod (len_r + 1)! where
/// len_r are the maximal consecutive run lengths of I. Literal enumeration
/// of all 2^(n-1) subsets.
Int wonderful_sum(unsigned n);

// Largest n for which b_equivariant re-derives itself through the literal
// subset sum; beyond this the 2^(n-1) enumeration is skipped.
inline constexpr unsigned kEquivariantCrossCheckMax = 15;

/// n! * ordered_bell(n); cross-checked against wonderful_sum for
/// n <= kEquivariantCrossCheckMax (InternalError on mismatch).
Int b_equivariant(unsigned n);

struct BoundsReport {
    unsigned n = 0;
    Int lower;       // fibonacci(n) * n!
    Int value;       // orbit count, two routes in agreement
    Int upper;       // 2^(n-1) * n!
    Int equivariant; // n! * ordered_bell(n)
    // For n >= 3 the flags certify strict inequalities; for n <= 2 they
    // certify the non-strict chain (the small cases degenerate to
    // equalities, and the upper bound is attained at n = 2).
    bool strict_lower_ok = false;
    bool strict_upper_ok = false;
    bool equivariant_ok = false;
    bool equalities_expected = false; // n <= 2

    bool all_ok() const { return strict_lower_ok && strict_upper_ok && equivariant_ok; }
};

BoundsReport check_bounds(unsigned n);

/// involution_count(n) / n! in lowest terms; always <= 1.
Rat psi(unsigned n);

struct AsymptoticRatios {
    double bell_ratio; // ordered_bell(n) * 2 (ln 2)^(n+1) / n!
    double fib_ratio;  // fibonacci(n) * sqrt(5) / phi^n
};

/// Ratios of the exact sequences to their leading asymptotic forms,
/// computed from exact integers at well above 64-bit float precision.
AsymptoticRatios asymptotic_ratios(unsigned n);

} // namespace cq
