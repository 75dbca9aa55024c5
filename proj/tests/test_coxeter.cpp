#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "cq/coxeter.hpp"

using cq::Int;
using cq::IntPoly;
using cq::Permutation;
using cq::RootSubset;
using cq::WeightVector;

namespace {

Permutation perm(std::initializer_list<unsigned> values) {
    return Permutation{std::vector<unsigned>(values)};
}

RootSubset subset(unsigned n, std::initializer_list<unsigned> members) {
    return RootSubset{n, std::vector<unsigned>(members)};
}

} // namespace

TEST_CASE("descent sets") {
    CHECK(cq::descent_set(Permutation::identity(5)).empty());
    CHECK(cq::descent_set(perm({3, 1, 4, 2})) == std::vector<unsigned>{1, 3});
    CHECK(cq::descent_set(perm({4, 3, 2, 1})) == std::vector<unsigned>{1, 2, 3});
}

TEST_CASE("inversion count") {
    CHECK(cq::inversion_count(Permutation::identity(4)) == 0);
    CHECK(cq::inversion_count(perm({3, 2, 1})) == 3);
    CHECK(cq::inversion_count(perm({3, 1, 4, 2})) == 3);
    // identity through the descent characterization: minimal coset reps of
    // the full subset have no descents, hence no choice but the identity
    for (unsigned n = 1; n <= 6; ++n)
        CHECK(cq::inversion_count(Permutation::identity(n)) == 0);
}

TEST_CASE("run structure and coset counts") {
    const RootSubset J = subset(12, {2, 5, 6, 7, 10, 11});
    CHECK(J.run_lengths() == std::vector<unsigned>{1, 3, 2});
    CHECK(cq::coset_count(J) ==
          cq::factorial(12) / (cq::factorial(2) * cq::factorial(4) * cq::factorial(3)));
    CHECK(cq::coset_count(J) == 1663200);
    CHECK(cq::coset_count(subset(4, {})) == 24);
    CHECK(cq::coset_count(subset(3, {1, 2})) == 1);
}

TEST_CASE("minimal coset representatives") {
    const auto reps = cq::min_coset_reps(3, subset(3, {1}));
    REQUIRE(reps.size() == 3);
    CHECK(reps[0] == perm({1, 2, 3}));
    CHECK(reps[1] == perm({1, 3, 2}));
    CHECK(reps[2] == perm({2, 3, 1}));

    const auto all = cq::min_coset_reps(4, subset(4, {}));
    CHECK(all.size() == 24);
    CHECK(all.front() == perm({1, 2, 3, 4}));
    CHECK(all.back() == perm({4, 3, 2, 1}));
    CHECK(std::is_sorted(all.begin(), all.end(), [](const Permutation& a, const Permutation& b) {
        return a.one_line < b.one_line;
    }));

    // the generator itself cross-checks the run-length formula; spot-check
    // the documented large case
    CHECK(cq::min_coset_reps(12, subset(12, {2, 5, 6, 7, 10, 11})).size() == 1663200);
}

TEST_CASE("coset representative counts match the formula for every subset") {
    for (unsigned n = 1; n <= 8; ++n)
        for (const RootSubset& J : cq::all_subsets(n))
            CHECK(Int(cq::min_coset_reps(n, J).size()) == cq::coset_count(J));
}

TEST_CASE("longest parabolic element") {
    CHECK(cq::longest_parabolic_element(4, subset(4, {1, 3})) == perm({2, 1, 4, 3}));
    CHECK(cq::longest_parabolic_element(5, subset(5, {})) == Permutation::identity(5));
    CHECK(cq::longest_parabolic_element(3, subset(3, {1, 2})) == perm({3, 2, 1}));
    CHECK(cq::longest_parabolic_element(6, subset(6, {2, 3, 5})) == perm({1, 4, 3, 2, 6, 5}));
}

TEST_CASE("special subsets") {
    const auto s1 = cq::special_subsets(1);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].members.empty());

    const auto s3 = cq::special_subsets(3);
    REQUIRE(s3.size() == 3);
    CHECK(s3[0].members.empty());
    CHECK(s3[1].members == std::vector<unsigned>{1});
    CHECK(s3[2].members == std::vector<unsigned>{2});

    CHECK(cq::special_subsets(5).size() == 8);

    // enumeration agrees with the two-term recurrence
    for (unsigned n = 1; n <= 12; ++n)
        CHECK(Int(cq::special_subsets(n).size()) == cq::special_subset_count(n));

    for (const RootSubset& J : cq::special_subsets(6)) CHECK(J.is_special());
    CHECK(!subset(6, {2, 3}).is_special());
}

TEST_CASE("descent statistics") {
    for (unsigned n = 1; n <= 5; ++n)
        for (const RootSubset& J : cq::all_subsets(n)) {
            CHECK(cq::stat_a(Permutation::identity(n), J) == 0);
            CHECK(cq::stat_b(Permutation::identity(n), J) == 0);
        }
    CHECK(cq::stat_a(perm({3, 2, 1}), subset(3, {})) == 2);
    CHECK(cq::stat_a(perm({2, 3, 1}), subset(3, {1})) == 0);
    CHECK(cq::stat_b(perm({2, 3, 1}), subset(3, {1})) == 1);
    CHECK(cq::stat_b(perm({1, 3, 2}), subset(3, {1})) == 0);
    // position 0 never counts as a member: a descent at i = 1 with 1 not in
    // J always contributes to stat_a
    CHECK(cq::stat_a(perm({2, 1, 3}), subset(3, {2})) == 1);
}

TEST_CASE("lexicographic positivity") {
    CHECK(cq::lex_positive(WeightVector{{1, -1}}));
    CHECK(!cq::lex_positive(WeightVector{{-1, 1}}));
    CHECK(cq::lex_positive(WeightVector{{2, -1, -1}}));
    CHECK(!cq::lex_positive(WeightVector{{0, -2, 1, 1}}));
    CHECK(cq::lex_positive(WeightVector{{0, 0, 3}}));
    CHECK_THROWS_AS(cq::lex_positive(WeightVector{{0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("root exponent examples and contracts") {
    CHECK(cq::root_exponent(Permutation::identity(4), subset(4, {})) == 0);
    CHECK(cq::root_exponent(perm({2, 3, 1}), subset(3, {1})) == 1);
    CHECK(cq::root_exponent(perm({3, 2, 1}), subset(3, {})) == 2);

    CHECK_THROWS_AS(cq::root_exponent(Permutation::identity(4), subset(4, {1, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(cq::root_exponent(perm({2, 1, 3}), subset(3, {1})), std::invalid_argument);
}

TEST_CASE("root vectors match the four-case expansion") {
    for (unsigned n = 2; n <= 5; ++n) {
        for (const RootSubset& J : cq::special_subsets(n)) {
            const Permutation wj = cq::longest_parabolic_element(n, J);
            for (const Permutation& w : cq::min_coset_reps(n, J)) {
                unsigned positives = 0;
                for (unsigned i = 1; i + 1 <= n; ++i) {
                    if (J.contains(i)) continue;
                    // direct construction used by the implementation
                    std::vector<int> direct(n, 0);
                    direct[i - 1] += 1;
                    direct[i] -= 1;
                    direct[wj(i) - 1] += 1;
                    direct[wj(i + 1) - 1] -= 1;
                    WeightVector image;
                    image.coords.assign(n, 0);
                    for (unsigned j = 1; j <= n; ++j) image.coords[w(j) - 1] -= direct[j - 1];

                    // four-case reference expansion
                    std::vector<int> expected(n, 0);
                    const bool left = i >= 2 && J.contains(i - 1);
                    const bool right = i + 2 <= n && J.contains(i + 1);
                    if (!left && !right) {
                        expected[w(i) - 1] -= 2;
                        expected[w(i + 1) - 1] += 2;
                    } else if (left && !right) {
                        expected[w(i - 1) - 1] -= 1;
                        expected[w(i) - 1] -= 1;
                        expected[w(i + 1) - 1] += 2;
                    } else if (!left && right) {
                        expected[w(i) - 1] -= 2;
                        expected[w(i + 1) - 1] += 1;
                        expected[w(i + 2) - 1] += 1;
                    } else {
                        expected[w(i - 1) - 1] -= 1;
                        expected[w(i) - 1] -= 1;
                        expected[w(i + 1) - 1] += 1;
                        expected[w(i + 2) - 1] += 1;
                    }
                    CHECK(image.coords == expected);
                    if (cq::lex_positive(image)) ++positives;
                }
                CHECK(positives == cq::root_exponent(w, J));
            }
        }
    }
}

TEST_CASE("root exponent equals the combined descent statistic") {
    for (unsigned n = 1; n <= 5; ++n)
        for (const RootSubset& J : cq::special_subsets(n))
            for (const Permutation& w : cq::min_coset_reps(n, J))
                CHECK(cq::root_exponent(w, J) == cq::stat_a(w, J) + cq::stat_b(w, J));
}

TEST_CASE("enumerator polynomials") {
    CHECK(cq::b_poly(5, subset(5, {1, 2})) == IntPoly({Int(3), Int(14), Int(3)}));
    CHECK(cq::b_poly(3, subset(3, {})) == IntPoly({Int(1), Int(4), Int(1)}));
    for (unsigned n = 2; n <= 6; ++n) {
        RootSubset full{n, {}};
        for (unsigned i = 1; i + 1 <= n; ++i) full.members.push_back(i);
        CHECK(cq::b_poly(n, full) == IntPoly::one());
    }
    CHECK(cq::b_poly(1, subset(1, {})) == IntPoly::one());

    for (unsigned n = 1; n <= 6; ++n)
        for (const RootSubset& J : cq::all_subsets(n)) {
            const IntPoly p = cq::b_poly(n, J);
            for (const Int& c : p.coeffs()) CHECK(c >= 0);
            CHECK(p.eval(1) == cq::coset_count(J));
        }
}

TEST_CASE("parallel scans agree with serial ones") {
    for (const RootSubset& J : {subset(6, {}), subset(6, {2, 4}), subset(6, {1, 2, 5})}) {
        CHECK(cq::b_poly(6, J, 3) == cq::b_poly(6, J, 1));
        CHECK(cq::b_poly(6, J, 16) == cq::b_poly(6, J, 1));
    }
    CHECK(cq::eulerian_poly(7, 4) == cq::eulerian_poly(7, 1));
}

TEST_CASE("descent histogram polynomial") {
    CHECK(cq::eulerian_poly(1) == IntPoly::one());
    CHECK(cq::eulerian_poly(3) == IntPoly({Int(1), Int(4), Int(1)}));
    CHECK(cq::eulerian_poly(5) == IntPoly({Int(1), Int(26), Int(66), Int(26), Int(1)}));
    CHECK_THROWS_AS(cq::eulerian_poly(0), std::invalid_argument);

    for (unsigned n = 1; n <= 8; ++n) {
        const IntPoly p = cq::eulerian_poly(n);
        CHECK(p.eval(1) == cq::factorial(n));
        CHECK(cq::is_unimodal(p));
        const auto& c = p.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == c[c.size() - 1 - i]);
    }
    for (unsigned n = 1; n <= 7; ++n) CHECK(cq::eulerian_poly(n) == cq::b_poly(n, RootSubset{n, {}}));
}
