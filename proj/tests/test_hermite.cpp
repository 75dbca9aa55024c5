#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cq/hermite.hpp"
#include "cq/tableaux.hpp"

using cq::Int;
using cq::IntPoly;

namespace {

IntPoly poly(std::initializer_list<long long> ascending) {
    std::vector<Int> coeffs;
    for (long long c : ascending) coeffs.emplace_back(c);
    return IntPoly(std::move(coeffs));
}

// Literal sum over weak compositions of n into exactly k parts, used as an
// independent oracle for the convolution evaluation.
Int weak_composition_sum(unsigned n, unsigned k) {
    Int total = 0;
    std::vector<unsigned> parts(k, 0);
    // odometer over all k-tuples of nonnegative integers summing to n
    auto rec = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
        if (pos + 1 == k) {
            parts[pos] = remaining;
            Int term = cq::multinomial(n, parts);
            for (unsigned p : parts) term *= cq::involution_count(p);
            total += term;
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            parts[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
    return total;
}

} // namespace

TEST_CASE("table rows match the recurrence by hand") {
    CHECK(cq::hermite_poly(0) == poly({1}));
    CHECK(cq::hermite_poly(1) == poly({0, 1}));
    CHECK(cq::hermite_poly(2) == poly({0, 1, 1}));
    CHECK(cq::hermite_poly(3) == poly({0, 0, 3, 1}));
    CHECK(cq::hermite_poly(4) == poly({0, 0, 3, 6, 1}));
    CHECK(cq::hermite_poly(5) == poly({0, 0, 0, 15, 10, 1}));
}

TEST_CASE("table invariants up to 30") {
    cq::HermiteTable table;
    const IntPoly y = poly({0, 1});
    for (unsigned k = 1; k <= 30; ++k) {
        const IntPoly& row = table.row(k);
        REQUIRE(row.degree().has_value());
        CHECK(*row.degree() == k);
        std::size_t lowest = 0;
        while (row.coeff(lowest) == 0) ++lowest;
        CHECK(lowest == (k + 1) / 2);
        if (k >= 2)
            CHECK(row == y * (table.row(k - 1) + table.row(k - 2).scaled(k - 1)));
    }
}

TEST_CASE("evaluation") {
    for (unsigned n = 1; n <= 8; ++n) CHECK(cq::hermite_eval(n, 0) == 0);
    CHECK(cq::hermite_eval(0, 0) == 1);
    CHECK(cq::hermite_eval(3, 3) == 54);
    CHECK(cq::hermite_eval(3, 2) == 20);
}

TEST_CASE("convolution route") {
    for (unsigned n = 0; n <= 12; ++n)
        CHECK(cq::hermite_via_convolution(n, 1) == cq::involution_count(n));
    CHECK(cq::hermite_via_convolution(3, 2) == 20);
    for (unsigned k = 1; k <= 6; ++k) CHECK(cq::hermite_via_convolution(0, k) == 1);
    CHECK(cq::hermite_via_convolution(0, 0) == 1);
    CHECK_THROWS_AS(cq::hermite_via_convolution(3, 0), std::invalid_argument);
}

TEST_CASE("convolution equals the literal weak-composition sum") {
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned k = 1; k <= 6; ++k)
            CHECK(cq::hermite_via_convolution(n, k) == weak_composition_sum(n, k));
}

TEST_CASE("evaluation agrees with the convolution route") {
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned k = 1; k <= 10; ++k)
            CHECK(cq::hermite_eval(n, Int(k)) == cq::hermite_via_convolution(n, k));
}

TEST_CASE("row value at 1 counts involutions") {
    for (unsigned n = 0; n <= 20; ++n) CHECK(cq::hermite_eval(n, 1) == cq::involution_count(n));
}

TEST_CASE("alternating binomial weights") {
    for (unsigned n = 1; n <= 8; ++n) CHECK(cq::coeff_a(n, n) == 1);
    CHECK(cq::coeff_a(3, 1) == 2);
    CHECK(cq::coeff_a(3, 2) == -2);
    CHECK(cq::coeff_a(4, 1) == -2);
    CHECK(cq::coeff_a(4, 2) == 4);
    CHECK(cq::coeff_a(4, 3) == -3);
    CHECK_THROWS_AS(cq::coeff_a(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(cq::coeff_a(4, 5), std::invalid_argument);
}

TEST_CASE("orbit counts through the polynomial route") {
    CHECK(cq::b_via_hermite(1) == 1);
    CHECK(cq::b_via_hermite(3) == 22);
    CHECK(cq::b_via_hermite(4) == 162);
    CHECK_THROWS_AS(cq::b_via_hermite(0), std::invalid_argument);
}
