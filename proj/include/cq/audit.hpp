#pragma once

#include <vector>

#include "cq/arith.hpp"
#include "cq/coxeter.hpp"

namespace cq {

struct TableRow {
    RootSubset subset;
    IntPoly poly;
};

/// Enumerator polynomials for every subset of [n-1], ordered by size then
/// lexicographically.
std::vector<TableRow> enumerator_table(unsigned n, unsigned jobs = 1);

/// One row of the published reference table (literature values for n = 5):
/// subset members and ascending coefficients.
struct PublishedRow {
    std::vector<unsigned> members;
    std::vector<long long> coeffs;
};

const std::vector<PublishedRow>& published_table5();

struct AuditRow {
    RootSubset subset;
    IntPoly computed;
    IntPoly published;
    bool matches = false;
    Int computed_at_one;
    Int published_at_one;
    Int identity_value; // coset_count(subset); both evaluations must equal it
};

struct TableAudit {
    std::vector<AuditRow> rows;
    unsigned matching = 0;

    unsigned total() const { return static_cast<unsigned>(rows.size()); }
};

/// Recomputes every n = 5 enumerator and compares against the published
/// reference rows. A row whose published value at q = 1 violates the
/// coset-count identity is reported as a misprint.
TableAudit audit_published_table(unsigned jobs = 1);

} // namespace cq
