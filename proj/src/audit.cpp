#include "cq/audit.hpp"

namespace cq {

std::vector<TableRow> enumerator_table(unsigned n, unsigned jobs) {
    std::vector<TableRow> rows;
    for (RootSubset& J : all_subsets(n)) {
        IntPoly p = b_poly(n, J, jobs);
        rows.push_back(TableRow{std::move(J), std::move(p)});
    }
    return rows;
}

const std::vector<PublishedRow>& published_table5() {
    // Reference enumerator table for n = 5 as published in the literature,
    // coefficients by ascending power. The {3,4} row is misprinted at the
    // source: it evaluates to 15 at q = 1, violating the coset-count
    // identity 5!/3! = 20 (the recomputed row is 6q^2+13q+1).
    static const std::vector<PublishedRow> rows = {
        {{}, {1, 26, 66, 26, 1}},
        {{1}, {4, 33, 22, 1}},
        {{2}, {3, 26, 29, 2}},
        {{3}, {2, 29, 26, 3}},
        {{4}, {1, 22, 33, 4}},
        {{1, 2}, {3, 14, 3}},
        {{1, 3}, {8, 19, 3}},
        {{1, 4}, {4, 22, 4}},
        {{2, 3}, {2, 11, 7}},
        {{2, 4}, {3, 19, 8}},
        {{3, 4}, {1, 13, 1}},
        {{1, 2, 3}, {3, 2}},
        {{1, 2, 4}, {3, 7}},
        {{1, 3, 4}, {4, 6}},
        {{2, 3, 4}, {1, 4}},
        {{1, 2, 3, 4}, {1}},
    };
    return rows;
}

TableAudit audit_published_table(unsigned jobs) {
    TableAudit audit;
    for (const PublishedRow& pub : published_table5()) {
        AuditRow row;
        row.subset = RootSubset{5, pub.members};
        std::vector<Int> coeffs(pub.coeffs.begin(), pub.coeffs.end());
        row.published = IntPoly(std::move(coeffs));
        row.computed = b_poly(5, row.subset, jobs);
        row.matches = row.computed == row.published;
        row.computed_at_one = row.computed.eval(1);
        row.published_at_one = row.published.eval(1);
        row.identity_value = coset_count(row.subset);
        if (row.matches) ++audit.matching;
        audit.rows.push_back(std::move(row));
    }
    return audit;
}

} // namespace cq
