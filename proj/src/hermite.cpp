#include "cq/hermite.hpp"

#include <mutex>

#include "cq/tableaux.hpp"

namespace cq {

const IntPoly& HermiteTable::row(unsigned k) {
    if (rows_.empty()) {
        rows_.push_back(IntPoly::one());            // row 0 = 1
        rows_.push_back(IntPoly({Int(0), Int(1)})); // row 1 = y
    }
    const IntPoly y({Int(0), Int(1)});
    while (rows_.size() <= k) {
        const unsigned m = static_cast<unsigned>(rows_.size()) - 1;
        rows_.push_back(y * (rows_[m] + rows_[m - 1].scaled(m)));
    }
    return rows_[k];
}

IntPoly hermite_poly(unsigned k) {
    static HermiteTable table;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    return table.row(k);
}

Int hermite_eval(unsigned n, const Int& y0) {
    return hermite_poly(n).eval(y0);
}

Int hermite_via_convolution(unsigned n, unsigned k) {
    if (k == 0) {
        if (n == 0) return 1;
        throw std::invalid_argument("hermite_via_convolution: zero factors cannot carry weight");
    }
    std::vector<Int> inv(n + 1);
    for (unsigned m = 0; m <= n; ++m) inv[m] = involution_count(m);

    // Pascal rows up to n, reused across the k-1 convolution steps.
    std::vector<std::vector<Int>> choose(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        choose[m].resize(m + 1);
        for (unsigned t = 0; t <= m; ++t)
            choose[m][t] =
                (t == 0 || t == m) ? Int(1) : Int(choose[m - 1][t - 1] + choose[m - 1][t]);
    }

    std::vector<Int> cur = inv;
    for (unsigned step = 2; step <= k; ++step) {
        std::vector<Int> next(n + 1, Int(0));
        for (unsigned m = 0; m <= n; ++m)
            for (unsigned t = 0; t <= m; ++t) next[m] += choose[m][t] * inv[t] * cur[m - t];
        cur = std::move(next);
    }
    return cur[n];
}

Int coeff_a(unsigned n, unsigned r) {
    if (r < 1 || r > n)
        throw std::invalid_argument("coeff_a: r must lie in [1, n]");
    Int sum = 0;
    for (unsigned i = 0; i <= n - r; ++i) {
        Int term = binomial(r + i, r);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

Int b_via_hermite(unsigned n) {
    if (n == 0) throw std::invalid_argument("b_via_hermite: n must be >= 1");
    std::vector<Int> values(n + 1);
    for (unsigned j = 1; j <= n; ++j) values[j] = hermite_eval(n, Int(j));

    Int collected = 0;
    for (unsigned r = 1; r <= n; ++r) collected += coeff_a(n, r) * values[r];

    Int uncollected = 0;
    for (unsigned k = 1; k <= n; ++k)
        for (unsigned j = 1; j <= k; ++j) {
            Int term = binomial(k, j) * values[j];
            uncollected += ((k - j) % 2 == 0) ? term : -term;
        }

    if (collected != uncollected)
        throw InternalError("b_via_hermite: collected and un-collected sums disagree at n = " +
                            std::to_string(n));
    return collected;
}

} // namespace cq
