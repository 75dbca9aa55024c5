#include "cq/orbits.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>

namespace cq {

unsigned Composition::total() const {
    unsigned t = 0;
    for (unsigned p : parts) t += p;
    return t;
}

namespace {

void gen_compositions(unsigned remaining, std::vector<unsigned>& prefix,
                      std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(Composition{prefix});
        return;
    }
    for (unsigned k = 1; k <= remaining; ++k) {
        prefix.push_back(k);
        gen_compositions(remaining - k, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions_of(unsigned n) {
    if (n == 0) throw std::invalid_argument("compositions_of: n must be >= 1");
    std::vector<Composition> out;
    out.reserve(std::size_t(1) << (n - 1));
    std::vector<unsigned> prefix;
    gen_compositions(n, prefix, out);
    return out;
}

RootSubset composition_to_subset(const Composition& gamma) {
    const unsigned n = gamma.total();
    std::vector<bool> is_cut(n + 1, false);
    unsigned sum = 0;
    for (std::size_t k = 0; k + 1 < gamma.parts.size(); ++k) {
        sum += gamma.parts[k];
        is_cut[sum] = true;
    }
    RootSubset J;
    J.n = n;
    for (unsigned i = 1; i + 1 <= n; ++i)
        if (!is_cut[i]) J.members.push_back(i);
    return J;
}

namespace {

// Sum over all compositions of n of multinomial(n, parts) * prod head(part),
// factored on the first part: S(m) = sum_{k=1..m} C(m,k) head(k) S(m-k).
Int composition_weighted_sum(unsigned n, const std::vector<Int>& head) {
    std::vector<std::vector<Int>> choose(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        choose[m].resize(m + 1);
        for (unsigned t = 0; t <= m; ++t)
            choose[m][t] =
                (t == 0 || t == m) ? Int(1) : Int(choose[m - 1][t - 1] + choose[m - 1][t]);
    }
    std::vector<Int> suffix(n + 1, Int(0));
    suffix[0] = 1;
    for (unsigned m = 1; m <= n; ++m)
        for (unsigned k = 1; k <= m; ++k) suffix[m] += choose[m][k] * head[k] * suffix[m - k];
    return suffix[n];
}

} // namespace

Int b_via_compositions(unsigned n) {
    if (n == 0) throw std::invalid_argument("b_via_compositions: n must be >= 1");
    std::vector<Int> inv(n + 1);
    for (unsigned k = 0; k <= n; ++k) inv[k] = involution_count(k);
    return composition_weighted_sum(n, inv);
}

Int b_via_skew(unsigned n) {
    if (n == 0) throw std::invalid_argument("b_via_skew: n must be >= 1");
    std::vector<Int> fillings(n + 1, Int(1));
    for (unsigned k = 1; k <= n; ++k) fillings[k] = total_syt(k);
    return composition_weighted_sum(n, fillings);
}

Int b_via_descents(unsigned n, unsigned perm_cutoff, unsigned jobs) {
    if (n == 0) throw std::invalid_argument("b_via_descents: n must be >= 1");
    if (n > perm_cutoff) {
        throw CutoffError("b_via_descents: n = " + std::to_string(n) +
                              " exceeds the permutation-scan cutoff of " +
                              std::to_string(perm_cutoff),
                          perm_cutoff);
    }
    Int total = 0;
    for (const RootSubset& J : special_subsets(n)) total += b_poly(n, J, jobs).eval(2);
    return total;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Compositions: return "compositions";
        case Method::Skew: return "skew";
        case Method::Hermite: return "hermite";
        case Method::Descents: return "descents";
    }
    return "?";
}

bool parse_method(const std::string& name, Method& out) {
    for (Method m : {Method::Compositions, Method::Skew, Method::Hermite, Method::Descents}) {
        if (name == method_name(m)) {
            out = m;
            return true;
        }
    }
    return false;
}

Int borel_orbit_count(unsigned n, Method method, unsigned perm_cutoff, unsigned jobs) {
    switch (method) {
        case Method::Compositions: return b_via_compositions(n);
        case Method::Skew: return b_via_skew(n);
        case Method::Hermite: return b_via_hermite(n);
        case Method::Descents: return b_via_descents(n, perm_cutoff, jobs);
    }
    throw std::invalid_argument("borel_orbit_count: unknown method");
}

Int ordered_bell(unsigned n) {
    std::vector<Int> bell(n + 1);
    bell[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        Int sum = 0;
        for (unsigned k = 1; k <= m; ++k) sum += binomial(m, k) * bell[m - k];
        bell[m] = std::move(sum);
    }
    return bell[n];
}

Int fibonacci(unsigned n) {
    if (n == 0) throw std::invalid_argument("fibonacci: n must be >= 1");
    Int a = 1, b = 1; // F_1, F_2
    for (unsigned k = 3; k <= n; ++k) {
        Int c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return n == 1 ? a : b;
}

Int wonderful_sum(unsigned n) {
    if (n == 0) throw std::invalid_argument("wonderful_sum: n must be >= 1");
    const unsigned m = n - 1;
    const Int fact_sq = factorial(n) * factorial(n);
    Int sum = 0;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        Int divisor = 1;
        unsigned run = 0;
        for (unsigned i = 1; i <= m; ++i) {
            if (mask & (1ul << (i - 1))) {
                ++run;
            } else if (run > 0) {
                divisor *= factorial(run + 1);
                run = 0;
            }
        }
        if (run > 0) divisor *= factorial(run + 1);
        sum += fact_sq / divisor;
    }
    return sum;
}

Int b_equivariant(unsigned n) {
    if (n == 0) throw std::invalid_argument("b_equivariant: n must be >= 1");
    Int value = factorial(n) * ordered_bell(n);
    if (n <= kEquivariantCrossCheckMax && wonderful_sum(n) != value)
        throw InternalError("b_equivariant: subset sum disagrees at n = " + std::to_string(n));
    return value;
}

BoundsReport check_bounds(unsigned n) {
    if (n == 0) throw std::invalid_argument("check_bounds: n must be >= 1");
    BoundsReport report;
    report.n = n;
    report.value = b_via_compositions(n);
    if (b_via_hermite(n) != report.value)
        throw InternalError("check_bounds: counting routes disagree at n = " + std::to_string(n));
    report.lower = fibonacci(n) * factorial(n);
    report.upper = (Int(1) << (n - 1)) * factorial(n);
    report.equivariant = b_equivariant(n);
    report.equalities_expected = n <= 2;
    if (report.equalities_expected) {
        report.strict_lower_ok = report.lower <= report.value;
        report.strict_upper_ok = report.value <= report.upper;
        report.equivariant_ok = report.upper <= report.equivariant;
    } else {
        report.strict_lower_ok = report.lower < report.value;
        report.strict_upper_ok = report.value < report.upper;
        report.equivariant_ok = report.upper < report.equivariant;
    }
    return report;
}

Rat psi(unsigned n) {
    if (n == 0) throw std::invalid_argument("psi: n must be >= 1");
    return Rat(involution_count(n), factorial(n));
}

AsymptoticRatios asymptotic_ratios(unsigned n) {
    if (n == 0) throw std::invalid_argument("asymptotic_ratios: n must be >= 1");
    using Big = boost::multiprecision::cpp_bin_float_100;
    const Big log2 = log(Big(2));
    const Big bell = Big(ordered_bell(n)) * 2 * pow(log2, static_cast<int>(n) + 1) /
                     Big(factorial(n));
    const Big root5 = sqrt(Big(5));
    const Big phi = (1 + root5) / 2;
    const Big fib = Big(fibonacci(n)) * root5 / pow(phi, static_cast<int>(n));
    return {bell.convert_to<double>(), fib.convert_to<double>()};
}

} // namespace cq
