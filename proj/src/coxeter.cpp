#include "cq/coxeter.hpp"

#include <algorithm>
#include <numeric>

#include "cq/parallel.hpp"

namespace cq {

Permutation Permutation::identity(unsigned n) {
    Permutation w;
    w.one_line.resize(n);
    std::iota(w.one_line.begin(), w.one_line.end(), 1u);
    return w;
}

bool Permutation::is_involution() const {
    const unsigned n = size();
    for (unsigned i = 1; i <= n; ++i)
        if ((*this)((*this)(i)) != i) return false;
    return true;
}

std::vector<unsigned> descent_set(const Permutation& w) {
    std::vector<unsigned> des;
    for (unsigned i = 1; i + 1 <= w.size(); ++i)
        if (w(i) > w(i + 1)) des.push_back(i);
    return des;
}

unsigned inversion_count(const Permutation& w) {
    unsigned inv = 0;
    const unsigned n = w.size();
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

bool RootSubset::contains(unsigned i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

bool RootSubset::is_special() const {
    for (std::size_t k = 0; k + 1 < members.size(); ++k)
        if (members[k] + 1 == members[k + 1]) return false;
    return true;
}

std::vector<unsigned> RootSubset::run_lengths() const {
    std::vector<unsigned> runs;
    std::size_t k = 0;
    while (k < members.size()) {
        std::size_t start = k;
        while (k + 1 < members.size() && members[k] + 1 == members[k + 1]) ++k;
        runs.push_back(static_cast<unsigned>(k - start + 1));
        ++k;
    }
    return runs;
}

Int coset_count(const RootSubset& J) {
    Int r = factorial(J.n);
    for (unsigned len : J.run_lengths()) r /= factorial(len + 1);
    return r;
}

bool is_min_coset_rep(const Permutation& w, const RootSubset& J) {
    for (unsigned i : J.members)
        if (w(i) > w(i + 1)) return false;
    return true;
}

namespace {

// Positions p and p+1 are chained when p is a member of J; chained positions
// must carry increasing values.
std::vector<bool> chained_positions(unsigned n, const RootSubset& J) {
    std::vector<bool> chained(n + 1, false);
    for (unsigned i : J.members) chained[i] = true;
    return chained;
}

void gen_coset_reps(unsigned n, const std::vector<bool>& chained,
                    std::vector<unsigned>& prefix, std::vector<bool>& used,
                    std::vector<Permutation>& out) {
    const unsigned pos = static_cast<unsigned>(prefix.size()) + 1;
    if (pos > n) {
        out.push_back(Permutation{prefix});
        return;
    }
    const unsigned floor = (pos > 1 && chained[pos - 1]) ? prefix.back() : 0;
    for (unsigned v = floor + 1; v <= n; ++v) {
        if (used[v]) continue;
        used[v] = true;
        prefix.push_back(v);
        gen_coset_reps(n, chained, prefix, used, out);
        prefix.pop_back();
        used[v] = false;
    }
}

} // namespace

std::vector<Permutation> min_coset_reps(unsigned n, const RootSubset& J) {
    if (J.n != n) throw std::invalid_argument("min_coset_reps: subset sized for different n");
    std::vector<Permutation> out;
    std::vector<unsigned> prefix;
    std::vector<bool> used(n + 1, false);
    gen_coset_reps(n, chained_positions(n, J), prefix, used, out);
    if (Int(out.size()) != coset_count(J))
        throw InternalError("min_coset_reps: generated count disagrees with the run-length formula");
    return out;
}

Permutation longest_parabolic_element(unsigned n, const RootSubset& J) {
    Permutation w = Permutation::identity(n);
    const auto& m = J.members;
    std::size_t k = 0;
    while (k < m.size()) {
        std::size_t start = k;
        while (k + 1 < m.size() && m[k] + 1 == m[k + 1]) ++k;
        // run m[start]..m[k] reverses positions m[start]..m[k]+1
        unsigned lo = m[start], hi = m[k] + 1;
        for (unsigned p = lo; p <= hi; ++p) w.one_line[p - 1] = lo + hi - p;
        ++k;
    }
    return w;
}

std::vector<RootSubset> all_subsets(unsigned n) {
    if (n == 0) throw std::invalid_argument("all_subsets: n must be >= 1");
    const unsigned m = n - 1;
    std::vector<RootSubset> out;
    out.reserve(std::size_t(1) << m);
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        RootSubset J;
        J.n = n;
        for (unsigned i = 1; i <= m; ++i)
            if (mask & (1ul << (i - 1))) J.members.push_back(i);
        out.push_back(std::move(J));
    }
    std::stable_sort(out.begin(), out.end(), [](const RootSubset& a, const RootSubset& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

std::vector<RootSubset> special_subsets(unsigned n) {
    auto subsets = all_subsets(n);
    std::erase_if(subsets, [](const RootSubset& J) { return !J.is_special(); });
    return subsets;
}

Int special_subset_count(unsigned n) {
    if (n == 0) throw std::invalid_argument("special_subset_count: n must be >= 1");
    // c(m) = subsets of a length-m path with no two adjacent picks:
    // c(0) = 1, c(1) = 2, c(m) = c(m-1) + c(m-2).
    Int prev = 1, cur = 1;
    for (unsigned m = 1; m <= n - 1; ++m) {
        Int next = cur + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

unsigned stat_a(const Permutation& w, const RootSubset& J) {
    unsigned count = 0;
    for (unsigned i : descent_set(w))
        if (!J.contains(i) && (i == 1 || !J.contains(i - 1))) ++count;
    return count;
}

unsigned stat_b(const Permutation& w, const RootSubset& J) {
    unsigned count = 0;
    for (unsigned i : descent_set(w)) {
        if (i == 1 || !J.contains(i - 1) || J.contains(i)) continue;
        if (w(i + 1) < w(i - 1) && w(i - 1) < w(i)) ++count;
    }
    return count;
}

bool lex_positive(const WeightVector& v) {
    for (int c : v.coords) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    throw std::invalid_argument("lex_positive: zero vector has no sign");
}

unsigned root_exponent(const Permutation& w, const RootSubset& J) {
    const unsigned n = w.size();
    if (J.n != n) throw std::invalid_argument("root_exponent: subset sized for different n");
    if (!J.is_special()) throw std::invalid_argument("root_exponent: subset is not special");
    if (!is_min_coset_rep(w, J))
        throw std::invalid_argument("root_exponent: permutation is not a minimal coset representative");

    const Permutation wj = longest_parabolic_element(n, J);
    unsigned count = 0;
    for (unsigned i = 1; i + 1 <= n; ++i) {
        if (J.contains(i)) continue;
        // alpha_i + w_J(alpha_i) in basis coordinates
        std::vector<int> v(n, 0);
        v[i - 1] += 1;
        v[i] -= 1;
        v[wj(i) - 1] += 1;
        v[wj(i + 1) - 1] -= 1;
        // apply w via w(e_j) = e_{w(j)}, then negate
        WeightVector img;
        img.coords.assign(n, 0);
        for (unsigned j = 1; j <= n; ++j) img.coords[w(j) - 1] -= v[j - 1];
        if (lex_positive(img)) ++count;
    }
    return count;
}

namespace {

// stat_a + stat_b in one allocation-free pass; the scan hot path.
unsigned exponent_sum(const Permutation& w, const std::vector<bool>& in_J) {
    unsigned total = 0;
    const unsigned n = w.size();
    for (unsigned i = 1; i + 1 <= n; ++i) {
        if (w(i) <= w(i + 1)) continue; // not a descent
        if (in_J[i]) continue;
        if (i == 1 || !in_J[i - 1]) {
            ++total;
        } else if (w(i + 1) < w(i - 1) && w(i - 1) < w(i)) {
            ++total;
        }
    }
    return total;
}

// Scans the permutations of [n] with the given first entry in lexicographic
// order, invoking visit(w) for each one that avoids descents inside J.
template <class Visit>
void scan_block(unsigned n, unsigned first, const RootSubset& J, Visit&& visit) {
    Permutation w;
    w.one_line.reserve(n);
    w.one_line.push_back(first);
    for (unsigned v = 1; v <= n; ++v)
        if (v != first) w.one_line.push_back(v);
    auto rest_begin = w.one_line.begin() + 1;
    do {
        if (is_min_coset_rep(w, J)) visit(w);
    } while (std::next_permutation(rest_begin, w.one_line.end()));
}

IntPoly histogram_poly(const std::vector<std::vector<unsigned long long>>& per_task) {
    std::size_t width = 0;
    for (const auto& h : per_task) width = std::max(width, h.size());
    std::vector<Int> coeffs(width, Int(0));
    for (const auto& h : per_task)
        for (std::size_t e = 0; e < h.size(); ++e) coeffs[e] += h[e];
    return IntPoly(std::move(coeffs));
}

} // namespace

IntPoly b_poly(unsigned n, const RootSubset& J, unsigned jobs) {
    if (n == 0) throw std::invalid_argument("b_poly: n must be >= 1");
    if (J.n != n) throw std::invalid_argument("b_poly: subset sized for different n");
    if (n == 1) return IntPoly::one();
    std::vector<bool> in_J(n + 1, false);
    for (unsigned i : J.members) in_J[i] = true;
    std::vector<std::vector<unsigned long long>> per_task(n);
    run_tasks(n, jobs, [&](std::size_t task) {
        auto& hist = per_task[task];
        hist.assign(n, 0);
        scan_block(n, static_cast<unsigned>(task) + 1, J, [&](const Permutation& w) {
            ++hist[exponent_sum(w, in_J)];
        });
    });
    return histogram_poly(per_task);
}

IntPoly eulerian_poly(unsigned n, unsigned jobs) {
    if (n == 0) throw std::invalid_argument("eulerian_poly: n must be >= 1");
    if (n == 1) return IntPoly::one();
    const RootSubset empty{n, {}};
    std::vector<std::vector<unsigned long long>> per_task(n);
    run_tasks(n, jobs, [&](std::size_t task) {
        auto& hist = per_task[task];
        hist.assign(n, 0);
        scan_block(n, static_cast<unsigned>(task) + 1, empty, [&](const Permutation& w) {
            unsigned descents = 0;
            for (unsigned i = 1; i + 1 <= n; ++i)
                if (w(i) > w(i + 1)) ++descents;
            ++hist[descents];
        });
    });
    return histogram_poly(per_task);
}

} // namespace cq
