#include "cq/tableaux.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace cq {

unsigned Partition::weight() const {
    unsigned w = 0;
    for (unsigned p : parts) w += p;
    return w;
}

Partition Partition::conjugate() const {
    Partition conj;
    if (parts.empty()) return conj;
    conj.parts.resize(parts[0]);
    for (unsigned col = 1; col <= parts[0]; ++col) {
        unsigned len = 0;
        for (unsigned p : parts)
            if (p >= col) ++len;
        conj.parts[col - 1] = len;
    }
    return conj;
}

namespace {

void gen_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{prefix});
        return;
    }
    for (unsigned k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        gen_partitions(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> prefix;
    gen_partitions(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

namespace {

std::map<std::vector<unsigned>, Int> syt_memo;
std::mutex syt_memo_mutex;

Int num_syt_impl(std::vector<unsigned> parts) {
    if (parts.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(syt_memo_mutex);
        auto it = syt_memo.find(parts);
        if (it != syt_memo.end()) return it->second;
    }
    Int total = 0;
    for (std::size_t r = 0; r < parts.size(); ++r) {
        // a corner is removable when the row is strictly longer than the next
        if (r + 1 < parts.size() && parts[r] == parts[r + 1]) continue;
        std::vector<unsigned> smaller = parts;
        if (--smaller[r] == 0) smaller.erase(smaller.begin() + r);
        total += num_syt_impl(std::move(smaller));
    }
    std::lock_guard<std::mutex> lock(syt_memo_mutex);
    return syt_memo.emplace(std::move(parts), std::move(total)).first->second;
}

} // namespace

Int num_syt(const Partition& lambda) {
    return num_syt_impl(lambda.parts);
}

Int total_syt(unsigned n) {
    Int sum = 0;
    for (const Partition& lambda : partitions_of(n)) sum += num_syt(lambda);
    return sum;
}

unsigned SkewShape::weight() const {
    unsigned w = 0;
    for (const Partition& f : factors) w += f.weight();
    return w;
}

namespace {

void gen_shapes(unsigned remaining, std::vector<Partition>& prefix,
                std::vector<SkewShape>& out) {
    if (remaining == 0) {
        out.push_back(SkewShape{prefix});
        return;
    }
    for (unsigned k = 1; k <= remaining; ++k) {
        for (Partition& lambda : partitions_of(k)) {
            prefix.push_back(std::move(lambda));
            gen_shapes(remaining - k, prefix, out);
            prefix.pop_back();
        }
    }
}

} // namespace

std::vector<SkewShape> skew_shapes_of(unsigned n) {
    if (n == 0) throw std::invalid_argument("skew_shapes_of: weight must be >= 1");
    std::vector<SkewShape> out;
    std::vector<Partition> prefix;
    gen_shapes(n, prefix, out);
    return out;
}

std::vector<std::pair<int, int>> skew_cells(const SkewShape& shape) {
    std::vector<std::pair<int, int>> cells;
    int row = 0, col = 0;
    int min_col = 0;
    for (std::size_t f = 0; f < shape.factors.size(); ++f) {
        const auto& parts = shape.factors[f].parts;
        if (parts.empty())
            throw std::invalid_argument("skew_cells: factors must be nonempty partitions");
        if (f > 0) col -= static_cast<int>(parts[0]);
        min_col = std::min(min_col, col);
        for (std::size_t r = 0; r < parts.size(); ++r)
            for (unsigned c = 0; c < parts[r]; ++c)
                cells.emplace_back(row + static_cast<int>(r), col + static_cast<int>(c));
        row += static_cast<int>(parts.size());
    }
    for (auto& cell : cells) cell.second -= min_col;
    return cells;
}

Int num_skew_syt(const SkewShape& shape) {
    std::vector<unsigned> weights;
    Int product = 1;
    for (const Partition& f : shape.factors) {
        if (f.parts.empty())
            throw std::invalid_argument("num_skew_syt: factors must be nonempty partitions");
        weights.push_back(f.weight());
        product *= num_syt(f);
    }
    return multinomial(shape.weight(), weights) * product;
}

namespace {

struct FillState {
    std::vector<int> left;  // index of the cell to the left, -1 if none
    std::vector<int> up;    // index of the cell above, -1 if none
    std::vector<bool> filled;
    unsigned long long completions = 0;

    void place(unsigned depth, unsigned total) {
        if (depth == total) {
            ++completions;
            return;
        }
        for (std::size_t i = 0; i < filled.size(); ++i) {
            if (filled[i]) continue;
            if (left[i] >= 0 && !filled[left[i]]) continue;
            if (up[i] >= 0 && !filled[up[i]]) continue;
            filled[i] = true;
            place(depth + 1, total);
            filled[i] = false;
        }
    }
};

} // namespace

Int enumerate_syt(const SkewShape& shape, unsigned box_cutoff) {
    const unsigned n = shape.weight();
    if (n > box_cutoff) {
        throw CutoffError("enumerate_syt: shape with " + std::to_string(n) +
                              " boxes exceeds the cutoff of " + std::to_string(box_cutoff),
                          box_cutoff);
    }
    auto cells = skew_cells(shape);
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);

    FillState st;
    st.left.resize(cells.size());
    st.up.resize(cells.size());
    st.filled.assign(cells.size(), false);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto [r, c] = cells[i];
        auto l = index.find({r, c - 1});
        auto u = index.find({r - 1, c});
        st.left[i] = l == index.end() ? -1 : l->second;
        st.up[i] = u == index.end() ? -1 : u->second;
    }
    st.place(0, n);
    return Int(st.completions);
}

Int involution_count(unsigned n) {
    Int prev2 = 1, prev1 = 1; // I(0), I(1)
    if (n == 0) return prev2;
    for (unsigned k = 2; k <= n; ++k) {
        Int cur = prev1 + Int(k - 1) * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

std::vector<Permutation> enumerate_involutions(unsigned n, unsigned perm_cutoff) {
    if (n > perm_cutoff) {
        throw CutoffError("enumerate_involutions: n = " + std::to_string(n) +
                              " exceeds the permutation-scan cutoff of " +
                              std::to_string(perm_cutoff),
                          perm_cutoff);
    }
    std::vector<Permutation> out;
    Permutation w = Permutation::identity(n);
    do {
        if (w.is_involution()) out.push_back(w);
    } while (std::next_permutation(w.one_line.begin(), w.one_line.end()));
    return out;
}

} // namespace cq
