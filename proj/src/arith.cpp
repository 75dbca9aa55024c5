#include "cq/arith.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace cq {

std::string dec(const Int& v) {
    return v.str();
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

Int multinomial(unsigned n, const std::vector<unsigned>& parts) {
    unsigned long long sum = 0;
    for (unsigned p : parts) sum += p;
    if (sum != n) {
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) +
                                    ", expected " + std::to_string(n));
    }
    Int r = factorial(n);
    for (unsigned p : parts) r /= factorial(p);
    return r;
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

Int IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Int(0);
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::scaled(const Int& factor) const {
    std::vector<Int> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * factor;
    return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.c_.size()) out[i] += a.c_[i];
        if (i < b.c_.size()) out[i] += b.c_[i];
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(out));
}

std::string IntPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Int& c = c_[k];
        if (c == 0) continue;
        Int mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? '-' : '+');
        }
        if (k == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str();
            out << var;
            if (k > 1) out << '^' << k;
        }
    }
    return out.str();
}

bool is_unimodal(const IntPoly& p) {
    const auto& c = p.coeffs();
    if (c.empty()) return true;
    std::size_t i = 0;
    while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
    while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
    return i + 1 == c.size();
}

} // namespace cq
