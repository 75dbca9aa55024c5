#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "cq/error.hpp"

namespace cq {

// All counting arithmetic is exact. Floating point appears only in the
// asymptotic-ratio computations of orbits.hpp.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string dec(const Int& v);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

/// n! / (parts[0]! * parts[1]! * ...). Requires sum(parts) == n; zero parts
/// are allowed (they contribute a factor of 0! = 1).
Int multinomial(unsigned n, const std::vector<unsigned>& parts);

/// Dense integer-coefficient univariate polynomial, coefficients stored by
/// ascending power. Canonical form: no trailing zero coefficient; the zero
/// polynomial stores nothing and has no degree.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly constant(Int c);
    static IntPoly one() { return constant(1); }

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const;
    Int coeff(std::size_t i) const;

    Int eval(const Int& x) const;

    IntPoly scaled(const Int& factor) const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    /// Display form by descending power, e.g. "3q^2+14q+3". Zero -> "0".
    std::string str(const std::string& var = "q") const;

private:
    void normalize();

    std::vector<Int> c_;
};

/// True iff the dense coefficient sequence rises weakly and then falls
/// weakly. The zero polynomial counts as unimodal.
bool is_unimodal(const IntPoly& p);

} // namespace cq
