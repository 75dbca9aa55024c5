#pragma once

#include <vector>

#include "cq/arith.hpp"

namespace cq {

/// Rows of the modified Hermite family in the variable y:
/// row 0 = 1, row 1 = y, row k+1 = y (row k + k row k-1).
/// Row k has degree k; its lowest nonzero power is ceil(k/2) for k >= 1.
/// Not thread-safe; the free function hermite_poly wraps a shared table.
class HermiteTable {
public:
    const IntPoly& row(unsigned k);
    unsigned rows_built() const { return static_cast<unsigned>(rows_.size()); }

private:
    std::vector<IntPoly> rows_;
};

IntPoly hermite_poly(unsigned k);

Int hermite_eval(unsigned n, const Int& y0);

/// Value of the n-th row at the positive integer k, computed independently
/// of the polynomial table: the k-fold binomial self-convolution of the
/// involution-count sequence (equivalently, the sum over weak compositions
/// of n into k parts of multinomial(n, parts) * prod involution_count).
/// Serves as the oracle for hermite_eval at positive integers.
Int hermite_via_convolution(unsigned n, unsigned k);

/// Alternating binomial weight sum_{i=0}^{n-r} (-1)^i C(r+i, r), 1 <= r <= n.
Int coeff_a(unsigned n, unsigned r);

/// Orbit count as the weighted sum of row-n evaluations at 1..n. Also
/// evaluates the equivalent un-collected double sum over (k, j) and raises
/// InternalError if the two forms ever disagree.
Int b_via_hermite(unsigned n);

} // namespace cq
