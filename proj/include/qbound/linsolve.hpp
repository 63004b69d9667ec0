#pragma once

#include "qbound/ratfunc.hpp"

#include <vector>

namespace qbound {

struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact solve of A x = b over the rational function field, by fraction-free
/// (Bareiss) elimination on the denominator-cleared augmented matrix.
/// Throws SingularSystem when det A = 0.
std::vector<RatFunc> solve_linear_system(const std::vector<std::vector<RatFunc>> &a,
                                         const std::vector<RatFunc> &b);

/// det A as a rational function (Bareiss, exact).
RatFunc determinant(const std::vector<std::vector<RatFunc>> &a);

/// b - A x, canonicalized; identically zero iff x solves the system.
std::vector<RatFunc> residual_vector(const std::vector<std::vector<RatFunc>> &a,
                                     const std::vector<RatFunc> &b,
                                     const std::vector<RatFunc> &x);

namespace detail {
/// Bareiss forward elimination on an augmented MultiPoly matrix (n rows,
/// >= n columns). Returns false when the leading n x n block is singular.
bool bareiss(std::vector<std::vector<MultiPoly>> &m);
} // namespace detail

} // namespace qbound
