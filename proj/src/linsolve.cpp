#include "qbound/linsolve.hpp"

namespace qbound {

namespace detail {

bool bareiss(std::vector<std::vector<MultiPoly>> &m) {
    const size_t n = m.size();
    MultiPoly prev(Rational(1));
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && m[r][k].is_zero())
                ++r;
            if (r == n)
                return false;
            std::swap(m[k], m[r]);
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < m[i].size(); ++j) {
                MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = num.divide_exact(prev);
                if (!q)
                    throw ArithmeticError("bareiss: exact division failed");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly();
        }
        prev = m[k][k];
    }
    return true;
}

} // namespace detail

namespace {

std::vector<std::vector<MultiPoly>> cleared_augmented(const std::vector<std::vector<RatFunc>> &a,
                                                      const std::vector<RatFunc> *b) {
    const size_t n = a.size();
    std::vector<std::vector<MultiPoly>> m(n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw ArithmeticError("solve_linear_system: matrix must be square");
        MultiPoly lcm(Rational(1));
        for (const auto &e : a[i])
            lcm *= e.den();
        if (b)
            lcm *= (*b)[i].den();
        for (const auto &e : a[i])
            m[i].push_back(*((e.num() * lcm).divide_exact(e.den())));
        if (b)
            m[i].push_back(*(((*b)[i].num() * lcm).divide_exact((*b)[i].den())));
    }
    return m;
}

} // namespace

std::vector<RatFunc> solve_linear_system(const std::vector<std::vector<RatFunc>> &a,
                                         const std::vector<RatFunc> &b) {
    const size_t n = a.size();
    if (b.size() != n)
        throw ArithmeticError("solve_linear_system: rhs size mismatch");
    if (n == 0)
        return {};
    auto m = cleared_augmented(a, &b);
    if (!detail::bareiss(m))
        throw SingularSystem("solve_linear_system: zero determinant");
    std::vector<RatFunc> x(n);
    for (size_t ii = n; ii-- > 0;) {
        RatFunc acc{MultiPoly(m[ii][n])};
        for (size_t j = ii + 1; j < n; ++j)
            acc -= RatFunc(m[ii][j]) * x[j];
        x[ii] = acc / RatFunc(m[ii][ii]);
    }
    return x;
}

RatFunc determinant(const std::vector<std::vector<RatFunc>> &a) {
    const size_t n = a.size();
    if (n == 0)
        return RatFunc(Rational(1));
    // det of the cleared matrix, divided by the row scaling factors
    RatFunc scale(Rational(1));
    for (size_t i = 0; i < n; ++i) {
        MultiPoly lcm(Rational(1));
        for (const auto &e : a[i])
            lcm *= e.den();
        scale *= RatFunc(lcm);
    }
    auto m = cleared_augmented(a, nullptr);
    // track row swaps for the sign
    int sign = 1;
    MultiPoly prev(Rational(1));
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && m[r][k].is_zero())
                ++r;
            if (r == n)
                return RatFunc();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = *num.divide_exact(prev);
            }
            m[i][k] = MultiPoly();
        }
        prev = m[k][k];
    }
    RatFunc det{MultiPoly(m[n - 1][n - 1])};
    if (sign < 0)
        det = -det;
    return det / scale;
}

std::vector<RatFunc> residual_vector(const std::vector<std::vector<RatFunc>> &a,
                                     const std::vector<RatFunc> &b,
                                     const std::vector<RatFunc> &x) {
    std::vector<RatFunc> r;
    for (size_t i = 0; i < a.size(); ++i) {
        RatFunc acc = b[i];
        for (size_t j = 0; j < a[i].size(); ++j)
            acc -= a[i][j] * x[j];
        r.push_back(acc);
    }
    return r;
}

} // namespace qbound
