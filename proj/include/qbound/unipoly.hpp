#pragma once

#include "qbound/multipoly.hpp"

#include <utility>
#include <vector>

namespace qbound {

struct NoSuchInteger : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial over Rational, coefficients lowest degree
/// first, leading coefficient nonzero unless the polynomial is zero.
class UniPoly {
  public:
    explicit UniPoly(std::string var = "t") : var_(std::move(var)) {}
    UniPoly(std::string var, std::vector<Rational> coeffs);
    static UniPoly from_multipoly(const MultiPoly &p, const std::string &var);
    static UniPoly parse(const std::string &text, const std::string &var);

    const std::string &var() const { return var_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int k) const { return k >= 0 && k < int(c_.size()) ? c_[k] : Rational(0); }
    Rational leading_coeff() const { return c_.empty() ? Rational(0) : c_.back(); }

    MultiPoly to_multipoly() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator-(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator*(const UniPoly &a, const Rational &s);
    friend bool operator==(const UniPoly &a, const UniPoly &b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const UniPoly &a, const UniPoly &b) { return !(a == b); }

    Rational eval(const Rational &x) const;
    UniPoly derivative() const;
    /// t -> t + a
    UniPoly shift(const Rational &a) const;
    /// t -> inner, expanded
    MultiPoly compose(const MultiPoly &inner) const;

    /// Field division. Returns {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly &d) const;

    UniPoly squarefree_part() const;

    /// Disjoint open rational intervals, one simple root of the squarefree
    /// part in each; every real root is covered (multiple roots once).
    std::vector<std::pair<Rational, Rational>> isolate_real_roots() const;

    /// Sturm chain of the squarefree part.
    std::vector<UniPoly> sturm_chain() const;
    /// Number of distinct real roots in (a, b] by Sturm variations.
    int count_roots(const Rational &a, const Rational &b) const;
    /// Number of distinct real roots on all of R.
    int count_real_roots() const;

    std::string str() const { return to_multipoly().str(); }

  private:
    std::string var_;
    std::vector<Rational> c_;

    void trim();
    static int variations(const std::vector<UniPoly> &chain, const Rational &x);
    static int variations_at_infinity(const std::vector<UniPoly> &chain, int dir);
};

UniPoly gcd(const UniPoly &a, const UniPoly &b);

/// The polynomial C(t + shift, choose), defined for all rational t.
UniPoly binomial_poly(long shift, long choose, const std::string &var = "t");

/// Largest integer t >= search_from with p(t) <= 0. Requires a positive
/// leading coefficient. Throws NoSuchInteger when p > 0 on [search_from, oo).
BigInt max_integer_where_nonpositive(const UniPoly &p, const BigInt &search_from);

} // namespace qbound
