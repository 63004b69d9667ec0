#pragma once

#include "qbound/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qbound {

/// Exponent vector, positionally aligned with a variable list.
using Mono = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex with earlier
/// variables more significant. Fixes all canonical forms in the library.
struct GrlexLess {
    bool operator()(const Mono &a, const Mono &b) const;
};

/// Sparse multivariate polynomial over Rational.
///
/// The variable list is kept sorted by name and minimal (variables that no
/// term uses are dropped), so structurally equal polynomials compare equal
/// regardless of how they were built. Binary operations align both operands
/// to the union variable set first.
class MultiPoly {
  public:
    MultiPoly() = default;
    MultiPoly(long c) : MultiPoly(Rational(c)) {}
    explicit MultiPoly(const Rational &c);
    static MultiPoly var(const std::string &name, int exponent = 1);

    /// Parses "+ - * ^ ( )" arithmetic over rational literals ("5", "3/4")
    /// and identifiers. Juxtaposition multiplies ("2g" == "2*g").
    static MultiPoly parse(const std::string &text);

    const std::vector<std::string> &vars() const { return vars_; }
    const std::map<Mono, Rational, GrlexLess> &terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;

    int total_degree() const; // zero polynomial: -1
    int degree(const std::string &var) const;

    Rational leading_coeff() const; // grlex-largest term; zero poly: 0
    Mono leading_mono() const;

    MultiPoly operator-() const;
    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    MultiPoly &operator*=(const Rational &c);
    friend MultiPoly operator*(MultiPoly a, const Rational &c) { return a *= c; }
    friend MultiPoly operator*(const Rational &c, MultiPoly a) { return a *= c; }
    MultiPoly pow(int e) const;

    friend bool operator==(const MultiPoly &a, const MultiPoly &b);
    friend bool operator!=(const MultiPoly &a, const MultiPoly &b) { return !(a == b); }

    /// Substitutes `value` for `var` and expands.
    MultiPoly subst(const std::string &var, const MultiPoly &value) const;
    /// Evaluates with every variable bound.
    Rational eval(const std::map<std::string, Rational> &point) const;
    /// Binds a subset of the variables.
    MultiPoly eval_partial(const std::map<std::string, Rational> &point) const;

    /// Coefficient of var^k, as a polynomial in the remaining variables.
    MultiPoly coeff_wrt(const std::string &var, int k) const;
    Rational coeff(const std::map<std::string, int> &mono) const;

    /// Quotient when `divisor` divides exactly; nullopt otherwise.
    std::optional<MultiPoly> divide_exact(const MultiPoly &divisor) const;

    /// content * primitive decomposition over Q: primitive has coprime
    /// integer coefficients and positive grlex-leading coefficient.
    Rational content() const;
    MultiPoly primitive() const;

    std::string str() const;

  private:
    std::vector<std::string> vars_;
    std::map<Mono, Rational, GrlexLess> terms_;

    void add_term(const Mono &m, const Rational &c);
    void compact();
    static void align(MultiPoly &a, MultiPoly &b);
    MultiPoly mapped_to(const std::vector<std::string> &new_vars) const;

    friend MultiPoly gcd(const MultiPoly &a, const MultiPoly &b);
};

/// Polynomial gcd, normalized primitive (coprime integer coefficients,
/// positive leading coefficient). gcd(0,0) = 0.
MultiPoly gcd(const MultiPoly &a, const MultiPoly &b);

} // namespace qbound
