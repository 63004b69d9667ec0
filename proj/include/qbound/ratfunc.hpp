#pragma once

#include "qbound/multipoly.hpp"

namespace qbound {

/// Quotient of multivariate polynomials, kept in canonical form:
/// gcd(num, den) is a unit and den is integer-primitive with positive
/// grlex-leading coefficient.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
    RatFunc(const Rational &c) : num_(c), den_(Rational(1)) {}
    RatFunc(MultiPoly num) : num_(std::move(num)), den_(Rational(1)) { normalize(); }
    RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw ArithmeticError("RatFunc: zero denominator");
        normalize();
    }

    static RatFunc var(const std::string &name) { return RatFunc(MultiPoly::var(name)); }

    const MultiPoly &num() const { return num_; }
    const MultiPoly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == MultiPoly(Rational(1)); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const {
        RatFunc r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc &a, const RatFunc &b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b) {
        if (b.is_zero())
            throw ArithmeticError("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
    RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
    RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
    RatFunc &operator/=(const RatFunc &o) { return *this = *this / o; }

    RatFunc pow(int e) const {
        if (e < 0)
            return RatFunc(Rational(1)) / pow(-e);
        RatFunc r(Rational(1)), b(*this);
        while (e > 0) {
            if (e & 1)
                r *= b;
            e >>= 1;
            if (e)
                b *= b;
        }
        return r;
    }

    /// a/b == c/d iff a*d - c*b == 0.
    friend bool operator==(const RatFunc &a, const RatFunc &b) {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }
    friend bool operator!=(const RatFunc &a, const RatFunc &b) { return !(a == b); }

    RatFunc subst(const std::string &var, const RatFunc &value) const {
        return subst_poly(num_, var, value) / subst_poly(den_, var, value);
    }

    Rational eval(const std::map<std::string, Rational> &point) const {
        Rational d = den_.eval(point);
        if (d.is_zero())
            throw ArithmeticError("RatFunc::eval: denominator vanishes");
        return num_.eval(point) / d;
    }

    std::string str() const {
        if (is_constant())
            return constant_value().str();
        if (is_polynomial())
            return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    MultiPoly num_, den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = MultiPoly(Rational(1));
            return;
        }
        MultiPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
        Rational c = den_.content();
        num_ = num_ * c.inverse();
        den_ = den_ * c.inverse();
    }

    static RatFunc subst_poly(const MultiPoly &p, const std::string &var, const RatFunc &value) {
        int d = p.degree(var);
        if (d <= 0)
            return RatFunc(p);
        RatFunc r;
        for (int k = d; k >= 0; --k)
            r = r * value + RatFunc(p.coeff_wrt(var, k));
        return r;
    }
};

} // namespace qbound
