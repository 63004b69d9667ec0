#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qbound {

using BigInt = mpz_class;

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational number. Always stored reduced with a
/// positive denominator; zero is 0/1.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const BigInt &n) : q_(n) {}
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0)
            throw ArithmeticError("Rational: zero denominator");
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "a" or "a/b" (optional sign, arbitrary precision).
    static Rational parse(const std::string &text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw ArithmeticError("Rational: cannot parse '" + text + "'");
        q.canonicalize();
        return Rational(std::move(q));
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Largest integer <= value.
    BigInt floor() const {
        BigInt r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    BigInt ceil() const {
        BigInt r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    Rational pow(long e) const {
        if (e < 0) {
            if (is_zero())
                throw ArithmeticError("Rational: 0 to a negative power");
            return inverse().pow(-e);
        }
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(std::move(r));
    }

    Rational inverse() const {
        if (is_zero())
            throw ArithmeticError("Rational: division by zero");
        return Rational(den(), num());
    }

    Rational abs() const { return sign() < 0 ? Rational(-q_) : *this; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero())
            throw ArithmeticError("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational &a, const Rational &b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational &a, const Rational &b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational &a, const Rational &b) { return a.q_ >= b.q_; }

    std::string str() const { return q_.get_str(); }

  private:
    mpq_class q_;
};

inline Rational gcd(const Rational &a, const Rational &b) {
    // gcd over Q in the content sense: gcd(n1/d1, n2/d2) = gcd(n1,n2)/lcm(d1,d2)
    BigInt n, l;
    mpz_gcd(n.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational(n, l);
}

inline BigInt binomial(const BigInt &n, unsigned long k) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace qbound
