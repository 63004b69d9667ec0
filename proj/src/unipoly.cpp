#include "qbound/unipoly.hpp"

#include <algorithm>

namespace qbound {

UniPoly::UniPoly(std::string var, std::vector<Rational> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

UniPoly UniPoly::from_multipoly(const MultiPoly &p, const std::string &var) {
    for (const auto &v : p.vars())
        if (v != var)
            throw ArithmeticError("UniPoly: polynomial not univariate in " + var + ": " + p.str());
    std::vector<Rational> cs(size_t(p.degree(var) + 1), Rational(0));
    for (int k = 0; k <= p.degree(var); ++k)
        cs[size_t(k)] = p.coeff_wrt(var, k).constant_value();
    return UniPoly(var, std::move(cs));
}

UniPoly UniPoly::parse(const std::string &text, const std::string &var) {
    return from_multipoly(MultiPoly::parse(text), var);
}

MultiPoly UniPoly::to_multipoly() const {
    MultiPoly p;
    for (size_t k = 0; k < c_.size(); ++k)
        p += MultiPoly(c_[k]) * MultiPoly::var(var_, int(k));
    return p;
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto &x : r.c_)
        x = -x;
    return r;
}

UniPoly operator+(const UniPoly &a, const UniPoly &b) {
    UniPoly r(a.var_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = a.coeff(int(i)) + b.coeff(int(i));
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly &a, const UniPoly &b) { return a + (-b); }

UniPoly operator*(const UniPoly &a, const UniPoly &b) {
    if (a.is_zero() || b.is_zero())
        return UniPoly(a.var_);
    UniPoly r(a.var_);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

UniPoly operator*(const UniPoly &a, const Rational &s) {
    UniPoly r(a);
    for (auto &x : r.c_)
        x *= s;
    r.trim();
    return r;
}

Rational UniPoly::eval(const Rational &x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    UniPoly r(var_);
    for (size_t k = 1; k < c_.size(); ++k)
        r.c_.push_back(c_[k] * Rational(long(k)));
    r.trim();
    return r;
}

UniPoly UniPoly::shift(const Rational &a) const {
    UniPoly lin(var_, {a, Rational(1)}); // t + a
    UniPoly r(var_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * lin + UniPoly(var_, {*it});
    return r;
}

MultiPoly UniPoly::compose(const MultiPoly &inner) const {
    MultiPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * inner + MultiPoly(*it);
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly &d) const {
    if (d.is_zero())
        throw ArithmeticError("UniPoly: division by zero");
    UniPoly q(var_), r(*this);
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rational f = r.leading_coeff() / d.leading_coeff();
        UniPoly t(var_);
        t.c_.assign(size_t(k + 1), Rational(0));
        t.c_.back() = f;
        q = q + t;
        r = r - t * d;
    }
    return {q, r};
}

UniPoly gcd(const UniPoly &a, const UniPoly &b) {
    UniPoly x(a), y(b);
    while (!y.is_zero()) {
        UniPoly r = x.divrem(y).second;
        x = y;
        y = r;
    }
    if (!x.is_zero())
        x = x * x.leading_coeff().inverse(); // monic
    return x;
}

UniPoly UniPoly::squarefree_part() const {
    if (degree() <= 1)
        return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() == 0)
        return *this;
    return divrem(g).first;
}

std::vector<UniPoly> UniPoly::sturm_chain() const {
    std::vector<UniPoly> chain;
    UniPoly p0 = squarefree_part();
    if (p0.is_zero())
        return chain;
    chain.push_back(p0);
    UniPoly p1 = p0.derivative();
    while (!p1.is_zero()) {
        chain.push_back(p1);
        UniPoly r = -(p0.divrem(p1).second);
        p0 = p1;
        p1 = r;
    }
    return chain;
}

int UniPoly::variations(const std::vector<UniPoly> &chain, const Rational &x) {
    int v = 0, prev = 0;
    for (const auto &p : chain) {
        int s = p.eval(x).sign();
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

int UniPoly::variations_at_infinity(const std::vector<UniPoly> &chain, int dir) {
    int v = 0, prev = 0;
    for (const auto &p : chain) {
        int s = p.leading_coeff().sign();
        if (dir < 0 && p.degree() % 2 == 1)
            s = -s;
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

int UniPoly::count_roots(const Rational &a, const Rational &b) const {
    auto chain = sturm_chain();
    if (chain.empty())
        return 0;
    return variations(chain, a) - variations(chain, b);
}

int UniPoly::count_real_roots() const {
    auto chain = sturm_chain();
    if (chain.empty())
        return 0;
    return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

std::vector<std::pair<Rational, Rational>> UniPoly::isolate_real_roots() const {
    if (is_zero())
        throw ArithmeticError("isolate_real_roots: zero polynomial");
    UniPoly p = squarefree_part();
    if (p.degree() == 0)
        return {};
    auto chain = p.sturm_chain();

    // Cauchy bound: all roots lie in (-M, M)
    Rational M(1);
    for (int k = 0; k < p.degree(); ++k) {
        Rational q = (p.coeff(k) / p.leading_coeff()).abs();
        if (q > M)
            M = q;
    }
    M += Rational(1);
    while (p.eval(M).is_zero() || p.eval(-M).is_zero())
        M += Rational(1);

    std::vector<std::pair<Rational, Rational>> out;
    struct Seg {
        Rational a, b;
        int n;
    };
    std::vector<Seg> stack;
    auto vcount = [&](const Rational &a, const Rational &b) {
        return variations(chain, a) - variations(chain, b);
    };
    stack.push_back({-M, M, vcount(-M, M)});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0)
            continue;
        if (s.n == 1) {
            out.emplace_back(s.a, s.b);
            continue;
        }
        Rational m = (s.a + s.b) / Rational(2);
        if (p.eval(m).is_zero()) {
            // rational root at the midpoint: shrink a window around it
            Rational delta = (s.b - s.a) / Rational(4);
            while (vcount(m - delta, m + delta) != 1 || p.eval(m - delta).is_zero() ||
                   p.eval(m + delta).is_zero())
                delta /= Rational(2);
            out.emplace_back(m - delta, m + delta);
            stack.push_back({s.a, m - delta, vcount(s.a, m - delta)});
            stack.push_back({m + delta, s.b, vcount(m + delta, s.b)});
        } else {
            stack.push_back({s.a, m, vcount(s.a, m)});
            stack.push_back({m, s.b, vcount(m, s.b)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto &l, const auto &r) { return l.first < r.first; });
    return out;
}

UniPoly binomial_poly(long shift, long choose, const std::string &var) {
    if (choose < 0)
        throw ArithmeticError("binomial_poly: choose must be >= 0");
    UniPoly r(var, {Rational(1)});
    for (long i = 0; i < choose; ++i)
        r = r * UniPoly(var, {Rational(shift - i), Rational(1)});
    return r * Rational(BigInt(1), factorial(static_cast<unsigned long>(choose)));
}

BigInt max_integer_where_nonpositive(const UniPoly &p, const BigInt &search_from) {
    if (p.is_zero() || p.leading_coeff().sign() <= 0)
        throw ArithmeticError("max_integer_where_nonpositive: positive leading coefficient required");
    auto roots = p.isolate_real_roots();
    if (roots.empty())
        throw NoSuchInteger("polynomial is positive everywhere");
    BigInt top = roots.back().second.floor();
    if (top < search_from)
        throw NoSuchInteger("polynomial is positive on [search_from, oo)");
    for (BigInt n = top; n >= search_from; --n)
        if (p.eval(Rational(n)).sign() <= 0)
            return n;
    throw NoSuchInteger("no integer t >= search_from has p(t) <= 0");
}

} // namespace qbound
