#include "qbound/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qbound {

bool GrlexLess::operator()(const Mono &a, const Mono &b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da < db;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i];
    return a.size() < b.size();
}

MultiPoly::MultiPoly(const Rational &c) {
    if (!c.is_zero())
        terms_.emplace(Mono{}, c);
}

MultiPoly MultiPoly::var(const std::string &name, int exponent) {
    if (exponent < 0)
        throw ArithmeticError("MultiPoly: negative exponent");
    MultiPoly p;
    if (exponent == 0)
        return MultiPoly(Rational(1));
    p.vars_ = {name};
    p.terms_.emplace(Mono{exponent}, Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono(vars_.size(), 0));
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        throw ArithmeticError("MultiPoly: not a constant: " + str());
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty())
        return -1;
    const Mono &m = terms_.rbegin()->first;
    return std::accumulate(m.begin(), m.end(), 0);
}

int MultiPoly::degree(const std::string &var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end())
        return is_zero() ? -1 : 0;
    size_t idx = it - vars_.begin();
    int d = is_zero() ? -1 : 0;
    for (auto &[m, c] : terms_)
        d = std::max(d, m[idx]);
    return d;
}

Rational MultiPoly::leading_coeff() const {
    return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

Mono MultiPoly::leading_mono() const {
    return terms_.empty() ? Mono(vars_.size(), 0) : terms_.rbegin()->first;
}

void MultiPoly::add_term(const Mono &m, const Rational &c) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else if (c.is_zero()) {
        terms_.erase(it);
    }
}

void MultiPoly::compact() {
    if (vars_.empty())
        return;
    std::vector<bool> used(vars_.size(), false);
    for (auto &[m, c] : terms_)
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0)
                used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
        return;
    std::vector<std::string> nv;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i])
            nv.push_back(vars_[i]);
    *this = mapped_to(nv);
}

MultiPoly MultiPoly::mapped_to(const std::vector<std::string> &new_vars) const {
    MultiPoly r;
    r.vars_ = new_vars;
    std::vector<int> pos(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        pos[i] = it == new_vars.end() ? -1 : int(it - new_vars.begin());
    }
    for (auto &[m, c] : terms_) {
        Mono nm(new_vars.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (pos[i] < 0)
                throw ArithmeticError("MultiPoly: dropping used variable " + vars_[i]);
            nm[pos[i]] = m[i];
        }
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

void MultiPoly::align(MultiPoly &a, MultiPoly &b) {
    if (a.vars_ == b.vars_)
        return;
    std::vector<std::string> u;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(u));
    a = a.mapped_to(u);
    b = b.mapped_to(u);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto &[m, c] : r.terms_)
        c = -c;
    return r;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
    MultiPoly rhs(o);
    align(*this, rhs);
    for (auto &[m, c] : rhs.terms_)
        add_term(m, c);
    compact();
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) { return *this += -o; }

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
    MultiPoly x(a), y(b);
    MultiPoly::align(x, y);
    MultiPoly r;
    r.vars_ = x.vars_;
    for (auto &[ma, ca] : x.terms_)
        for (auto &[mb, cb] : y.terms_) {
            Mono m(ma.size());
            for (size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    r.compact();
    return r;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o) {
    *this = *this * o;
    return *this;
}

MultiPoly &MultiPoly::operator*=(const Rational &c) {
    if (c.is_zero()) {
        terms_.clear();
        vars_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_)
        v *= c;
    return *this;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0)
        throw ArithmeticError("MultiPoly: negative power");
    MultiPoly r(Rational(1));
    MultiPoly base(*this);
    while (e > 0) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

bool operator==(const MultiPoly &a, const MultiPoly &b) {
    MultiPoly x(a), y(b);
    MultiPoly::align(x, y);
    return x.terms_ == y.terms_;
}

MultiPoly MultiPoly::subst(const std::string &var, const MultiPoly &value) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end())
        return *this;
    int dmax = degree(var);
    // Horner in the substituted variable
    MultiPoly r;
    for (int k = dmax; k >= 0; --k) {
        r = r * value + coeff_wrt(var, k);
    }
    return r;
}

Rational MultiPoly::eval(const std::map<std::string, Rational> &point) const {
    Rational r(0);
    for (auto &[m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw ArithmeticError("MultiPoly::eval: unbound variable " + vars_[i]);
            t *= it->second.pow(m[i]);
        }
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::eval_partial(const std::map<std::string, Rational> &point) const {
    MultiPoly r = *this;
    for (auto &[name, value] : point)
        r = r.subst(name, MultiPoly(value));
    return r;
}

MultiPoly MultiPoly::coeff_wrt(const std::string &var, int k) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end())
        return k == 0 ? *this : MultiPoly();
    size_t idx = it - vars_.begin();
    MultiPoly r;
    r.vars_ = vars_;
    for (auto &[m, c] : terms_)
        if (m[idx] == k) {
            Mono nm = m;
            nm[idx] = 0;
            r.add_term(nm, c);
        }
    r.compact();
    return r;
}

Rational MultiPoly::coeff(const std::map<std::string, int> &mono) const {
    Mono key(vars_.size(), 0);
    for (auto &[name, e] : mono) {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) {
            if (e != 0)
                return Rational(0);
            continue;
        }
        key[it - vars_.begin()] = e;
    }
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly &divisor) const {
    if (divisor.is_zero())
        throw ArithmeticError("MultiPoly: division by zero polynomial");
    MultiPoly r(*this);
    MultiPoly q;
    while (!r.is_zero()) {
        MultiPoly d(divisor);
        align(r, d); // r may have been compacted by the previous step
        const Mono dm = d.leading_mono();
        const Mono rm = r.leading_mono();
        Mono qm(rm.size());
        for (size_t i = 0; i < rm.size(); ++i) {
            qm[i] = rm[i] - dm[i];
            if (qm[i] < 0)
                return std::nullopt;
        }
        MultiPoly t;
        t.vars_ = r.vars_;
        t.terms_.emplace(qm, r.leading_coeff() / d.leading_coeff());
        t.compact();
        q += t;
        r -= t * d;
    }
    return q;
}

Rational MultiPoly::content() const {
    Rational g(0);
    for (auto &[m, c] : terms_)
        g = g.is_zero() ? c.abs() : gcd(g, c);
    if (!g.is_zero() && leading_coeff().sign() < 0)
        g = -g;
    return g;
}

MultiPoly MultiPoly::primitive() const {
    if (is_zero())
        return *this;
    Rational c = content();
    MultiPoly r(*this);
    for (auto &[m, v] : r.terms_)
        v /= c;
    return r;
}

namespace {

// --- multivariate gcd: primitive pseudo-remainder sequence ------------

// coefficients of p viewed as a polynomial in `var`
std::vector<MultiPoly> coeffs_in(const MultiPoly &p, const std::string &var) {
    int d = p.degree(var);
    std::vector<MultiPoly> cs;
    for (int k = 0; k <= std::max(d, 0); ++k)
        cs.push_back(p.coeff_wrt(var, k));
    return cs;
}

MultiPoly from_coeffs(const std::vector<MultiPoly> &cs, const std::string &var) {
    MultiPoly p;
    for (size_t k = 0; k < cs.size(); ++k)
        p += cs[k] * MultiPoly::var(var, int(k));
    return p;
}

// content of p with respect to var (gcd of the coefficient polynomials)
MultiPoly content_wrt(const MultiPoly &p, const std::string &var) {
    MultiPoly g;
    for (auto &c : coeffs_in(p, var))
        if (!c.is_zero())
            g = gcd(g, c);
    return g;
}

// pseudo-remainder of a by b in var (lc(b)^(da-db+1) * a mod b)
MultiPoly prem(MultiPoly a, const MultiPoly &b, const std::string &var) {
    int db = b.degree(var);
    MultiPoly lb = b.coeff_wrt(var, db);
    while (!a.is_zero() && a.degree(var) >= db) {
        int da = a.degree(var);
        MultiPoly la = a.coeff_wrt(var, da);
        a = a * lb - la * MultiPoly::var(var, da - db) * b;
    }
    return a;
}

} // namespace

MultiPoly gcd(const MultiPoly &a, const MultiPoly &b) {
    if (a.is_zero())
        return b.primitive();
    if (b.is_zero())
        return a.primitive();
    if (a.is_constant() || b.is_constant())
        return MultiPoly(Rational(1));

    // main variable: last (grlex-most-significant is first; any deterministic
    // choice works) variable actually occurring
    std::vector<std::string> pool;
    std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                   std::back_inserter(pool));
    const std::string var = pool.back();

    if (a.degree(var) == 0 || b.degree(var) == 0) {
        // gcd is free of var: recurse on the var-contents
        return gcd(content_wrt(a, var), content_wrt(b, var));
    }

    MultiPoly ca = content_wrt(a, var);
    MultiPoly cb = content_wrt(b, var);
    MultiPoly c = gcd(ca, cb);
    MultiPoly A = *a.divide_exact(ca);
    MultiPoly B = *b.divide_exact(cb);
    if (A.degree(var) < B.degree(var))
        std::swap(A, B);
    while (true) {
        if (B.is_zero())
            break;
        if (B.degree(var) == 0) {
            A = MultiPoly(Rational(1)); // primitive parts coprime in var
            break;
        }
        MultiPoly R = prem(A, B, var);
        A = B;
        if (R.is_zero()) {
            break;
        }
        MultiPoly cr = content_wrt(R, var);
        B = *R.divide_exact(cr);
    }
    MultiPoly g = c * (*A.divide_exact(content_wrt(A, var)));
    return g.primitive();
}

// --- parsing -----------------------------------------------------------

namespace {

struct PolyParser {
    const std::string &s;
    size_t i = 0;

    explicit PolyParser(const std::string &text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string &msg) {
        throw ArithmeticError("MultiPoly::parse at " + std::to_string(i) + ": " + msg);
    }

    MultiPoly parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        MultiPoly r = parse_term();
        if (neg)
            r = -r;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++i;
                r += parse_term();
            } else if (c == '-') {
                ++i;
                r -= parse_term();
            } else {
                return r;
            }
        }
    }

    MultiPoly parse_term() {
        MultiPoly r = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++i;
                r *= parse_factor();
            } else if (std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
                r *= parse_factor(); // juxtaposition
            } else {
                return r;
            }
        }
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_atom();
        if (peek() == '^') {
            ++i;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected integer exponent after ^");
            long e = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                e = e * 10 + (s[i++] - '0');
            return base.pow(int(e));
        }
        return base;
    }

    MultiPoly parse_atom() {
        char c = peek();
        if (c == '(') {
            ++i;
            MultiPoly r = parse_expr();
            if (!eat(')'))
                fail("expected )");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly(parse_rational());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                name += s[i++];
            return MultiPoly::var(name);
        }
        fail("unexpected character");
    }

    Rational parse_rational() {
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            digits += s[i++];
        size_t save = i;
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            size_t slash = i++;
            skip_ws();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                std::string den;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    den += s[i++];
                return Rational(BigInt(digits), BigInt(den));
            }
            i = slash; // not a rational literal; '/' not supported otherwise
            fail("'/' is only valid inside a rational literal");
        }
        i = save;
        return Rational(BigInt(digits));
    }
};

} // namespace

MultiPoly MultiPoly::parse(const std::string &text) {
    PolyParser p(text);
    MultiPoly r = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size())
        p.fail("trailing input");
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c] = *it;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0)
                out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        std::string mono;
        for (size_t j = 0; j < m.size(); ++j) {
            if (m[j] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[j];
            if (m[j] > 1)
                mono += "^" + std::to_string(m[j]);
        }
        if (mono.empty()) {
            out << a.str();
        } else {
            if (a != Rational(1))
                out << a.str() << "*";
            out << mono;
        }
    }
    return out.str();
}

} // namespace qbound
