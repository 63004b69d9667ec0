#include "qbound/chow.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qbound {

// --- CycleClass ---------------------------------------------------------

void CycleClass::add_term(const Mono &m, const RatFunc &c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

static void check_same_context(const CycleClass &a, const CycleClass &b) {
    if (a.context() && b.context() && a.context() != b.context())
        throw ArithmeticError("CycleClass: mixed contexts");
}

CycleClass CycleClass::operator-() const {
    CycleClass r(*this);
    for (auto &[m, c] : r.terms_)
        c = -c;
    return r;
}

CycleClass operator+(const CycleClass &a, const CycleClass &b) {
    check_same_context(a, b);
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.grade() != b.grade())
        throw GradeMismatch("CycleClass: adding grade " + std::to_string(a.grade()) +
                            " to grade " + std::to_string(b.grade()));
    CycleClass r(a);
    for (auto &[m, c] : b.terms_)
        r.add_term(m, c);
    return r;
}

CycleClass operator-(const CycleClass &a, const CycleClass &b) { return a + (-b); }

CycleClass operator*(const CycleClass &a, const CycleClass &b) {
    check_same_context(a, b);
    const ChowContext *ctx = a.context() ? a.context() : b.context();
    CycleClass r(ctx, a.grade() + b.grade());
    if (!ctx)
        return r;
    for (auto &[ma, ca] : a.terms_)
        for (auto &[mb, cb] : b.terms_) {
            Mono m(ma.size());
            for (size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            if (ctx->mono_grade(m) > ctx->top_grade())
                continue; // vanishes above the top grade
            r.add_term(m, ca * cb);
        }
    return r;
}

CycleClass operator*(const RatFunc &s, const CycleClass &a) {
    CycleClass r(a);
    if (s.is_zero())
        return CycleClass(a.context(), a.grade());
    for (auto &[m, c] : r.terms_)
        c *= s;
    return r;
}

CycleClass CycleClass::pow(int e) const {
    if (e < 0)
        throw ArithmeticError("CycleClass: negative power");
    if (!ctx_)
        throw ArithmeticError("CycleClass: pow on null context");
    CycleClass r = ctx_->scalar(RatFunc(Rational(1)));
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

bool operator==(const CycleClass &a, const CycleClass &b) {
    check_same_context(a, b);
    const ChowContext *ctx = a.context() ? a.context() : b.context();
    if (!ctx)
        return a.is_zero() && b.is_zero();
    CycleClass na = ctx->normal_form(a), nb = ctx->normal_form(b);
    if (na.is_zero() && nb.is_zero())
        return true;
    if (na.grade() != nb.grade())
        return false;
    return na.terms_ == nb.terms_;
}

std::string CycleClass::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg)
                out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg)
            cs = cs.substr(1);
        std::string mono = ctx_ ? ctx_->render_mono(m) : "";
        bool simple = cs.find_first_of("+-") == std::string::npos ||
                      (cs.find_first_of("+-", 1) == std::string::npos && cs[0] != '(');
        if (mono.empty()) {
            out << (simple ? cs : "(" + cs + ")");
        } else if (cs == "1") {
            out << mono;
        } else {
            out << (simple ? cs : "(" + cs + ")") << "*" << mono;
        }
    }
    return out.str();
}

// --- ChowContext --------------------------------------------------------

void ChowContext::add_generator(const std::string &name, int grade, bool base) {
    if (has_generator(name))
        throw ArithmeticError("ChowContext: duplicate generator " + name);
    gens_.push_back({name, grade, base});
    gen_names_.push_back(name);
}

bool ChowContext::has_generator(const std::string &name) const {
    return std::find(gen_names_.begin(), gen_names_.end(), name) != gen_names_.end();
}

size_t ChowContext::gen_index(const std::string &name) const {
    auto it = std::find(gen_names_.begin(), gen_names_.end(), name);
    if (it == gen_names_.end())
        throw UnknownGenerator("ChowContext '" + name_ + "': unknown generator " + name);
    return size_t(it - gen_names_.begin());
}

int ChowContext::generator_grade(const std::string &name) const {
    return gens_[gen_index(name)].grade;
}

Mono ChowContext::make_mono(const std::map<std::string, int> &exponents) const {
    Mono m(gens_.size(), 0);
    for (auto &[name, e] : exponents) {
        if (e < 0)
            throw ArithmeticError("ChowContext: negative exponent");
        m[gen_index(name)] = e;
    }
    return m;
}

CycleClass ChowContext::gen(const std::string &name) const {
    size_t i = gen_index(name);
    CycleClass c(this, gens_[i].grade);
    Mono m(gens_.size(), 0);
    m[i] = 1;
    c.add_term(m, RatFunc(Rational(1)));
    return c;
}

CycleClass ChowContext::scalar(const RatFunc &value) const {
    CycleClass c(this, 0);
    c.add_term(Mono(gens_.size(), 0), value);
    return c;
}

CycleClass ChowContext::mono(const std::map<std::string, int> &exponents,
                             const RatFunc &coeff) const {
    Mono m = make_mono(exponents);
    CycleClass c(this, mono_grade(m));
    c.add_term(m, coeff);
    return c;
}

int ChowContext::mono_grade(const Mono &m) const {
    int g = 0;
    for (size_t i = 0; i < m.size(); ++i)
        g += m[i] * gens_[i].grade;
    return g;
}

int ChowContext::mono_base_grade(const Mono &m) const {
    int g = 0;
    for (size_t i = 0; i < m.size(); ++i)
        if (gens_[i].base)
            g += m[i] * gens_[i].grade;
    return g;
}

void ChowContext::add_rewrite(const std::map<std::string, int> &pattern,
                              const CycleClass &replacement) {
    Mono p = make_mono(pattern);
    if (!replacement.is_zero() && replacement.grade() != mono_grade(p))
        throw GradeMismatch("ChowContext: rewrite is not grade-homogeneous");
    rewrites_.push_back({p, replacement});
}

void ChowContext::add_eval_rule(const std::map<std::string, int> &mono, const RatFunc &value) {
    Mono m = make_mono(mono);
    if (mono_grade(m) != top_grade_)
        throw GradeMismatch("ChowContext: evaluation rule must have top grade");
    eval_rules_[m] = value;
}

CycleClass ChowContext::normal_form(const CycleClass &c, int max_depth) const {
    CycleClass out(this, c.grade());
    struct Item {
        Mono m;
        RatFunc coeff;
        int depth;
    };
    std::deque<Item> work;
    for (auto &[m, coeff] : c.terms())
        work.push_back({m, coeff, 0});
    while (!work.empty()) {
        Item it = std::move(work.front());
        work.pop_front();
        if (it.depth > max_depth)
            throw NonTerminating("ChowContext '" + name_ + "': rewrite depth exceeded");
        if (mono_grade(it.m) > top_grade_)
            continue;
        if (base_cap_ >= 0 && mono_base_grade(it.m) > base_cap_)
            continue;
        const Rewrite *hit = nullptr;
        for (const auto &rw : rewrites_) {
            bool match = true;
            for (size_t i = 0; i < it.m.size(); ++i)
                if (it.m[i] < rw.pattern[i]) {
                    match = false;
                    break;
                }
            if (match) {
                hit = &rw;
                break;
            }
        }
        if (!hit) {
            out.add_term(it.m, it.coeff);
            continue;
        }
        Mono cof = it.m;
        for (size_t i = 0; i < cof.size(); ++i)
            cof[i] -= hit->pattern[i];
        for (auto &[rm, rc] : hit->replacement.terms()) {
            Mono nm = cof;
            for (size_t i = 0; i < nm.size(); ++i)
                nm[i] += rm[i];
            work.push_back({std::move(nm), it.coeff * rc, it.depth + 1});
        }
    }
    return out;
}

RatFunc ChowContext::integrate(const CycleClass &c) const {
    if (c.is_zero())
        return RatFunc();
    if (c.grade() != top_grade_)
        throw GradeMismatch("integrate: class has grade " + std::to_string(c.grade()) +
                            ", top grade is " + std::to_string(top_grade_));
    CycleClass nf = normal_form(c);
    RatFunc r;
    for (auto &[m, coeff] : nf.terms()) {
        auto it = eval_rules_.find(m);
        if (it == eval_rules_.end())
            throw ArithmeticError("integrate: no evaluation rule for monomial " + render_mono(m) +
                                  " in context " + name_);
        r += coeff * it->second;
    }
    return r;
}

std::string ChowContext::render_mono(const Mono &m) const {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        if (gens_[i].base)
            s += "p*(" + gens_[i].name + ")";
        else
            s += gens_[i].name;
        if (m[i] > 1)
            s += "^" + std::to_string(m[i]);
    }
    return s;
}

uint64_t ChowContext::hash() const {
    std::ostringstream blob;
    blob << name_ << "|top" << top_grade_ << "|cap" << base_cap_ << "|";
    for (auto &g : gens_)
        blob << g.name << ":" << g.grade << (g.base ? "b" : "f") << ";";
    blob << "|rw|";
    for (auto &rw : rewrites_) {
        for (int e : rw.pattern)
            blob << e << ",";
        blob << "->" << rw.replacement.str() << ";";
    }
    blob << "|ev|";
    for (auto &[m, v] : eval_rules_) {
        for (int e : m)
            blob << e << ",";
        blob << "->" << v.str() << ";";
    }
    const std::string s = blob.str();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

// --- bundle operations ---------------------------------------------------

std::vector<CycleClass> chern_of_twisted_bundle(const ChowContext &ctx,
                                                const std::vector<CycleClass> &chern,
                                                const CycleClass &twist, int rank) {
    if (int(chern.size()) > rank)
        throw ArithmeticError("chern_of_twisted_bundle: more classes than the rank");
    auto cj = [&](int j) -> CycleClass {
        if (j == 0)
            return ctx.scalar(RatFunc(Rational(1)));
        if (j <= int(chern.size()))
            return chern[size_t(j - 1)];
        return ctx.zero(j);
    };
    std::vector<CycleClass> out;
    for (int k = 1; k <= rank; ++k) {
        CycleClass acc = ctx.zero(k);
        for (int j = 0; j <= k; ++j) {
            Rational binom(binomial(BigInt(rank - j), static_cast<unsigned long>(k - j)));
            if (binom.is_zero())
                continue;
            CycleClass term = cj(j) * twist.pow(k - j);
            acc += RatFunc(binom) * term;
        }
        out.push_back(acc);
    }
    return out;
}

std::vector<CycleClass> segre_classes(const ChowContext &ctx,
                                      const std::vector<CycleClass> &chern, int up_to) {
    auto ci = [&](int i) -> CycleClass {
        if (i <= int(chern.size()) && i >= 1)
            return chern[size_t(i - 1)];
        return ctx.zero(i);
    };
    std::vector<CycleClass> s; // s[k-1] = s_k
    for (int k = 1; k <= up_to; ++k) {
        CycleClass acc = ctx.zero(k);
        for (int i = 1; i <= k; ++i) {
            CycleClass prev = (k - i == 0) ? ctx.scalar(RatFunc(Rational(1))) : s[size_t(k - i - 1)];
            CycleClass term = ci(i) * prev;
            if (i % 2 == 0)
                term = -term;
            acc += term;
        }
        s.push_back(acc);
    }
    return s;
}

// --- ChernSeries ---------------------------------------------------------

ChernSeries::ChernSeries(const ChowContext *ctx, int truncate_at) : ctx_(ctx) {
    for (int g = 0; g <= truncate_at; ++g)
        parts_.push_back(ctx->zero(g));
}

ChernSeries ChernSeries::one(const ChowContext *ctx, int truncate_at) {
    ChernSeries s(ctx, truncate_at);
    s[0] = ctx->scalar(RatFunc(Rational(1)));
    return s;
}

ChernSeries operator*(const ChernSeries &a, const ChernSeries &b) {
    ChernSeries r(a.ctx_, a.truncation());
    for (int g = 0; g <= r.truncation(); ++g)
        for (int i = 0; i <= g; ++i)
            if (!a[i].is_zero() && !b[g - i].is_zero())
                r[g] += a[i] * b[g - i];
    return r;
}

ChernSeries ChernSeries::inverse() const {
    const CycleClass &c0 = parts_[0];
    if (c0.terms().size() != 1 || c0.terms().begin()->second.is_zero())
        throw ArithmeticError("ChernSeries::inverse: degree-0 part must be a nonzero scalar");
    RatFunc a0 = c0.terms().begin()->second;
    ChernSeries inv(ctx_, truncation());
    inv[0] = ctx_->scalar(RatFunc(Rational(1)) / a0);
    for (int g = 1; g <= truncation(); ++g) {
        CycleClass acc = ctx_->zero(g);
        for (int i = 1; i <= g; ++i)
            if (!parts_[size_t(i)].is_zero() && !inv[g - i].is_zero())
                acc += parts_[size_t(i)] * inv[g - i];
        inv[g] = (RatFunc(Rational(-1)) / a0) * acc;
    }
    return inv;
}

} // namespace qbound
