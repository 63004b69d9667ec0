#pragma once

#include "qbound/ratfunc.hpp"

#include <cstdint>
#include <functional>
#include <memory>

namespace qbound {

struct GradeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonTerminating : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownGenerator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ChowContext;

/// Homogeneous cycle class: a formal sum of monomials in the context's
/// generators with RatFunc coefficients, all of one grade.
class CycleClass {
  public:
    CycleClass() : ctx_(nullptr), grade_(0) {}
    CycleClass(const ChowContext *ctx, int grade) : ctx_(ctx), grade_(grade) {}

    const ChowContext *context() const { return ctx_; }
    int grade() const { return grade_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, RatFunc> &terms() const { return terms_; }

    CycleClass operator-() const;
    friend CycleClass operator+(const CycleClass &a, const CycleClass &b);
    friend CycleClass operator-(const CycleClass &a, const CycleClass &b);
    friend CycleClass operator*(const CycleClass &a, const CycleClass &b);
    friend CycleClass operator*(const RatFunc &s, const CycleClass &a);
    friend CycleClass operator*(const CycleClass &a, const RatFunc &s) { return s * a; }
    CycleClass &operator+=(const CycleClass &o) { return *this = *this + o; }
    CycleClass &operator-=(const CycleClass &o) { return *this = *this - o; }
    CycleClass &operator*=(const CycleClass &o) { return *this = *this * o; }
    CycleClass pow(int e) const;

    /// Structural equality of normal forms.
    friend bool operator==(const CycleClass &a, const CycleClass &b);
    friend bool operator!=(const CycleClass &a, const CycleClass &b) { return !(a == b); }

    std::string str() const;

  private:
    const ChowContext *ctx_;
    int grade_;
    std::map<Mono, RatFunc> terms_;

    void add_term(const Mono &m, const RatFunc &c);
    friend class ChowContext;
};

/// A declared graded ring with rewrite relations and top-grade evaluation
/// rules. Monomials whose pulled-back (base) grade exceeds the base cap are
/// zero; rewrite patterns fire on any monomial that contains them; a class
/// of top grade integrates to a RatFunc in the declared base symbols.
class ChowContext {
  public:
    struct Rewrite {
        Mono pattern;
        CycleClass replacement;
    };

    ChowContext(std::string name, int top_grade, int base_grade_cap = -1)
        : name_(std::move(name)), top_grade_(top_grade), base_cap_(base_grade_cap) {}

    void add_generator(const std::string &name, int grade, bool base = false);
    void add_rewrite(const std::map<std::string, int> &pattern, const CycleClass &replacement);
    void add_eval_rule(const std::map<std::string, int> &mono, const RatFunc &value);

    const std::string &name() const { return name_; }
    int top_grade() const { return top_grade_; }
    size_t generator_count() const { return gens_.size(); }
    bool has_generator(const std::string &name) const;
    int generator_grade(const std::string &name) const;
    const std::vector<std::string> &generator_names() const { return gen_names_; }

    /// The class of a single generator.
    CycleClass gen(const std::string &name) const;
    /// Grade-0 scalar class.
    CycleClass scalar(const RatFunc &value) const;
    CycleClass zero(int grade) const { return CycleClass(this, grade); }
    /// Monomial with coefficient.
    CycleClass mono(const std::map<std::string, int> &exponents, const RatFunc &coeff) const;

    int mono_grade(const Mono &m) const;
    int mono_base_grade(const Mono &m) const;

    /// Fixed point of the rewrite system (deterministic; throws
    /// NonTerminating past the depth bound).
    CycleClass normal_form(const CycleClass &c, int max_depth = 256) const;

    /// Evaluation of a top-grade class through the evaluation rules.
    RatFunc integrate(const CycleClass &c) const;

    /// FNV-1a fingerprint of generators, relations and evaluation rules.
    uint64_t hash() const;

    std::string render_mono(const Mono &m) const;

  private:
    std::string name_;
    int top_grade_;
    int base_cap_;
    struct GenInfo {
        std::string name;
        int grade;
        bool base;
    };
    std::vector<GenInfo> gens_;
    std::vector<std::string> gen_names_;
    std::vector<Rewrite> rewrites_;
    std::map<Mono, RatFunc> eval_rules_;

    size_t gen_index(const std::string &name) const;
    Mono make_mono(const std::map<std::string, int> &exponents) const;

    friend class CycleClass;
};

/// Chern classes of F (x) L from those of F: c_k(F(x)L) =
/// sum_j C(rank-j, k-j) c_j(F) * twist^(k-j). chern[i] is c_{i+1}(F);
/// missing entries are zero. Returns c_1..c_rank of the twisted bundle.
std::vector<CycleClass> chern_of_twisted_bundle(const ChowContext &ctx,
                                                const std::vector<CycleClass> &chern,
                                                const CycleClass &twist, int rank);

/// Segre classes s_1..s_up_to from the formal inverse convention
/// s_k = sum_{i=1..k} (-1)^(i+1) c_i s_{k-i} (so s_2 = c1^2 - c2, ...).
std::vector<CycleClass> segre_classes(const ChowContext &ctx,
                                      const std::vector<CycleClass> &chern, int up_to);

/// Graded total class (index = grade), for Whitney-product manipulations.
class ChernSeries {
  public:
    ChernSeries(const ChowContext *ctx, int truncate_at);
    static ChernSeries one(const ChowContext *ctx, int truncate_at);

    CycleClass &operator[](int g) { return parts_.at(size_t(g)); }
    const CycleClass &operator[](int g) const { return parts_.at(size_t(g)); }
    int truncation() const { return int(parts_.size()) - 1; }

    friend ChernSeries operator*(const ChernSeries &a, const ChernSeries &b);
    /// Formal inverse (degree-0 part must be a nonzero scalar).
    ChernSeries inverse() const;

  private:
    const ChowContext *ctx_;
    std::vector<CycleClass> parts_;
};

} // namespace qbound
