#pragma once

#include "qbound/chow.hpp"
#include "qbound/unipoly.hpp"

#include <array>

namespace qbound::q6 {

/// Numeric character of a 4-fold in Q6. Entries are polynomials so a record
/// can be fully numeric, fully symbolic (d, g, s, x, v) or mixed.
struct InvariantRecord {
    MultiPoly d, g, s, x, v;

    static InvariantRecord symbolic();
    static InvariantRecord numeric(long d, long g, long s, long x, long v);
    std::map<std::string, MultiPoly> substitution() const;
};

// transcriptions of the displayed closed forms, symbolic in (d, g, s, x, v)
MultiPoly eq_kh3();  // K.H^3
MultiPoly eq_k2h2(); // K^2.H^2
MultiPoly eq_k3h();  // K^3.H
MultiPoly eq_k4();   // K^4
MultiPoly prop25_hilbert(); // chi(O_X(t)), symbolic in t as well

struct Intersections {
    MultiPoly kh3, k2h2, k3h, k4;
};
Intersections canonical_intersections(const InvariantRecord &rec);

/// Re-derives K^2H^2, K^3H and K^4 from the primitive identities (tangent
/// sequence Whitney data, Noether on S, RR on the 3-fold section, adjunction)
/// and returns residuals against the transcribed closed forms.
struct IntersectionDerivation {
    MultiPoly derived_k2h2, derived_k3h, derived_k4;
    MultiPoly residual_k2h2, residual_k3h, residual_k4;
    MultiPoly residual_c2h2_display;  // derived c2.H^2 vs its display
    MultiPoly residual_c2hk_display;  // derived c2.H.K vs its display
};
IntersectionDerivation rederive_intersections();

/// Intersection ring of X in Q6: generators H, K, evaluation per the
/// closed forms above.
const ChowContext &q6_context();
/// Same ring, but K-monomials evaluate to opaque symbols kh3, k2h2, k3h, k4
/// so solving *for* those numbers is possible.
const ChowContext &q6_symbolic_context();

struct Q6Chern {
    CycleClass c2, c3;   // displayed classes, coefficients rational in d
    RatFunc c4_pushdown; // c4 is top degree; the display is its evaluation
                         // against the symbols kh3, k2h2, k3h, k4
};
/// Displayed Chern classes of T_X.
Q6Chern chern_classes_q6();
/// Chern classes recomputed from c(T_Q6)|_X = c(T_X) c(N), with
/// c(T_Q6) itself expanded from (1+h)^8/(1+2h).
struct Q6ChernDerivation {
    CycleClass derived_c2, derived_c3, derived_c4;
    CycleClass residual_c2, residual_c3;
    RatFunc residual_c4;              // pushdown of derived c4 minus display
    RatFunc eq15_display_residual;    // the displayed deg-4 relation vs Whitney
    std::array<Rational, 5> chern_tq6; // degrees 0..4 of c(T_Q6): 1,6,16,24,22
};
Q6ChernDerivation rederive_chern_q6();

/// Substitutes the canonical intersections into Riemann-Roch, solves for
/// K^4 and returns derived-minus-transcribed (expected zero).
MultiPoly verify_riemann_roch();
/// Same with the transcribed K^4 constant-in-(g-1) coefficient perturbed;
/// the detector must report exactly the injected perturbation.
MultiPoly verify_riemann_roch_perturbed(const Rational &delta);

MultiPoly hilbert_polynomial(const InvariantRecord &rec);
UniPoly hilbert_unipoly(long d, long g, long s, long x, long v);

/// Degree-hypothesis check of the CCD bound, certified by exact comparison
/// of d^lcm(1..n-1) powers (no floating point).
bool ccd_applicable(const Rational &d, long s, long n);
struct CcdBound {
    RatFunc bound;              // the five-term genus bound, in d
    bool applicability_known;   // false when d is symbolic
    bool applicable;
};
CcdBound ccd_genus_bound(const RatFunc &d_value, long s, long n);

RatFunc q3_genus_bound(const RatFunc &d_value, long k);

BigInt castelnuovo_pg_bound(const BigInt &d, long n, long k);
Rational castelnuovo_leading(long n, long k); // 1/((k+1)! (n-k)^k)

/// chi(O_Q4(t)) = C(t+5,5) - C(t+3,5).
UniPoly chi_q4_of_t();
/// Displayed closed form of the Prop 2.6 bound, as a polynomial in d.
MultiPoly pg_surface_bound_closed(long sigma);
Rational pg_surface_bound(const Rational &d, long sigma);

struct Prop26Audit {
    Rational Ftilde0;
    Rational closed_form;
    Rational residual_fminus1; // (Ftilde0 - 1) - closed_form
    bool closed_equals_Ftilde0_identically; // symbolic in d at this sigma
    bool diff_below_matches;   // F(t)-F(t-1) = dt + [-d^2/(4s) + (3-s)d/2] piece
    bool diff_at_zero_matches; // the t = 0 piece
};
Prop26Audit prop26_audit(long sigma, const Rational &d);

Rational dec_leading_coefficient(long sigma); // 1/(192 sigma^3)
RatFunc dec_leading_coefficient_sym();        // symbolic in sigma

struct HilbertEnumeration {
    BigInt count;
    std::vector<std::array<Rational, 5>> tuples; // t^4..t^0 coefficients
    bool truncated;                              // tuple list hit the cap
};
HilbertEnumeration enumerate_hilbert_candidates(long d0, size_t max_tuples = 200000);

} // namespace qbound::q6
