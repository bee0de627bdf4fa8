#pragma once

#include <memory>
#include <vector>

#include "bruhat/decompose.hpp"
#include "bruhat/finite_field.hpp"
#include "bruhat/matrix.hpp"
#include "bruhat/report.hpp"
#include "bruhat/sampler.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

/// Character chi = chi_1 x ... x chi_n of the diagonal torus with values in
/// k_K, trivial on 1 + pZ_p.  Each factor is determined by c_i = chi_i(p)
/// and a tame exponent e_i: chi_i(u) = unit_residue(u)^{e_i}.
struct Character {
    std::shared_ptr<FiniteField> field;
    std::vector<KKElem> c; // chi_i(p), non-zero
    std::vector<long> e;   // exponents mod p-1

    int n() const { return static_cast<int>(c.size()); }
    unsigned p() const { return field->p(); }

    /// chi_i(x) = c_i^{v(x)} * residue(x)^{e_i}.
    KKElem factor(int i, const PAdic& x) const;
    /// Value on a diagonal matrix given entrywise.
    KKElem on_diag(const std::vector<PAdic>& xs) const;
};

/// Product of chi_i over the diagonal of an upper-triangular b.
/// Throws not_upper_triangular when b has a non-zero lower entry.
KKElem char_eval(const Character& chi, const PMatrix& b);

/// True iff adjacent factors differ, the irreducibility criterion for the
/// principal series attached to chi.
bool is_irreducible_char(const Character& chi);

/// f_w(g): chi^{-1}(b) on U^(1) w B, zero elsewhere.
KKElem eval_fw(const Character& chi, const WeylElement& w, const PMatrix& g);
KKElem eval_fw(const Character& chi, const WeylElement& w, const RBDecomposition& d);

/// Formal k_K-linear combination of symbols n t f_w; evaluation is
/// (n t f_w)(g) = f_w(t^{-1} n^{-1} g).
class PSElement {
public:
    struct Term {
        KKElem coeff;
        PMatrix n;      // in N0
        DiagElement t;  // in T_+
        WeylElement w;
        PMatrix nt_inv; // cached (n t)^{-1}
    };

    explicit PSElement(Character chi) : chi_(std::move(chi)) {}

    static PSElement basis_fw(const Character& chi, const WeylElement& w,
                              unsigned prec);

    const Character& character() const { return chi_; }
    const std::vector<Term>& terms() const { return terms_; }

    /// Appends coeff * n t f_w; validates n in N0 and t in T_+.
    void add_term(KKElem coeff, PMatrix n, DiagElement t, WeylElement w);

    KKElem eval(const PMatrix& g) const;

    PSElement operator+(const PSElement& rhs) const;
    PSElement scaled(const KKElem& s) const;

private:
    Character chi_;
    std::vector<Term> terms_;
};

/// Left action of b+ = n t in B_+ = N0 T_+: term-wise composition
/// (n t)(n' t') = (n * t n' t^{-1}) (t t').  Throws not_in_bplus.
PSElement act_bplus(const PMatrix& n, const DiagElement& t, const PSElement& v);

/// Sampled check of the averaging lemma: with t' = diag(p,..,p,1,..,1)
/// (j0 entries p) and g = sum over theta representatives of m t' f_w,
/// (a) chi(w^{-1} t' w) f_w = g on the down-set of U_w, and (b) g is
/// U^(1)-invariant.
SuiteReport lemma_theta_check(const Character& chi, const WeylElement& w, int j0,
                              unsigned prec, const SampleBounds& bounds,
                              uint64_t seed, uint64_t trials);

/// Sampled check that n' t f_w and t f_w agree on the down-set of U_w for
/// n' in the N'_w pattern intersected with N0.
SuiteReport nprime_invariance_check(const Character& chi, const WeylElement& w,
                                    const PMatrix& nprime, const DiagElement& t,
                                    unsigned prec, const SampleBounds& bounds,
                                    uint64_t seed, uint64_t trials);

/// Sampled check of the quotient-map averaging dichotomy at t0: with n
/// running over representatives of (N_w cap N0 cap U^(l)) modulo
/// t0^l (N_w cap N0 cap U^(1)) t0^{-l},
///   sum_n (n t0^l f_{w_m})(r b) = chi(w_m^{-1} t0^l w_m) chi^{-1}(b)
/// when every o-class entry of r has valuation >= l, and 0 otherwise.
/// (Translates along N'_w directions reproduce the same function and would
/// collapse the sum in characteristic p, so the transversal is confined to
/// the N_w positions; the pi o-class entries are pushed into the support
/// window by conjugation automatically, hence stay unconstrained.  At
/// l = 1 the support condition coincides with r in U^(1) w_m B.)
SuiteReport quotient_formula_check(const Character& chi,
                                   const std::vector<WeylElement>& ordering,
                                   size_t m_index, int level, unsigned prec,
                                   const SampleBounds& bounds, uint64_t seed,
                                   uint64_t trials);

/// Digit-matrix transversal of (N_w cap N0 cap U^(l)) /
/// t0^l (N_w cap N0 cap U^(1)) t0^{-l}: entry p^l c with
/// c < p^{l(j-i-1)+1} at each N_w position (i, j).
std::vector<PMatrix> quotient_representatives(const WeylElement& w, int level,
                                              unsigned p, unsigned prec);

struct Counterexample {
    PSElement f;
    PMatrix z;
};

/// The explicit element f = h - correction in M_0 cap V_5 with f(z) != 0,
/// built over the fixed n = 3 ordering.  Requires p >= 3 and a character
/// whose adjacent tame exponents differ.
Counterexample build_counterexample(const Character& chi, unsigned prec);

} // namespace bruhat
