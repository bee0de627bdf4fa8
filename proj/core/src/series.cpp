#include "bruhat/series.hpp"

#include <algorithm>

#include "bruhat/json_io.hpp"

namespace bruhat {

KKElem Character::factor(int i, const PAdic& x) const {
    if (x.is_zero())
        throw insufficient_precision("character factor of zero-to-precision value");
    KKElem v = c[i].pow(x.valuation());
    long e_i = e[i];
    if (e_i != 0) {
        KKElem r = field->from_int(static_cast<long>(x.leading_digit()));
        v = v * r.pow(e_i);
    }
    return v;
}

KKElem Character::on_diag(const std::vector<PAdic>& xs) const {
    KKElem v = field->one();
    for (int i = 0; i < n(); ++i) v = v * factor(i, xs[i]);
    return v;
}

KKElem char_eval(const Character& chi, const PMatrix& b) {
    if (b.n() != chi.n()) throw dimension_mismatch("char_eval");
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < i; ++j)
            if (!b.at(i, j).is_zero())
                throw not_upper_triangular("char_eval: matrix not in B");
    KKElem v = chi.field->one();
    for (int i = 0; i < b.n(); ++i) v = v * chi.factor(i, b.at(i, i));
    return v;
}

bool is_irreducible_char(const Character& chi) {
    unsigned p = chi.p();
    long tame = static_cast<long>(p) - 1;
    for (int i = 0; i + 1 < chi.n(); ++i) {
        bool same_c = chi.c[i] == chi.c[i + 1];
        long de = (chi.e[i] - chi.e[i + 1]) % tame;
        bool same_e = (de == 0);
        if (same_c && same_e) return false;
    }
    return true;
}

KKElem eval_fw(const Character& chi, const WeylElement& w, const RBDecomposition& d) {
    if (!in_UlwB(d, w, 1)) return chi.field->zero();
    return char_eval(chi, d.b).inv();
}

KKElem eval_fw(const Character& chi, const WeylElement& w, const PMatrix& g) {
    return eval_fw(chi, w, rb_decompose(g));
}

PSElement PSElement::basis_fw(const Character& chi, const WeylElement& w,
                              unsigned prec) {
    PSElement v(chi);
    int n = w.n();
    unsigned p = chi.p();
    std::vector<PAdic> ones(static_cast<size_t>(n), PAdic::one(p, prec));
    v.add_term(chi.field->one(), PMatrix::identity(n, p, prec),
               DiagElement::from_entries(std::move(ones)), w);
    return v;
}

void PSElement::add_term(KKElem coeff, PMatrix n, DiagElement t, WeylElement w) {
    if (coeff.is_zero()) return;
    if (!membership(n, Subgroup::N0)) throw not_in_bplus("PSElement term: n not in N0");
    if (!t.in_Tplus()) throw not_in_bplus("PSElement term: t not in T+");
    unsigned prec = std::max(1u, t.entries[0].rel_precision());
    PMatrix nt = mat_mul(n, t.to_matrix(prec));
    PMatrix nt_inv = mat_inv(nt);
    terms_.push_back(Term{std::move(coeff), std::move(n), std::move(t), std::move(w),
                          std::move(nt_inv)});
}

KKElem PSElement::eval(const PMatrix& g) const {
    KKElem acc = chi_.field->zero();
    for (auto& term : terms_) {
        PMatrix x = mat_mul(term.nt_inv, g);
        KKElem v = eval_fw(chi_, term.w, x);
        if (!v.is_zero()) acc = acc + term.coeff * v;
    }
    return acc;
}

PSElement PSElement::operator+(const PSElement& rhs) const {
    PSElement out = *this;
    out.terms_.insert(out.terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    return out;
}

PSElement PSElement::scaled(const KKElem& s) const {
    PSElement out(chi_);
    if (s.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff = t.coeff * s;
    return out;
}

PSElement act_bplus(const PMatrix& n, const DiagElement& t, const PSElement& v) {
    if (!membership(n, Subgroup::N0)) throw not_in_bplus("act_bplus: n not in N0");
    if (!t.in_Tplus()) throw not_in_bplus("act_bplus: t not in T+");
    unsigned prec = std::max(1u, t.entries[0].rel_precision());
    PMatrix tm = t.to_matrix(prec);
    PMatrix tm_inv = t.inverse().to_matrix(prec);
    PSElement out(v.character());
    for (auto& term : v.terms()) {
        PMatrix conj = mat_mul(tm, mat_mul(term.n, tm_inv)); // t n' t^{-1} in N0
        out.add_term(term.coeff, mat_mul(n, conj), t * term.t, term.w);
    }
    return out;
}

namespace {

std::vector<WeylElement> down_set(const WeylElement& w) {
    std::vector<WeylElement> out;
    for (auto& u : all_weyl(w.n()))
        if (bruhat_leq(u, w)) out.push_back(u);
    return out;
}

} // namespace

SuiteReport lemma_theta_check(const Character& chi, const WeylElement& w, int j0,
                              unsigned prec, const SampleBounds& bounds,
                              uint64_t seed, uint64_t trials) {
    SuiteReport rep;
    rep.suite = "theta-lemma";
    unsigned p = chi.p();
    int n = w.n();

    DiagElement tprime = DiagElement::contraction(n, j0, p, prec);
    auto theta = theta_representatives(w, j0, p, prec);
    PSElement g(chi);
    for (auto& m : theta) g.add_term(chi.field->one(), m, tprime, w);

    // chi(w^{-1} t' w)
    std::vector<PAdic> conj;
    for (int i = 0; i < n; ++i) conj.push_back(tprime.entries[w(i)]);
    KKElem scale = chi.on_diag(conj);

    auto lower = down_set(w);
    rep.extra["theta_size"] = theta.size();

    for (uint64_t trial = 0; trial < trials; ++trial) {
        Rng rng(seed, trial);
        const WeylElement& wp = lower[trial % lower.size()];
        try {
            PMatrix x = sample_cell(rng, wp, bounds, p, prec);
            KKElem lhs = scale * eval_fw(chi, w, x);
            KKElem rhs = g.eval(x);
            if (lhs != rhs)
                rep.add_failure({{"trial", trial}, {"cell", wp.str()},
                                 {"x", matrix_to_json(x)}},
                                lhs.str(), rhs.str());
            // U^(1)-invariance of g
            PMatrix u = random_U1(rng, n, p, prec);
            KKElem shifted = g.eval(mat_mul(u, x));
            if (shifted != rhs)
                rep.add_failure({{"trial", trial}, {"cell", wp.str()}, {"kind", "u1"},
                                 {"x", matrix_to_json(x)}, {"u", matrix_to_json(u)}},
                                rhs.str(), shifted.str());
        } catch (const insufficient_precision&) {
            ++rep.precision_aborts;
        }
        ++rep.trials;
    }
    return rep;
}

SuiteReport nprime_invariance_check(const Character& chi, const WeylElement& w,
                                    const PMatrix& nprime, const DiagElement& t,
                                    unsigned prec, const SampleBounds& bounds,
                                    uint64_t seed, uint64_t trials) {
    SuiteReport rep;
    rep.suite = "nprime-invariance";
    unsigned p = chi.p();
    int n = w.n();
    if (!in_Nprime_pattern(nprime, w) || !membership(nprime, Subgroup::N0))
        throw not_in_bplus("nprime_invariance_check: n' not in N'_w cap N0");

    PSElement lhs(chi), rhs(chi);
    lhs.add_term(chi.field->one(), nprime, t, w);
    rhs.add_term(chi.field->one(), PMatrix::identity(n, p, prec), t, w);

    auto lower = down_set(w);
    for (uint64_t trial = 0; trial < trials; ++trial) {
        Rng rng(seed, trial);
        const WeylElement& wp = lower[trial % lower.size()];
        try {
            PMatrix x = sample_cell(rng, wp, bounds, p, prec);
            KKElem a = lhs.eval(x);
            KKElem b = rhs.eval(x);
            if (a != b)
                rep.add_failure({{"trial", trial}, {"cell", wp.str()},
                                 {"x", matrix_to_json(x)}},
                                b.str(), a.str());
        } catch (const insufficient_precision&) {
            ++rep.precision_aborts;
        }
        ++rep.trials;
    }
    return rep;
}

std::vector<PMatrix> quotient_representatives(const WeylElement& w, int level,
                                              unsigned p, unsigned prec) {
    // N_w position (i,j): p^l o / p^{1+l(j-i)} o, enumerated as p^l * c with
    // c in [0, p^{l(j-i-1)+1})
    int n = w.n();
    struct Pos {
        int i, j;
        unsigned long count;
    };
    std::vector<Pos> positions;
    unsigned long total = 1;
    for (auto& [i, j] : PositionMask::n_w(w).pos) {
        unsigned long cnt = 1;
        for (int k = 0; k < level * (j - i - 1) + 1; ++k) cnt *= p;
        positions.push_back({i, j, cnt});
        total *= cnt;
    }
    mpz_class pl = pow_p(p, static_cast<unsigned long>(level));
    std::vector<PMatrix> out;
    out.reserve(total);
    for (unsigned long code = 0; code < total; ++code) {
        PMatrix m = PMatrix::identity(n, p, prec);
        unsigned long c = code;
        for (auto& pos : positions) {
            unsigned long digit = c % pos.count;
            c /= pos.count;
            if (digit)
                m.at(pos.i, pos.j) =
                    PAdic::from_rational(pl * static_cast<unsigned long>(digit),
                                         mpz_class(1), p, prec);
        }
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

/// Support of the t0^l-averaged sum: every o-class entry of r (positions
/// with w^{-1}(i) > j and w(j) > i) has valuation >= l.
bool in_averaged_support(const PMatrix& r, const WeylElement& w, int level) {
    auto winv = w.inverse();
    for (int i = 0; i < r.n(); ++i)
        for (int j = 0; j < r.n(); ++j)
            if (winv(i) > j && w(j) > i && !r.at(i, j).val_at_least(level))
                return false;
    return true;
}

} // namespace

SuiteReport quotient_formula_check(const Character& chi,
                                   const std::vector<WeylElement>& ordering,
                                   size_t m_index, int level, unsigned prec,
                                   const SampleBounds& bounds, uint64_t seed,
                                   uint64_t trials) {
    SuiteReport rep;
    rep.suite = "quotient-formula";
    unsigned p = chi.p();
    const WeylElement& wm = ordering.at(m_index);
    int n = wm.n();

    auto reps = quotient_representatives(wm, level, p, prec);
    rep.extra["representatives"] = reps.size();
    DiagElement t0l = DiagElement::t_zero(n, p, prec).pow(level);

    PSElement avg(chi);
    for (auto& m : reps) avg.add_term(chi.field->one(), m, t0l, wm);

    // chi(w_m^{-1} t0^l w_m); trivial for characters unramified at p
    std::vector<PAdic> conj;
    for (int i = 0; i < n; ++i) conj.push_back(t0l.entries[wm(i)]);
    KKElem scale = chi.on_diag(conj);

    PAdic plvl = PAdic::from_rational(pow_p(p, static_cast<unsigned long>(level)),
                                      mpz_class(1), p, prec);
    for (uint64_t trial = 0; trial < trials; ++trial) {
        Rng rng(seed, trial);
        try {
            PMatrix r = random_pattern_matrix(rng, wm, p, prec);
            if (trial % 2 == 0) {
                // force the in-support branch: scale all non-pivot entries by p^l
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < n; ++i)
                        if (i != wm(j)) r.at(i, j) = r.at(i, j) * plvl;
            }
            PMatrix b = random_B(rng, n, p, prec, bounds);
            PMatrix x = mat_mul(r, b);
            bool in_supp = in_averaged_support(r, wm, level);
            KKElem expected =
                in_supp ? scale * char_eval(chi, b).inv() : chi.field->zero();
            KKElem got = avg.eval(x);
            if (expected != got)
                rep.add_failure({{"trial", trial}, {"r", matrix_to_json(r)},
                                 {"b", matrix_to_json(b)}, {"in_support", in_supp}},
                                expected.str(), got.str());
            // at l = 1 the support condition is exactly membership in U^(1)w_mB
            if (level == 1 && in_supp != in_UlwB(r, wm, 1))
                rep.add_failure({{"trial", trial}, {"r", matrix_to_json(r)},
                                 {"kind", "support_vs_UlwB"}},
                                in_supp, !in_supp);
        } catch (const insufficient_precision&) {
            ++rep.precision_aborts;
        }
        ++rep.trials;
    }
    return rep;
}

Counterexample build_counterexample(const Character& chi, unsigned prec) {
    unsigned p = chi.p();
    if (chi.n() != 3) throw character_not_admissible("counterexample needs n = 3");
    if (p < 3) throw character_not_admissible("counterexample needs p >= 3");
    // triviality on o_F^* depends only on the tame exponent
    long tame = static_cast<long>(p) - 1;
    if ((chi.e[0] - chi.e[1]) % tame == 0)
        throw character_not_admissible("chi_1/chi_2 trivial on units");
    if ((chi.e[1] - chi.e[2]) % tame == 0)
        throw character_not_admissible("chi_2/chi_3 trivial on units");

    auto ordering = standard_ordering(3, OrderingPreset::PaperN3);
    const WeylElement& w2 = ordering[1]; // (12)
    const WeylElement& w5 = ordering[4]; // 2,3,1

    long p2 = static_cast<long>(p) * p;
    long p3 = p2 * static_cast<long>(p);

    auto upper = [&](long a, long b) {
        PMatrix m = PMatrix::identity(3, p, prec);
        m.at(0, 1) = PAdic::from_int(a, p, prec);
        m.at(0, 2) = PAdic::from_int(b, p, prec);
        return m;
    };

    DiagElement t2 = DiagElement::from_entries(
        {PAdic::from_int(p2, p, prec), PAdic::one(p, prec), PAdic::one(p, prec)});
    DiagElement id_t = DiagElement::from_entries(
        {PAdic::one(p, prec), PAdic::one(p, prec), PAdic::one(p, prec)});

    PSElement h(chi);
    for (long a = 0; a < p2; ++a)
        for (long b = 0; b < p2; ++b)
            h.add_term(chi.field->one(), upper(a, b), t2, w2);

    // correction: chi_3(p^2)^{-1} sum_{a,b < p^3} h(m(a,b)) * n(a,b) f_{w5}
    KKElem chi3_inv = chi.c[2].pow(-2);
    PSElement f = h;
    for (long a = 0; a < p3; ++a)
        for (long b = 0; b < p3; ++b) {
            PMatrix m(3, p, prec);
            m.at(0, 0) = PAdic::from_int(a, p, prec);
            m.at(0, 1) = PAdic::from_int(b, p, prec);
            m.at(0, 2) = PAdic::one(p, prec);
            m.at(1, 0) = PAdic::one(p, prec);
            m.at(2, 1) = PAdic::one(p, prec);
            KKElem coeff = h.eval(m);
            if (coeff.is_zero()) continue;
            f.add_term((chi3_inv * coeff).neg(), upper(a, b), id_t, w5);
        }

    PMatrix z(3, p, prec);
    z.at(0, 0) = PAdic::from_int(p2, p, prec);
    z.at(0, 2) = PAdic::one(p, prec);
    z.at(1, 0) = PAdic::one(p, prec);
    z.at(2, 0) = PAdic::from_int(static_cast<long>(p), p, prec);
    z.at(2, 1) = PAdic::one(p, prec);

    return Counterexample{std::move(f), std::move(z)};
}

} // namespace bruhat
