#include "bruhat/suites.hpp"

#include <algorithm>
#include <map>

#include "bruhat/json_io.hpp"

namespace bruhat {

using nlohmann::json;

namespace {

std::string preset_name(OrderingPreset preset) {
    return preset == OrderingPreset::PaperN3 ? "paper-n3" : "default";
}

} // namespace

json RunConfig::to_json() const {
    json j;
    j["p"] = p;
    j["n"] = n;
    j["precision"] = precision;
    j["seed"] = seed;
    j["trials"] = trials;
    j["preset"] = preset_name(preset);
    if (chi) j["chi"] = character_to_json(*chi);
    j["valwindow"] = bounds.val_window;
    j["digits"] = bounds.digit_len;
    j["level"] = level;
    return j;
}

RunConfig RunConfig::from_json(const json& j) {
    RunConfig cfg;
    cfg.p = j.value("p", 3u);
    cfg.n = j.value("n", 3);
    cfg.precision = j.value("precision", 64u);
    cfg.seed = j.value("seed", uint64_t{1});
    cfg.trials = j.value("trials", uint64_t{0});
    if (j.contains("preset")) cfg.preset = parse_preset(j.at("preset").get<std::string>());
    if (j.contains("chi")) cfg.chi = character_from_json(j.at("chi"));
    cfg.bounds.val_window = j.value("valwindow", 2);
    cfg.bounds.digit_len = j.value("digits", 4);
    cfg.level = j.value("level", 1);
    return cfg;
}

Character default_character(unsigned p, int n) {
    if (p == 2) {
        // F_2 has no non-trivial tame characters; move the coefficients to F_4
        auto field = FiniteField::create(2, 2);
        Character chi{field, {}, {}};
        std::vector<KKElem> units = {field->one(), field->element({0, 1}),
                                     field->element({1, 1})};
        for (int i = 0; i < n; ++i) {
            chi.c.push_back(units[static_cast<size_t>(i) % units.size()]);
            chi.e.push_back(0);
        }
        return chi;
    }
    auto field = FiniteField::create(p, 1);
    Character chi{field, {}, {}};
    for (int i = 0; i < n; ++i) {
        chi.c.push_back(field->one());
        chi.e.push_back(i % static_cast<long>(p - 1));
    }
    return chi;
}

namespace {

Character pick_character(const RunConfig& cfg) {
    return cfg.chi ? *cfg.chi : default_character(cfg.p, cfg.n);
}

uint64_t pick_trials(const RunConfig& cfg, uint64_t dflt) {
    return cfg.trials ? cfg.trials : dflt;
}

SuiteReport suite_reconstruction(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "reconstruction";
    long want = std::min<long>(40, static_cast<long>(cfg.precision));
    uint64_t trials = pick_trials(cfg, 10000);
    for (uint64_t t = 0; t < trials; ++t) {
        Rng rng(cfg.seed, t);
        try {
            PMatrix g = random_invertible(rng, cfg.n, cfg.p, cfg.precision, cfg.bounds);
            RBDecomposition d = rb_decompose(g);
            PMatrix rb = mat_mul(d.r, d.b);
            long agree = 1000000;
            for (int i = 0; i < cfg.n; ++i)
                for (int j = 0; j < cfg.n; ++j)
                    agree = std::min(agree, agreement_digits(rb.at(i, j), g.at(i, j)));
            if (agree < want) {
                rep.add_failure({{"trial", t}, {"g", matrix_to_json(g)}},
                                json{{"agreement_digits", want}},
                                json{{"agreement_digits", agree}});
            }
            WeylElement cls = WeylElement::identity(cfg.n);
            if (!pattern_class(d.r, cls) || cls != d.w)
                rep.add_failure({{"trial", t}, {"g", matrix_to_json(g)}},
                                json{{"pattern", d.w.str()}},
                                json{{"pattern", cls.str()}});
        } catch (const insufficient_precision&) {
            ++rep.precision_aborts;
        } catch (const error& e) {
            rep.add_failure({{"trial", t}}, "decomposition", e.what());
        }
        ++rep.trials;
    }
    return rep;
}

SuiteReport suite_disjointness(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "disjointness";
    auto ordering = standard_ordering(cfg.n, cfg.preset);
    uint64_t per = pick_trials(cfg, 100);
    PMatrix id = PMatrix::identity(cfg.n, cfg.p, cfg.precision);
    uint64_t c = 0;
    for (auto& w : ordering) {
        for (uint64_t t = 0; t < per; ++t, ++c) {
            Rng rng(cfg.seed, c);
            try {
                PMatrix r = random_pattern_matrix(rng, w, cfg.p, cfg.precision);
                RBDecomposition d = rb_decompose(r);
                if (d.w != w || !mat_eq(d.r, r) || !mat_eq(d.b, id))
                    rep.add_failure({{"w", w.str()}, {"r", matrix_to_json(r)}},
                                    json{{"w", w.str()}, {"b", "identity"}},
                                    decomposition_to_json(d, cfg.precision));
                WeylElement cls = WeylElement::identity(cfg.n);
                if (!pattern_class(r, cls) || cls != w)
                    rep.add_failure({{"w", w.str()}, {"r", matrix_to_json(r)}},
                                    json{{"unique_pattern", w.str()}},
                                    json{{"pattern", cls.str()}});
            } catch (const insufficient_precision&) {
                ++rep.precision_aborts;
            } catch (const error& e) {
                rep.add_failure({{"w", w.str()}, {"trial", t}}, "pattern", e.what());
            }
            ++rep.trials;
        }
    }
    return rep;
}

SuiteReport suite_n0_invariance(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "n0-invariance";
    uint64_t trials = pick_trials(cfg, 10000);
    for (uint64_t t = 0; t < trials; ++t) {
        Rng rng(cfg.seed, t);
        try {
            PMatrix g = random_invertible(rng, cfg.n, cfg.p, cfg.precision, cfg.bounds);
            WeylElement w = classify_Uw(g);
            PMatrix n0 = random_N0(rng, cfg.n, cfg.p, cfg.precision);
            PMatrix u1 = random_U1(rng, cfg.n, cfg.p, cfg.precision);
            WeylElement wn = classify_Uw(mat_mul(n0, g));
            WeylElement wu = classify_Uw(mat_mul(u1, g));
            if (wn != w)
                rep.add_failure({{"trial", t}, {"g", matrix_to_json(g)},
                                 {"n0", matrix_to_json(n0)}},
                                w.str(), wn.str());
            if (wu != w)
                rep.add_failure({{"trial", t}, {"g", matrix_to_json(g)},
                                 {"u1", matrix_to_json(u1)}},
                                w.str(), wu.str());
        } catch (const insufficient_precision&) {
            ++rep.precision_aborts;
        }
        ++rep.trials;
    }
    return rep;
}

SuiteReport suite_bplus_monotonicity(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "bplus-monotonicity";
    uint64_t trials = pick_trials(cfg, 10000);
    for (uint64_t t = 0; t < trials; ++t) {
        Rng rng(cfg.seed, t);
        try {
            PMatrix g = random_invertible(rng, cfg.n, cfg.p, cfg.precision, cfg.bounds);
            WeylElement w = classify_Uw(g);
            PMatrix n0 = random_N0(rng, cfg.n, cfg.p, cfg.precision);
            DiagElement td = random_Tplus(rng, cfg.n, cfg.p, cfg.precision);
            PMatrix x = mat_mul(td.inverse().to_matrix(cfg.precision),
                                mat_mul(mat_inv(n0), g));
            WeylElement wp = classify_Uw(x);
            if (!bruhat_leq(wp, w))
                rep.add_failure({{"trial", t}, {"g", matrix_to_json(g)},
                                 {"n0", matrix_to_json(n0)}},
                                json{{"leq", w.str()}}, json{{"w'", wp.str()}});
        } catch (const insufficient_precision&) {
            ++rep.precision_aborts;
        }
        ++rep.trials;
    }
    return rep;
}

SuiteReport suite_cell_inclusion(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "cell-inclusion";
    uint64_t per = pick_trials(cfg, 1000);
    uint64_t c = 0;
    for (auto& w : all_weyl(cfg.n)) {
        for (uint64_t t = 0; t < per; ++t, ++c) {
            Rng rng(cfg.seed, c);
            try {
                PMatrix x = sample_cell(rng, w, cfg.bounds, cfg.p, cfg.precision);
                WeylElement wp = classify_Uw(x);
                if (!bruhat_leq(wp, w))
                    rep.add_failure({{"w", w.str()}, {"x", matrix_to_json(x)}},
                                    json{{"leq", w.str()}}, json{{"w'", wp.str()}});
                WeylElement cell = bruhat_cell(x);
                if (cell != w)
                    rep.add_failure({{"w", w.str()}, {"x", matrix_to_json(x)},
                                     {"kind", "bruhat_cell"}},
                                    w.str(), cell.str());
            } catch (const insufficient_precision&) {
                ++rep.precision_aborts;
            }
            ++rep.trials;
        }
    }
    return rep;
}

SuiteReport suite_bruhat_oracle(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "bruhat-oracle";
    auto ws = all_weyl(cfg.n);
    size_t k = ws.size();
    // oracle: reflexive-transitive closure of length-decreasing right
    // multiplication by transpositions
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < k; ++i) index[ws[i].images()] = i;
    for (size_t i = 0; i < k; ++i) leq[i][i] = true;
    for (size_t i = 0; i < k; ++i)
        for (int a = 0; a < cfg.n; ++a)
            for (int b = a + 1; b < cfg.n; ++b) {
                WeylElement u = ws[i] * WeylElement::transposition(cfg.n, a, b);
                if (u.length() < ws[i].length()) leq[index[u.images()]][i] = true;
            }
    for (size_t m = 0; m < k; ++m)
        for (size_t i = 0; i < k; ++i)
            if (leq[i][m])
                for (size_t j = 0; j < k; ++j)
                    if (leq[m][j]) leq[i][j] = true;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            bool got = bruhat_leq(ws[i], ws[j]);
            if (got != leq[i][j])
                rep.add_failure({{"u", ws[i].str()}, {"w", ws[j].str()}},
                                leq[i][j], got);
            ++rep.trials;
        }
    rep.extra["pairs"] = k * k;
    return rep;
}

SuiteReport suite_theta(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "theta-lemma";
    Character chi = pick_character(cfg);
    if (!is_irreducible_char(chi))
        throw character_not_admissible("theta-lemma needs adjacent factors to differ");
    uint64_t per = pick_trials(cfg, 200);
    uint64_t c = 0;
    for (auto& w : all_weyl(cfg.n))
        for (int j0 = 1; j0 < cfg.n; ++j0, ++c)
            rep.merge(lemma_theta_check(chi, w, j0, cfg.precision, cfg.bounds,
                                        derive_seed(cfg.seed, c), per));
    return rep;
}

SuiteReport suite_nprime(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "nprime-invariance";
    Character chi = pick_character(cfg);
    uint64_t per = pick_trials(cfg, 200);
    uint64_t c = 0;
    for (auto& w : all_weyl(cfg.n)) {
        Rng rng(cfg.seed, 1000000 + c);
        PMatrix nprime = PMatrix::identity(cfg.n, cfg.p, cfg.precision);
        for (auto& [i, j] : PositionMask::n_prime_w(w).pos)
            nprime.at(i, j) = random_o(rng, cfg.p, cfg.precision, cfg.bounds.digit_len);
        DiagElement td = random_Tplus(rng, cfg.n, cfg.p, cfg.precision);
        rep.merge(nprime_invariance_check(chi, w, nprime, td, cfg.precision,
                                          cfg.bounds, derive_seed(cfg.seed, c), per));
        ++c;
    }
    return rep;
}

SuiteReport suite_quotient(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "quotient-formula";
    Character chi = pick_character(cfg);
    auto ordering = standard_ordering(cfg.n, cfg.preset);
    uint64_t per = pick_trials(cfg, 100);
    for (size_t m = 0; m < ordering.size(); ++m)
        rep.merge(quotient_formula_check(chi, ordering, m, cfg.level, cfg.precision,
                                         cfg.bounds, derive_seed(cfg.seed, m), per));
    rep.extra["level"] = cfg.level;
    return rep;
}

SuiteReport suite_counterexample(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "counterexample";
    Character chi = cfg.chi ? *cfg.chi : default_character(cfg.p, 3);
    Counterexample ce = build_counterexample(chi, cfg.precision);
    KKElem fz = ce.f.eval(ce.z);
    rep.extra["f_z"] = fz.str();
    rep.extra["terms"] = ce.f.terms().size();
    if (fz.is_zero())
        rep.add_failure({{"z", matrix_to_json(ce.z)}}, "non-zero", fz.str());
    ++rep.trials;
    auto ordering = standard_ordering(3, OrderingPreset::PaperN3);
    uint64_t trials = pick_trials(cfg, 1000);
    for (uint64_t t = 0; t < trials; ++t) {
        Rng rng(cfg.seed, t);
        const WeylElement& w = ordering[t % 5]; // G_5 = cells of w_1..w_5
        try {
            PMatrix x = sample_cell(rng, w, cfg.bounds, cfg.p, cfg.precision);
            KKElem v = ce.f.eval(x);
            if (!v.is_zero())
                rep.add_failure({{"trial", t}, {"cell", w.str()},
                                 {"x", matrix_to_json(x)}},
                                "0", v.str());
        } catch (const insufficient_precision&) {
            ++rep.precision_aborts;
        }
        ++rep.trials;
    }
    return rep;
}

/// Shared-randomness matrix pair: the same small rational entries realized at
/// two precisions.
struct MatrixPair {
    PMatrix hi;
    PMatrix lo;
};

MatrixPair paired_invertible(Rng& rng, const RunConfig& cfg, unsigned lo_prec) {
    int n = cfg.n;
    MatrixPair mp{PMatrix(n, cfg.p, cfg.precision), PMatrix(n, cfg.p, lo_prec)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long v = rng.range(-cfg.bounds.val_window, cfg.bounds.val_window);
            mpz_class man = 0;
            for (int d = 0; d < 3; ++d)
                man = man * cfg.p + static_cast<unsigned long>(rng.below(cfg.p));
            if (rng.below(8) == 0) man = 0;
            mpz_class num = man, den = 1;
            if (v >= 0)
                num *= pow_p(cfg.p, static_cast<unsigned long>(v));
            else
                den = pow_p(cfg.p, static_cast<unsigned long>(-v));
            mp.hi.at(i, j) = PAdic::from_rational(num, den, cfg.p, cfg.precision);
            mp.lo.at(i, j) = PAdic::from_rational(num, den, cfg.p, lo_prec);
        }
    return mp;
}

SuiteReport suite_precision_honesty(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "precision-honesty";
    unsigned lo = std::min(cfg.precision, 8u);
    uint64_t trials = pick_trials(cfg, 1000);
    for (uint64_t t = 0; t < trials; ++t) {
        Rng rng(cfg.seed, t);
        MatrixPair g = paired_invertible(rng, cfg, lo);
        WeylElement w_hi = WeylElement::identity(cfg.n);
        try {
            w_hi = classify_Uw(g.hi);
        } catch (const error&) {
            ++rep.trials;
            continue; // oracle itself undecided; not a low-precision question
        }
        try {
            WeylElement w_lo = classify_Uw(g.lo);
            if (w_lo != w_hi)
                rep.add_failure({{"trial", t}, {"kind", "classify"},
                                 {"g", matrix_to_json(g.hi)}},
                                w_hi.str(), w_lo.str());
        } catch (const insufficient_precision&) {
            ++rep.precision_aborts;
        } catch (const singular_to_precision&) {
            ++rep.precision_aborts;
        }
        // monotonicity comparison on the same data
        Rng r_hi(cfg.seed ^ 0x5bd1e995u, t), r_lo(cfg.seed ^ 0x5bd1e995u, t);
        PMatrix n_hi = random_N0(r_hi, cfg.n, cfg.p, cfg.precision);
        PMatrix n_lo = random_N0(r_lo, cfg.n, cfg.p, lo);
        DiagElement t_hi = random_Tplus(r_hi, cfg.n, cfg.p, cfg.precision);
        DiagElement t_lo = random_Tplus(r_lo, cfg.n, cfg.p, lo);
        try {
            WeylElement wp_hi = classify_Uw(mat_mul(
                t_hi.inverse().to_matrix(cfg.precision), mat_mul(mat_inv(n_hi), g.hi)));
            try {
                WeylElement wp_lo = classify_Uw(mat_mul(
                    t_lo.inverse().to_matrix(lo), mat_mul(mat_inv(n_lo), g.lo)));
                if (wp_lo != wp_hi)
                    rep.add_failure({{"trial", t}, {"kind", "monotonicity"},
                                     {"g", matrix_to_json(g.hi)}},
                                    wp_hi.str(), wp_lo.str());
            } catch (const insufficient_precision&) {
                ++rep.precision_aborts;
            } catch (const singular_to_precision&) {
                ++rep.precision_aborts;
            }
        } catch (const error&) {
            // oracle undecided
        }
        ++rep.trials;
    }

    if (cfg.p == 3 && cfg.n == 3) {
        Character chi = cfg.chi ? *cfg.chi : default_character(cfg.p, 3);
        Counterexample hi = build_counterexample(chi, cfg.precision);
        Counterexample low = build_counterexample(chi, lo);
        KKElem fz_hi = hi.f.eval(hi.z);
        rep.extra["f_z"] = fz_hi.str();
        try {
            KKElem fz_lo = low.f.eval(low.z);
            if (fz_lo != fz_hi)
                rep.add_failure({{"kind", "counterexample_z"}}, fz_hi.str(), fz_lo.str());
        } catch (const insufficient_precision&) {
            ++rep.precision_aborts;
        } catch (const singular_to_precision&) {
            ++rep.precision_aborts;
        }
        auto ordering = standard_ordering(3, OrderingPreset::PaperN3);
        for (uint64_t t = 0; t < 100; ++t) {
            Rng a(cfg.seed + 7, t), b(cfg.seed + 7, t);
            const WeylElement& w = ordering[t % 5];
            try {
                PMatrix x_hi = sample_cell(a, w, cfg.bounds, cfg.p, cfg.precision);
                PMatrix x_lo = sample_cell(b, w, cfg.bounds, cfg.p, lo);
                KKElem v_hi = hi.f.eval(x_hi);
                KKElem v_lo = low.f.eval(x_lo);
                if (v_lo != v_hi)
                    rep.add_failure({{"trial", t}, {"kind", "counterexample_eval"},
                                     {"x", matrix_to_json(x_hi)}},
                                    v_hi.str(), v_lo.str());
            } catch (const insufficient_precision&) {
                ++rep.precision_aborts;
            } catch (const singular_to_precision&) {
                ++rep.precision_aborts;
            }
            ++rep.trials;
        }
    }
    return rep;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "reconstruction",  "disjointness",      "n0-invariance",
        "bplus-monotonicity", "cell-inclusion", "bruhat-oracle",
        "theta-lemma",     "nprime-invariance", "quotient-formula",
        "counterexample",  "precision-honesty"};
    return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
    if (name == "reconstruction") return suite_reconstruction(cfg);
    if (name == "disjointness") return suite_disjointness(cfg);
    if (name == "n0-invariance") return suite_n0_invariance(cfg);
    if (name == "bplus-monotonicity") return suite_bplus_monotonicity(cfg);
    if (name == "cell-inclusion") return suite_cell_inclusion(cfg);
    if (name == "bruhat-oracle") return suite_bruhat_oracle(cfg);
    if (name == "theta-lemma") return suite_theta(cfg);
    if (name == "nprime-invariance") return suite_nprime(cfg);
    if (name == "quotient-formula") return suite_quotient(cfg);
    if (name == "counterexample") return suite_counterexample(cfg);
    if (name == "precision-honesty") return suite_precision_honesty(cfg);
    throw invalid_preset("unknown suite: " + name);
}

} // namespace bruhat
