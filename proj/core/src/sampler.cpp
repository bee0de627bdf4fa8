#include "bruhat/sampler.hpp"

namespace bruhat {

uint64_t derive_seed(uint64_t seed, uint64_t counter) {
    // splitmix64 over the combined state
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

mpz_class random_digits(Rng& rng, unsigned p, int digit_len) {
    mpz_class v = 0;
    for (int i = 0; i < digit_len; ++i) {
        v *= p;
        v += static_cast<unsigned long>(rng.below(p));
    }
    return v;
}

} // namespace

PAdic random_unit(Rng& rng, unsigned p, unsigned prec, int digit_len) {
    mpz_class v = random_digits(rng, p, digit_len - 1);
    // force a non-zero leading digit
    unsigned lead = 1 + static_cast<unsigned>(rng.below(p - 1));
    v = v * p + lead;
    return PAdic::from_rational(v, mpz_class(1), p, prec);
}

PAdic random_with_val(Rng& rng, unsigned p, unsigned prec, long v, int digit_len) {
    PAdic u = random_unit(rng, p, prec, digit_len);
    mpz_class num = 1, den = 1;
    if (v >= 0)
        mpz_ui_pow_ui(num.get_mpz_t(), p, static_cast<unsigned long>(v));
    else
        mpz_ui_pow_ui(den.get_mpz_t(), p, static_cast<unsigned long>(-v));
    return u * PAdic::from_rational(num, den, p, prec);
}

PAdic random_o(Rng& rng, unsigned p, unsigned prec, int digit_len) {
    return PAdic::from_rational(random_digits(rng, p, digit_len), mpz_class(1), p, prec);
}

PAdic random_pi_o(Rng& rng, unsigned p, unsigned prec, int digit_len) {
    mpz_class v = random_digits(rng, p, digit_len) * p;
    return PAdic::from_rational(v, mpz_class(1), p, prec);
}

PAdic random_nonzero(Rng& rng, unsigned p, unsigned prec, const SampleBounds& b) {
    long v = rng.range(-b.val_window, b.val_window);
    return random_with_val(rng, p, prec, v, b.digit_len);
}

PMatrix random_invertible(Rng& rng, int n, unsigned p, unsigned prec,
                          const SampleBounds& b) {
    for (;;) {
        PMatrix g(n, p, prec);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long v = rng.range(-b.val_window, b.val_window);
                PAdic e = random_with_val(rng, p, prec, v, b.digit_len);
                if (rng.below(8) == 0) e = PAdic::zero(p, static_cast<long>(prec));
                g.at(i, j) = e;
            }
        try {
            (void)mat_inv(g);
            return g;
        } catch (const singular_to_precision&) {
            continue;
        }
    }
}

PMatrix random_N0(Rng& rng, int n, unsigned p, unsigned prec) {
    PMatrix g = PMatrix::identity(n, p, prec);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.at(i, j) = random_o(rng, p, prec);
    return g;
}

PMatrix random_U1(Rng& rng, int n, unsigned p, unsigned prec) {
    for (;;) {
        PMatrix g = PMatrix::identity(n, p, prec);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                PAdic d = random_pi_o(rng, p, prec);
                g.at(i, j) = g.at(i, j) + d;
            }
        try {
            (void)mat_inv(g);
            return g;
        } catch (const singular_to_precision&) {
            continue;
        }
    }
}

PMatrix random_B(Rng& rng, int n, unsigned p, unsigned prec, const SampleBounds& b) {
    PMatrix g(n, p, prec);
    for (int i = 0; i < n; ++i) {
        long v = rng.range(-b.val_window, b.val_window);
        g.at(i, i) = random_with_val(rng, p, prec, v, b.digit_len);
        for (int j = i + 1; j < n; ++j) {
            if (rng.below(4) == 0) continue; // keep some exact zeros
            long vo = rng.range(-b.val_window, b.val_window);
            g.at(i, j) = random_with_val(rng, p, prec, vo, b.digit_len);
        }
    }
    return g;
}

DiagElement random_Tplus(Rng& rng, int n, unsigned p, unsigned prec, int max_step) {
    // valuations non-increasing down the diagonal
    std::vector<PAdic> xs;
    long v = rng.range(0, max_step * n);
    for (int i = 0; i < n; ++i) {
        xs.push_back(random_with_val(rng, p, prec, v));
        v -= rng.range(0, max_step);
    }
    return DiagElement::from_entries(std::move(xs));
}

PMatrix random_pattern_matrix(Rng& rng, const WeylElement& w, unsigned p, unsigned prec) {
    int n = w.n();
    auto winv = w.inverse();
    PMatrix r(n, p, prec);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (winv(i) == j)
                r.at(i, j) = PAdic::one(p, prec);
            else if (winv(i) > j && w(j) > i)
                r.at(i, j) = random_o(rng, p, prec);
            else if (winv(i) > j && w(j) < i)
                r.at(i, j) = random_pi_o(rng, p, prec);
        }
    return r;
}

PMatrix sample_cell(Rng& rng, const WeylElement& w, const SampleBounds& bounds,
                    unsigned p, unsigned prec) {
    int n = w.n();
    PMatrix nw = PMatrix::identity(n, p, prec);
    for (auto& [i, j] : PositionMask::n_w(w).pos)
        nw.at(i, j) = random_o(rng, p, prec, bounds.digit_len);
    PMatrix wm = PMatrix::permutation(w, p, prec);
    PMatrix b = random_B(rng, n, p, prec, bounds);
    return mat_mul(mat_mul(nw, wm), b);
}

PMatrix sample_cell(const WeylElement& w, const SampleBounds& bounds,
                    unsigned p, unsigned prec, uint64_t seed, uint64_t counter) {
    Rng rng(seed, counter);
    return sample_cell(rng, w, bounds, p, prec);
}

} // namespace bruhat
