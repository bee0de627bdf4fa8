#pragma once

#include <cstdint>
#include <random>

#include "bruhat/decompose.hpp"
#include "bruhat/matrix.hpp"

namespace bruhat {

/// Trial-indexed seed derivation: suites draw each trial's randomness from
/// (global seed, trial index) so results are order-independent.
uint64_t derive_seed(uint64_t seed, uint64_t counter);

class Rng {
public:
    explicit Rng(uint64_t seed) : g_(seed) {}
    Rng(uint64_t seed, uint64_t counter) : g_(derive_seed(seed, counter)) {}

    uint64_t next() { return g_(); }
    /// Uniform in [0, bound).
    uint64_t below(uint64_t bound) {
        return std::uniform_int_distribution<uint64_t>(0, bound - 1)(g_);
    }
    long range(long lo, long hi) { // inclusive
        return std::uniform_int_distribution<long>(lo, hi)(g_);
    }

private:
    std::mt19937_64 g_;
};

struct SampleBounds {
    int val_window = 2; // valuation offsets uniform in [-V, V]
    int digit_len = 4;  // mantissa digit count for sampled entries
};

/// Random unit (valuation 0).
PAdic random_unit(Rng& rng, unsigned p, unsigned prec, int digit_len = 4);
/// Random element with valuation exactly v.
PAdic random_with_val(Rng& rng, unsigned p, unsigned prec, long v, int digit_len = 4);
/// Random integral element (valuation >= 0, possibly zero).
PAdic random_o(Rng& rng, unsigned p, unsigned prec, int digit_len = 4);
/// Random element of pi_F o_F (valuation >= 1, possibly zero).
PAdic random_pi_o(Rng& rng, unsigned p, unsigned prec, int digit_len = 4);
/// Random element with valuation in the window, never zero.
PAdic random_nonzero(Rng& rng, unsigned p, unsigned prec, const SampleBounds& b);

/// Random invertible g with entry valuations in the window (rejection on
/// singular-to-precision).
PMatrix random_invertible(Rng& rng, int n, unsigned p, unsigned prec,
                          const SampleBounds& b);
/// Random element of N0 (integral upper unipotent).
PMatrix random_N0(Rng& rng, int n, unsigned p, unsigned prec);
/// Random element of U^(1) (identity + p * integral matrix), invertible.
PMatrix random_U1(Rng& rng, int n, unsigned p, unsigned prec);
/// Random invertible upper triangular matrix.
PMatrix random_B(Rng& rng, int n, unsigned p, unsigned prec, const SampleBounds& b);
/// Random t in T_+ with valuations non-increasing down the diagonal.
DiagElement random_Tplus(Rng& rng, int n, unsigned p, unsigned prec, int max_step = 2);
/// Random matrix satisfying the R_w entry pattern.
PMatrix random_pattern_matrix(Rng& rng, const WeylElement& w, unsigned p, unsigned prec);

/// n_w * w * b with n_w uniform over bounded N_w-pattern matrices and b a
/// random invertible upper-triangular matrix; lands in the cell BwB.
PMatrix sample_cell(const WeylElement& w, const SampleBounds& bounds,
                    unsigned p, unsigned prec, uint64_t seed, uint64_t counter);
PMatrix sample_cell(Rng& rng, const WeylElement& w, const SampleBounds& bounds,
                    unsigned p, unsigned prec);

} // namespace bruhat
