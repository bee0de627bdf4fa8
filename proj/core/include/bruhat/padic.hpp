#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bruhat/errors.hpp"

namespace bruhat {

/// Capped-relative-precision element of Q_p.
///
/// A non-zero value is stored as mantissa * p^valuation + O(p^(valuation+N))
/// with the mantissa a unit in [1, p^N).  A value that is zero to precision
/// is a distinguished state carrying only an absolute precision A, meaning
/// the coset O(p^A).  All arithmetic propagates precision pessimistically:
/// the result never claims more digits than the operands support.
class PAdic {
public:
    static PAdic zero(unsigned p, long abs_precision);
    static PAdic one(unsigned p, unsigned prec);

    /// The class of num/den with N correct digits.  Throws denominator_zero.
    static PAdic from_rational(const mpz_class& num, const mpz_class& den,
                               unsigned p, unsigned prec);
    static PAdic from_rational(long num, long den, unsigned p, unsigned prec);
    static PAdic from_int(long value, unsigned p, unsigned prec);

    /// Normalizing constructor: value = mantissa * p^val + O(p^(val+prec)).
    /// The mantissa may be any integer; powers of p are stripped into the
    /// valuation and a residual of 0 collapses to zero-to-precision.
    static PAdic make(mpz_class mantissa, long val, unsigned p, long prec);

    unsigned prime() const { return p_; }

    /// True when the value is zero to the known precision.
    bool is_zero() const { return zero_; }

    /// Exact valuation of a non-zero value.  Throws zero_argument for
    /// zero-to-precision values (their valuation is only bounded below).
    long valuation() const;

    /// Index A such that the represented coset is known modulo p^A.
    long abs_precision() const { return zero_ ? val_ : val_ + static_cast<long>(prec_); }

    /// Number of known base-p digits; 0 for zero-to-precision values.
    unsigned rel_precision() const { return zero_ ? 0 : prec_; }

    const mpz_class& mantissa() const;

    /// Leading digit of the unit part (mantissa mod p).  Throws zero_argument.
    unsigned leading_digit() const;

    /// Base-p digits of the mantissa, least significant first, length N.
    std::vector<unsigned> digits() const;

    /// True iff the valuation is >= k, decided honestly: throws
    /// insufficient_precision for zero-to-precision values whose absolute
    /// precision does not exceed k.
    bool val_at_least(long k) const;

    bool is_unit() const { return !zero_ && val_ == 0; }

    PAdic operator+(const PAdic& rhs) const;
    PAdic operator-(const PAdic& rhs) const;
    PAdic operator*(const PAdic& rhs) const;
    PAdic neg() const;
    PAdic inv() const;

    /// Truncate to absolute precision A (no-op if already coarser).
    PAdic truncated(long abs_prec) const;

    /// Display form "p^v * u + O(p^(v+N))".
    std::string str() const;

private:
    PAdic(unsigned p, bool zero, long val, unsigned prec, mpz_class man)
        : p_(p), zero_(zero), val_(val), prec_(prec), man_(std::move(man)) {}

    void check_same_prime(const PAdic& rhs) const;

    unsigned p_;
    bool zero_;     // zero-to-precision flag
    long val_;      // valuation; for zero values: absolute precision
    unsigned prec_; // relative precision (digit count); 0 for zero
    mpz_class man_; // unit mantissa in [1, p^prec), not divisible by p
};

/// p^k as an arbitrary-precision integer.
mpz_class pow_p(unsigned p, unsigned long k);

/// a == b as known cosets: the difference is zero to precision.
bool eq_to_precision(const PAdic& a, const PAdic& b);

/// Number of leading digits to which a agrees with the reference value ref:
/// valuation(a - ref) minus the valuation of ref (taken as 0 for a zero
/// reference), using the absolute precision when the difference is zero to
/// precision.
long agreement_digits(const PAdic& a, const PAdic& ref);

} // namespace bruhat
