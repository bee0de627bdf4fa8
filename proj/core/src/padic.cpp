#include "bruhat/padic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace bruhat {

mpz_class pow_p(unsigned p, unsigned long k) {
    thread_local std::map<std::pair<unsigned, unsigned long>, mpz_class> cache;
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    if (cache.size() > 4096) cache.clear();
    return cache.emplace(key, r).first->second;
}

PAdic PAdic::zero(unsigned p, long abs_precision) {
    return PAdic(p, true, abs_precision, 0, 0);
}

PAdic PAdic::one(unsigned p, unsigned prec) {
    return PAdic(p, false, 0, prec, 1);
}

PAdic PAdic::make(mpz_class mantissa, long val, unsigned p, long prec) {
    if (prec <= 0) return zero(p, val + prec);
    mpz_class mod = pow_p(p, static_cast<unsigned long>(prec));
    mpz_class m = mantissa % mod;
    if (m < 0) m += mod;
    if (m == 0) return zero(p, val + prec);
    // strip powers of p into the valuation
    unsigned long shift = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), mpz_class(p).get_mpz_t());
    if (static_cast<long>(shift) >= prec) return zero(p, val + prec);
    long n = prec - static_cast<long>(shift);
    m %= pow_p(p, static_cast<unsigned long>(n));
    if (m == 0) return zero(p, val + prec);
    return PAdic(p, false, val + static_cast<long>(shift), static_cast<unsigned>(n), m);
}

PAdic PAdic::from_rational(const mpz_class& num, const mpz_class& den,
                           unsigned p, unsigned prec) {
    if (den == 0) throw denominator_zero("from_rational: denominator is zero");
    if (prec == 0) throw error("from_rational: precision must be >= 1");
    if (num == 0) return zero(p, static_cast<long>(prec));
    mpz_class pz(p);
    mpz_class n = num, d = den;
    long val = 0;
    val += static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
    val -= static_cast<long>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()));
    mpz_class mod = pow_p(p, prec);
    mpz_class dinv;
    if (!mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t()))
        throw error("from_rational: internal inversion failure");
    mpz_class m = (n * dinv) % mod;
    if (m < 0) m += mod;
    return PAdic(p, false, val, prec, m);
}

PAdic PAdic::from_rational(long num, long den, unsigned p, unsigned prec) {
    return from_rational(mpz_class(num), mpz_class(den), p, prec);
}

PAdic PAdic::from_int(long value, unsigned p, unsigned prec) {
    return from_rational(mpz_class(value), mpz_class(1), p, prec);
}

long PAdic::valuation() const {
    if (zero_) throw zero_argument("valuation: value is zero to precision");
    return val_;
}

const mpz_class& PAdic::mantissa() const {
    if (zero_) throw zero_argument("mantissa: value is zero to precision");
    return man_;
}

unsigned PAdic::leading_digit() const {
    if (zero_) throw zero_argument("leading_digit: value is zero to precision");
    mpz_class d = man_ % p_;
    return static_cast<unsigned>(d.get_ui());
}

std::vector<unsigned> PAdic::digits() const {
    std::vector<unsigned> out;
    if (zero_) return out;
    mpz_class m = man_;
    for (unsigned i = 0; i < prec_; ++i) {
        mpz_class d = m % p_;
        out.push_back(static_cast<unsigned>(d.get_ui()));
        m /= p_;
    }
    return out;
}

bool PAdic::val_at_least(long k) const {
    if (!zero_) return val_ >= k;
    if (val_ > k) return true; // O(p^A) with A > k forces valuation > k
    throw insufficient_precision("val_at_least: zero to precision O(p^" +
                                 std::to_string(val_) + ") cannot decide >= " +
                                 std::to_string(k));
}

void PAdic::check_same_prime(const PAdic& rhs) const {
    if (p_ != rhs.p_) throw error("mixed primes in p-adic arithmetic");
}

PAdic PAdic::operator+(const PAdic& rhs) const {
    check_same_prime(rhs);
    long a1 = abs_precision(), a2 = rhs.abs_precision();
    long a = std::min(a1, a2);
    if (zero_ && rhs.zero_) return zero(p_, a);
    if (zero_) return rhs.truncated(a);
    if (rhs.zero_) return truncated(a);
    long vmin = std::min(val_, rhs.val_);
    long avail = a - vmin;
    if (avail <= 0) return zero(p_, a);
    mpz_class s = man_ * pow_p(p_, static_cast<unsigned long>(val_ - vmin)) +
                  rhs.man_ * pow_p(p_, static_cast<unsigned long>(rhs.val_ - vmin));
    return make(std::move(s), vmin, p_, avail);
}

PAdic PAdic::operator-(const PAdic& rhs) const { return *this + rhs.neg(); }

PAdic PAdic::operator*(const PAdic& rhs) const {
    check_same_prime(rhs);
    if (zero_ && rhs.zero_) return zero(p_, val_ + rhs.val_);
    if (zero_) return zero(p_, val_ + rhs.val_);
    if (rhs.zero_) return zero(p_, rhs.val_ + val_);
    unsigned n = std::min(prec_, rhs.prec_);
    mpz_class m = (man_ * rhs.man_) % pow_p(p_, n);
    return PAdic(p_, false, val_ + rhs.val_, n, std::move(m));
}

PAdic PAdic::neg() const {
    if (zero_) return *this;
    mpz_class m = pow_p(p_, prec_) - man_;
    return PAdic(p_, false, val_, prec_, std::move(m));
}

PAdic PAdic::inv() const {
    if (zero_) throw division_by_zero("inv: value is zero to precision");
    mpz_class mod = pow_p(p_, prec_);
    mpz_class m;
    mpz_invert(m.get_mpz_t(), man_.get_mpz_t(), mod.get_mpz_t());
    return PAdic(p_, false, -val_, prec_, std::move(m));
}

PAdic PAdic::truncated(long abs_prec) const {
    if (abs_precision() <= abs_prec) return *this;
    if (zero_) return zero(p_, abs_prec);
    long n = abs_prec - val_;
    if (n <= 0) return zero(p_, abs_prec);
    mpz_class m = man_ % pow_p(p_, static_cast<unsigned long>(n));
    return make(std::move(m), val_, p_, n);
}

std::string PAdic::str() const {
    std::ostringstream os;
    if (zero_) {
        os << "O(" << p_ << "^(" << val_ << "))";
    } else {
        os << p_ << "^" << val_ << " * " << man_.get_str()
           << " + O(" << p_ << "^(" << (val_ + static_cast<long>(prec_)) << "))";
    }
    return os.str();
}

bool eq_to_precision(const PAdic& a, const PAdic& b) {
    return (a - b).is_zero();
}

long agreement_digits(const PAdic& a, const PAdic& ref) {
    PAdic d = a - ref;
    long vd = d.is_zero() ? d.abs_precision() : d.valuation();
    long vr = ref.is_zero() ? 0 : ref.valuation();
    return vd - vr;
}

} // namespace bruhat
