#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bruhat/errors.hpp"
#include "bruhat/padic.hpp"

namespace bruhat {

class KKElem;

/// The coefficient field k_K = F_{p^m} in polynomial basis over F_p with a
/// fixed monic irreducible modulus of degree m.  For m = 1 the modulus is x
/// and elements are plain residues mod p.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
public:
    /// modulus holds coefficients c_0..c_m of a monic degree-m polynomial;
    /// empty means: x for m = 1, otherwise the lexicographically smallest
    /// monic irreducible of degree m.
    static std::shared_ptr<FiniteField> create(unsigned p, unsigned m = 1,
                                               std::vector<unsigned> modulus = {});

    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    unsigned long order() const { return order_; } // p^m
    const std::vector<unsigned>& modulus() const { return mod_; }

    KKElem zero() const;
    KKElem one() const;
    KKElem from_int(long v) const;          // image of an integer in F_p <= k_K
    KKElem element(std::vector<unsigned> coeffs) const;
    KKElem parse(const std::string& s) const; // "2" or "[c0,c1,...]"

private:
    FiniteField(unsigned p, unsigned m, std::vector<unsigned> modulus);

    friend class KKElem;
    unsigned p_, m_;
    unsigned long order_;
    std::vector<unsigned> mod_; // c_0..c_m, monic
};

/// Value semantics element of a FiniteField.
class KKElem {
public:
    KKElem() = default;

    const FiniteField& field() const { return *F_; }
    const std::vector<unsigned>& coeffs() const { return c_; }
    bool is_zero() const;

    KKElem operator+(const KKElem& rhs) const;
    KKElem operator-(const KKElem& rhs) const;
    KKElem operator*(const KKElem& rhs) const;
    KKElem neg() const;
    KKElem inv() const;                 // throws division_by_zero on zero
    KKElem pow(long e) const;           // negative exponents invert first
    bool operator==(const KKElem& rhs) const;
    bool operator!=(const KKElem& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    friend class FiniteField;
    KKElem(std::shared_ptr<const FiniteField> F, std::vector<unsigned> c)
        : F_(std::move(F)), c_(std::move(c)) {}

    std::shared_ptr<const FiniteField> F_;
    std::vector<unsigned> c_; // size m, entries in [0,p)
};

/// Leading digit of the unit part of a, embedded into k_K via F_p <= k_K.
KKElem unit_residue(const PAdic& a, const std::shared_ptr<FiniteField>& F);

} // namespace bruhat
