#pragma once

#include <string>
#include <vector>

#include "bruhat/errors.hpp"
#include "bruhat/padic.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

/// Square matrix over PAdic; all entries share one prime.
class PMatrix {
public:
    PMatrix(int n, unsigned p, unsigned prec); // zero matrix, exact-zero entries
    static PMatrix identity(int n, unsigned p, unsigned prec);
    static PMatrix permutation(const WeylElement& w, unsigned p, unsigned prec);

    int n() const { return n_; }
    unsigned prime() const { return p_; }

    PAdic& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const PAdic& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    PMatrix transpose() const;
    std::string str() const;

private:
    int n_;
    unsigned p_;
    std::vector<PAdic> e_;
};

PMatrix mat_mul(const PMatrix& a, const PMatrix& b);

/// Inverse via elimination with valuation pivoting (minimal-valuation pivot).
/// Throws singular_to_precision when no usable pivot exists.
PMatrix mat_inv(const PMatrix& a);

/// Entrywise equality to precision.
bool mat_eq(const PMatrix& a, const PMatrix& b);

enum class Subgroup { B, N, N0, Nminus, T, Tplus, G0 };

/// Membership to precision.  Exactly-zero constraints accept entries that are
/// zero to their stated precision; valuation constraints are decided by
/// val_at_least and may throw insufficient_precision.
bool membership(const PMatrix& g, Subgroup s);

/// g in U^(l): g - identity has all entries of valuation >= l.
bool in_U_level(const PMatrix& g, int l);

/// Upper unipotent with zeros off the N_w-positions (resp. N'_w-positions).
bool in_Nw_pattern(const PMatrix& g, const WeylElement& w);
bool in_Nprime_pattern(const PMatrix& g, const WeylElement& w);

/// Diagonal matrix with alpha at (1-based) position k and 1 elsewhere.
PMatrix elementary_diag(int k, const PAdic& alpha, int n);

/// t = diag(x_1,...,x_n) given by valuations and unit parts.
struct DiagElement {
    std::vector<PAdic> entries;

    static DiagElement from_entries(std::vector<PAdic> xs);
    /// diag with the first j0 entries p and the rest 1.
    static DiagElement contraction(int n, int j0, unsigned p, unsigned prec);
    /// t0 = diag(p^{n-1}, p^{n-2}, ..., p, 1).
    static DiagElement t_zero(int n, unsigned p, unsigned prec);

    int n() const { return static_cast<int>(entries.size()); }
    /// Valuations non-increasing down the diagonal, i.e. t N_0 t^{-1} <= N_0.
    bool in_Tplus() const;
    PMatrix to_matrix(unsigned prec) const;
    DiagElement inverse() const;
    DiagElement pow(int k) const;
    DiagElement operator*(const DiagElement& rhs) const;
};

/// Full set of coset representatives of N_{w,j0} / t' N_{w,j0} t'^{-1} with
/// t' = diag(p,...,p,1,...,1) (j0 entries p, 1-based).  Each representative
/// is unipotent with an entry p*a, a in {0,...,p-1}, at the scaled positions
/// (the N_w-positions (i,j) with i+1 <= j0 < j+1) and 0 elsewhere.
std::vector<PMatrix> theta_representatives(const WeylElement& w, int j0,
                                           unsigned p, unsigned prec);

} // namespace bruhat
