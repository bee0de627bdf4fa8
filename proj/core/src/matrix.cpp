#include "bruhat/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace bruhat {

PMatrix::PMatrix(int n, unsigned p, unsigned prec)
    : n_(n), p_(p), e_(static_cast<size_t>(n) * n, PAdic::zero(p, static_cast<long>(prec))) {
    if (n < 1) throw dimension_mismatch("PMatrix: n must be >= 1");
}

PMatrix PMatrix::identity(int n, unsigned p, unsigned prec) {
    PMatrix m(n, p, prec);
    for (int i = 0; i < n; ++i) m.at(i, i) = PAdic::one(p, prec);
    return m;
}

PMatrix PMatrix::permutation(const WeylElement& w, unsigned p, unsigned prec) {
    PMatrix m(w.n(), p, prec);
    for (int j = 0; j < w.n(); ++j) m.at(w(j), j) = PAdic::one(p, prec);
    return m;
}

PMatrix PMatrix::transpose() const {
    PMatrix m = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = at(j, i);
    return m;
}

std::string PMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < n_; ++j) os << at(i, j).str() << (j + 1 < n_ ? ", " : "");
        os << (i + 1 < n_ ? "\n" : "]");
    }
    return os.str();
}

PMatrix mat_mul(const PMatrix& a, const PMatrix& b) {
    if (a.n() != b.n() || a.prime() != b.prime())
        throw dimension_mismatch("mat_mul: incompatible matrices");
    int n = a.n();
    PMatrix c(n, a.prime(), 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PAdic s = a.at(i, 0) * b.at(0, j);
            for (int k = 1; k < n; ++k) s = s + a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

namespace {

// Pivot row with minimal valuation in column `col` among rows >= start of m.
// Honesty: a zero-to-precision entry whose bound cannot exclude it from
// attaining the minimum triggers insufficient_precision.
int pick_pivot(const PMatrix& m, const std::vector<int>& rows, int col) {
    bool have = false;
    long vmin = 0;
    int best = -1;
    for (int i : rows) {
        const PAdic& e = m.at(i, col);
        if (e.is_zero()) continue;
        if (!have || e.valuation() < vmin) {
            have = true;
            vmin = e.valuation();
            best = i;
        }
    }
    if (!have) throw singular_to_precision("column vanishes to precision");
    for (int i : rows) {
        const PAdic& e = m.at(i, col);
        if (e.is_zero() && e.abs_precision() <= vmin)
            throw insufficient_precision("pivot comparison undecidable");
    }
    return best;
}

} // namespace

PMatrix mat_inv(const PMatrix& a) {
    int n = a.n();
    PMatrix m = a;
    // the identity carries at least the working precision of a
    long maxabs = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) maxabs = std::max(maxabs, a.at(i, j).abs_precision());
    PMatrix inv = PMatrix::identity(n, a.prime(), static_cast<unsigned>(std::max<long>(maxabs, 1)));

    std::vector<int> perm(n); // perm[col] = pivot row
    std::vector<int> remaining;
    for (int i = 0; i < n; ++i) remaining.push_back(i);

    for (int col = 0; col < n; ++col) {
        int piv = pick_pivot(m, remaining, col);
        perm[col] = piv;
        remaining.erase(std::find(remaining.begin(), remaining.end(), piv));
        PAdic s = m.at(piv, col).inv();
        for (int j = 0; j < n; ++j) {
            m.at(piv, j) = m.at(piv, j) * s;
            inv.at(piv, j) = inv.at(piv, j) * s;
        }
        for (int i = 0; i < n; ++i) {
            if (i == piv) continue;
            PAdic f = m.at(i, col);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(piv, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(piv, j);
            }
        }
    }
    // rows of `inv` are now inverse rows permuted: row perm[col] corresponds
    // to solving for unit vector col
    PMatrix out(n, a.prime(), 1);
    for (int col = 0; col < n; ++col)
        for (int j = 0; j < n; ++j) out.at(col, j) = inv.at(perm[col], j);
    return out;
}

bool mat_eq(const PMatrix& a, const PMatrix& b) {
    if (a.n() != b.n()) return false;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (!eq_to_precision(a.at(i, j), b.at(i, j))) return false;
    return true;
}

namespace {

bool is_zero_entry(const PAdic& e) { return e.is_zero(); }

bool is_one_entry(const PAdic& e, unsigned p) {
    return eq_to_precision(e, PAdic::one(p, 1));
}

bool diag_is_unipotent(const PMatrix& g) {
    for (int i = 0; i < g.n(); ++i)
        if (!is_one_entry(g.at(i, i), g.prime())) return false;
    return true;
}

bool lower_zero(const PMatrix& g) {
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < i; ++j)
            if (!is_zero_entry(g.at(i, j))) return false;
    return true;
}

bool upper_zero(const PMatrix& g) {
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (!is_zero_entry(g.at(i, j))) return false;
    return true;
}

bool entries_integral(const PMatrix& g) {
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (!g.at(i, j).val_at_least(0)) return false;
    return true;
}

} // namespace

bool membership(const PMatrix& g, Subgroup s) {
    switch (s) {
    case Subgroup::B:
        return lower_zero(g);
    case Subgroup::N:
        return lower_zero(g) && diag_is_unipotent(g);
    case Subgroup::N0:
        return lower_zero(g) && diag_is_unipotent(g) && entries_integral(g);
    case Subgroup::Nminus:
        return upper_zero(g) && diag_is_unipotent(g);
    case Subgroup::T:
        for (int i = 0; i < g.n(); ++i)
            for (int j = 0; j < g.n(); ++j)
                if (i != j && !is_zero_entry(g.at(i, j))) return false;
        return true;
    case Subgroup::Tplus: {
        if (!membership(g, Subgroup::T)) return false;
        for (int i = 0; i + 1 < g.n(); ++i) {
            const PAdic& a = g.at(i, i);
            const PAdic& b = g.at(i + 1, i + 1);
            if (a.is_zero() || b.is_zero())
                throw insufficient_precision("Tplus: diagonal entry zero to precision");
            // t N0 t^{-1} <= N0 forces valuations non-increasing down
            if (b.valuation() > a.valuation()) return false;
        }
        return true;
    }
    case Subgroup::G0: {
        if (!entries_integral(g)) return false;
        // determinant must be a unit; elimination valuation suffices here
        PMatrix m = g;
        long detval = 0;
        std::vector<int> rows;
        for (int i = 0; i < g.n(); ++i) rows.push_back(i);
        try {
            for (int col = 0; col < g.n(); ++col) {
                int piv = pick_pivot(m, rows, col);
                rows.erase(std::find(rows.begin(), rows.end(), piv));
                detval += m.at(piv, col).valuation();
                PAdic s = m.at(piv, col).inv();
                for (int i : rows) {
                    PAdic f = m.at(i, col) * s;
                    for (int j = col; j < g.n(); ++j)
                        m.at(i, j) = m.at(i, j) - f * m.at(piv, j);
                }
            }
        } catch (const singular_to_precision&) {
            return false;
        }
        return detval == 0;
    }
    }
    throw error("membership: unknown subgroup tag");
}

bool in_U_level(const PMatrix& g, int l) {
    unsigned p = g.prime();
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) {
            PAdic d = (i == j) ? g.at(i, j) - PAdic::one(p, static_cast<unsigned>(
                                                   std::max<long>(g.at(i, j).abs_precision(), l + 1)))
                               : g.at(i, j);
            if (!d.val_at_least(l)) return false;
        }
    return true;
}

bool in_Nw_pattern(const PMatrix& g, const WeylElement& w) {
    if (g.n() != w.n()) throw dimension_mismatch("in_Nw_pattern");
    if (!membership(g, Subgroup::N)) return false;
    auto mask = PositionMask::n_w(w);
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (!mask.contains(i, j) && !is_zero_entry(g.at(i, j))) return false;
    return true;
}

bool in_Nprime_pattern(const PMatrix& g, const WeylElement& w) {
    if (g.n() != w.n()) throw dimension_mismatch("in_Nprime_pattern");
    if (!membership(g, Subgroup::N)) return false;
    auto mask = PositionMask::n_prime_w(w);
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (!mask.contains(i, j) && !is_zero_entry(g.at(i, j))) return false;
    return true;
}

PMatrix elementary_diag(int k, const PAdic& alpha, int n) {
    if (alpha.is_zero()) throw zero_argument("elementary_diag: alpha is zero");
    if (k < 1 || k > n) throw index_out_of_range("elementary_diag: bad index");
    unsigned prec = std::max(1u, alpha.rel_precision());
    PMatrix m = PMatrix::identity(n, alpha.prime(), prec);
    m.at(k - 1, k - 1) = alpha;
    return m;
}

DiagElement DiagElement::from_entries(std::vector<PAdic> xs) {
    for (auto& x : xs)
        if (x.is_zero()) throw zero_argument("DiagElement: zero diagonal entry");
    return DiagElement{std::move(xs)};
}

DiagElement DiagElement::contraction(int n, int j0, unsigned p, unsigned prec) {
    if (j0 < 0 || j0 > n) throw index_out_of_range("contraction: bad j0");
    std::vector<PAdic> xs;
    for (int i = 0; i < n; ++i)
        xs.push_back(i < j0 ? PAdic::from_int(static_cast<long>(p), p, prec)
                            : PAdic::one(p, prec));
    return DiagElement{std::move(xs)};
}

DiagElement DiagElement::t_zero(int n, unsigned p, unsigned prec) {
    std::vector<PAdic> xs;
    for (int i = 0; i < n; ++i) {
        PAdic x = PAdic::one(p, prec);
        for (int k = 0; k < n - 1 - i; ++k)
            x = x * PAdic::from_int(static_cast<long>(p), p, prec);
        xs.push_back(x);
    }
    return DiagElement{std::move(xs)};
}

bool DiagElement::in_Tplus() const {
    for (int i = 0; i + 1 < n(); ++i)
        if (entries[i + 1].valuation() > entries[i].valuation()) return false;
    return true;
}

PMatrix DiagElement::to_matrix(unsigned prec) const {
    PMatrix m(n(), entries[0].prime(), prec);
    for (int i = 0; i < n(); ++i) m.at(i, i) = entries[i];
    return m;
}

DiagElement DiagElement::inverse() const {
    std::vector<PAdic> xs;
    for (auto& x : entries) xs.push_back(x.inv());
    return DiagElement{std::move(xs)};
}

DiagElement DiagElement::pow(int k) const {
    DiagElement base = k < 0 ? inverse() : *this;
    int e = k < 0 ? -k : k;
    std::vector<PAdic> xs(entries.size(), PAdic::one(entries[0].prime(),
                                                     entries[0].rel_precision()));
    DiagElement acc{std::move(xs)};
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

DiagElement DiagElement::operator*(const DiagElement& rhs) const {
    if (n() != rhs.n()) throw dimension_mismatch("DiagElement product");
    std::vector<PAdic> xs;
    for (int i = 0; i < n(); ++i) xs.push_back(entries[i] * rhs.entries[i]);
    return DiagElement{std::move(xs)};
}

std::vector<PMatrix> theta_representatives(const WeylElement& w, int j0,
                                           unsigned p, unsigned prec) {
    int n = w.n();
    if (j0 < 1 || j0 >= n) throw index_out_of_range("theta_representatives: bad j0");
    auto scaled = PositionMask::n_w(w).intersect(PositionMask::level_one(n, j0));
    std::vector<std::pair<int, int>> positions;
    for (auto& q : scaled.pos)
        if (q.first + 1 <= j0 && j0 < q.second + 1) positions.push_back(q);

    size_t count = 1;
    for (size_t i = 0; i < positions.size(); ++i) count *= p;

    std::vector<PMatrix> out;
    out.reserve(count);
    for (size_t code = 0; code < count; ++code) {
        PMatrix m = PMatrix::identity(n, p, prec);
        size_t c = code;
        for (auto& [i, j] : positions) {
            long digit = static_cast<long>(c % p);
            c /= p;
            m.at(i, j) = PAdic::from_int(digit * static_cast<long>(p), p, prec);
        }
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace bruhat
