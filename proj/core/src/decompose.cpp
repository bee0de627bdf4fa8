#include "bruhat/decompose.hpp"

#include <algorithm>
#include <vector>

namespace bruhat {

namespace {

// Largest row index attaining the minimal valuation among `rows` in column
// `col`.  Forced by the R_w pattern: rows below the pivot must gain
// valuation >= 1 after scaling.
int pick_pivot_row(const PMatrix& m, const std::vector<int>& rows, int col) {
    bool have = false;
    long vmin = 0;
    for (int i : rows) {
        const PAdic& e = m.at(i, col);
        if (e.is_zero()) continue;
        if (!have || e.valuation() < vmin) {
            have = true;
            vmin = e.valuation();
        }
    }
    if (!have) throw singular_to_precision("rb_decompose: column vanishes to precision");
    for (int i : rows) {
        const PAdic& e = m.at(i, col);
        if (e.is_zero() && e.abs_precision() <= vmin)
            throw insufficient_precision("rb_decompose: pivot comparison undecidable");
    }
    int best = -1;
    for (int i : rows) {
        const PAdic& e = m.at(i, col);
        if (!e.is_zero() && e.valuation() == vmin) best = std::max(best, i);
    }
    return best;
}

// Inverse of an upper-triangular matrix by back substitution.
PMatrix upper_inv(const PMatrix& e) {
    int n = e.n();
    long maxabs = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) maxabs = std::max(maxabs, e.at(i, j).abs_precision());
    PMatrix out = PMatrix::identity(n, e.prime(), static_cast<unsigned>(maxabs));
    for (int j = 0; j < n; ++j) {
        // solve e * x = unit vector j, x upper triangular column
        for (int i = j; i >= 0; --i) {
            PAdic s = (i == j) ? PAdic::one(e.prime(), static_cast<unsigned>(maxabs))
                               : PAdic::zero(e.prime(), maxabs);
            for (int k = i + 1; k <= j; ++k) s = s - e.at(i, k) * out.at(k, j);
            if (e.at(i, i).is_zero())
                throw insufficient_precision(
                    "rb_decompose: recorded diagonal vanishes to precision");
            out.at(i, j) = s * e.at(i, i).inv();
        }
    }
    return out;
}

} // namespace

RBDecomposition rb_decompose(const PMatrix& g) {
    int n = g.n();
    unsigned p = g.prime();
    PMatrix a = g;
    long maxabs = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) maxabs = std::max(maxabs, g.at(i, j).abs_precision());
    PMatrix ecol = PMatrix::identity(n, p, static_cast<unsigned>(maxabs));

    std::vector<int> wimg(n, -1);
    std::vector<int> remaining;
    for (int i = 0; i < n; ++i) remaining.push_back(i);

    for (int j = 0; j < n; ++j) {
        // clear the previously pivoted rows, in pivot order
        for (int jp = 0; jp < j; ++jp) {
            PAdic c = a.at(wimg[jp], j);
            for (int i = 0; i < n; ++i) a.at(i, j) = a.at(i, j) - c * a.at(i, jp);
            for (int i = 0; i <= j; ++i) ecol.at(i, j) = ecol.at(i, j) - c * ecol.at(i, jp);
        }
        int piv = pick_pivot_row(a, remaining, j);
        wimg[j] = piv;
        remaining.erase(std::find(remaining.begin(), remaining.end(), piv));
        PAdic s = a.at(piv, j).inv();
        for (int i = 0; i < n; ++i) a.at(i, j) = a.at(i, j) * s;
        for (int i = 0; i <= j; ++i) ecol.at(i, j) = ecol.at(i, j) * s;
    }

    std::vector<int> one_line(n);
    for (int j = 0; j < n; ++j) one_line[j] = wimg[j] + 1;
    RBDecomposition d{WeylElement::from_one_line(one_line), std::move(a), upper_inv(ecol)};
    return d;
}

WeylElement classify_Uw(const PMatrix& g) { return rb_decompose(g).w; }

bool in_UlwB(const RBDecomposition& d, const WeylElement& w, int l) {
    if (d.w != w) return false;
    for (int j = 0; j < d.r.n(); ++j)
        for (int i = 0; i < d.r.n(); ++i) {
            if (i == w(j)) continue; // pivot position
            if (!d.r.at(i, j).val_at_least(l)) return false;
        }
    return true;
}

bool in_UlwB(const PMatrix& g, const WeylElement& w, int l) {
    if (l < 1) throw index_out_of_range("in_UlwB: level must be >= 1");
    return in_UlwB(rb_decompose(g), w, l);
}

namespace {

// Rank of the submatrix rows i0..n-1, cols 0..j1, to precision.
int lower_left_rank(const PMatrix& g, int i0, int j1) {
    int n = g.n();
    int rows = n - i0, cols = j1 + 1;
    std::vector<PAdic> m;
    m.reserve(static_cast<size_t>(rows) * cols);
    for (int i = i0; i < n; ++i)
        for (int j = 0; j <= j1; ++j) m.push_back(g.at(i, j));
    auto at = [&](int i, int j) -> PAdic& { return m[static_cast<size_t>(i) * cols + j]; };

    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        long vmin = 0;
        for (int i = row; i < rows; ++i) {
            if (at(i, col).is_zero()) continue;
            if (piv < 0 || at(i, col).valuation() < vmin) {
                piv = i;
                vmin = at(i, col).valuation();
            }
        }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(row, j));
        PAdic s = at(row, col).inv();
        for (int j = col; j < cols; ++j) at(row, j) = at(row, j) * s;
        for (int i = row + 1; i < rows; ++i) {
            PAdic f = at(i, col);
            for (int j = col; j < cols; ++j) at(i, j) = at(i, j) - f * at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

WeylElement bruhat_cell(const PMatrix& g) {
    int n = g.n();
    // rk[i][j] = rank of rows >= i, cols <= j; rk[n][j] = 0
    std::vector<std::vector<int>> rk(n + 1, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rk[i][j] = lower_left_rank(g, i, j);

    std::vector<int> one_line(n, 0);
    std::vector<bool> used(n, false);
    for (int j = 0; j < n; ++j) {
        int found = -1;
        for (int i = 0; i < n; ++i) {
            int prev_i = rk[i + 1][j] - (j > 0 ? rk[i + 1][j - 1] : 0);
            int here = rk[i][j] - (j > 0 ? rk[i][j - 1] : 0);
            if (here - prev_i == 1) {
                found = i;
                break;
            }
        }
        if (found < 0 || used[found])
            throw insufficient_precision("bruhat_cell: rank jumps undecidable");
        used[found] = true;
        one_line[j] = found + 1;
    }
    return WeylElement::from_one_line(one_line);
}

bool matches_pattern(const PMatrix& r, const WeylElement& w) {
    int n = r.n();
    if (n != w.n()) throw dimension_mismatch("matches_pattern");
    auto winv = w.inverse();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const PAdic& e = r.at(i, j);
            if (winv(i) == j) {
                if (!eq_to_precision(e, PAdic::one(r.prime(), 1))) return false;
            } else if (winv(i) < j) {
                if (!e.is_zero()) return false;
            } else if (w(j) > i) {
                if (!e.val_at_least(0)) return false;
            } else {
                if (!e.val_at_least(1)) return false;
            }
        }
    return true;
}

bool pattern_class(const PMatrix& r, WeylElement& out) {
    bool found = false;
    for (auto& w : all_weyl(r.n())) {
        if (matches_pattern(r, w)) {
            if (found) throw error("pattern_class: pattern classes not disjoint");
            out = w;
            found = true;
        }
    }
    return found;
}

} // namespace bruhat
