#pragma once

#include "bruhat/matrix.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

/// The unique factorization g = r * b with r in the R_w pattern class and b
/// upper triangular invertible.
struct RBDecomposition {
    WeylElement w;
    PMatrix r;
    PMatrix b;
};

/// Column procedure: for each column, clear previously pivoted rows, pivot at
/// the largest row index of minimal valuation, and scale by the pivot
/// inverse.  The recorded column operations form an upper-triangular E with
/// r = g * E and b = E^{-1}.
///
/// Throws singular_to_precision when a column vanishes to precision and
/// insufficient_precision when the pivot choice is undecidable.
RBDecomposition rb_decompose(const PMatrix& g);

/// The w indexing the open piece U_w containing g.
WeylElement classify_Uw(const PMatrix& g);

/// g in U^(l) w B: the decomposition lands on w and every non-pivot entry of
/// r has valuation >= l.
bool in_UlwB(const PMatrix& g, const WeylElement& w, int l);
bool in_UlwB(const RBDecomposition& d, const WeylElement& w, int l);

/// The Bruhat cell BwB containing g, computed from lower-left rank jumps
/// over the field.  Independent of the p-adic pivot rule.
WeylElement bruhat_cell(const PMatrix& g);

/// Does r satisfy the R_w entry pattern: 1 at (w(j), j), 0 above the pivot
/// in pivot-order, o_F / pi o_F classes per the sign of w(j) - i.
bool matches_pattern(const PMatrix& r, const WeylElement& w);

/// The unique w whose pattern r satisfies, if any.
bool pattern_class(const PMatrix& r, WeylElement& out);

} // namespace bruhat
