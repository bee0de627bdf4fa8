#include <doctest.h>

#include <set>

#include "bruhat/matrix.hpp"
#include "bruhat/sampler.hpp"

using namespace bruhat;

namespace {

PMatrix from_ints(const std::vector<std::vector<long>>& rows, unsigned p, unsigned prec) {
    int n = static_cast<int>(rows.size());
    PMatrix m(n, p, prec);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = PAdic::from_int(rows[i][j], p, prec);
    return m;
}

} // namespace

TEST_CASE("mat_inv pinned examples") {
    unsigned p = 3, prec = 16;
    PMatrix u = from_ints({{1, 1}, {0, 1}}, p, prec);
    CHECK(mat_eq(mat_inv(u), from_ints({{1, -1}, {0, 1}}, p, prec)));

    WeylElement w = WeylElement::parse("2,3,1");
    CHECK(mat_eq(mat_inv(PMatrix::permutation(w, p, prec)),
                 PMatrix::permutation(w.inverse(), p, prec)));

    PMatrix d(2, p, prec);
    d.at(0, 0) = PAdic::from_int(3, p, prec);
    d.at(1, 1) = PAdic::one(p, prec);
    PMatrix di = mat_inv(d);
    CHECK(di.at(0, 0).valuation() == -1);
    CHECK(mat_eq(mat_mul(d, di), PMatrix::identity(2, p, prec)));

    PMatrix s(2, p, prec); // zero matrix
    CHECK_THROWS_AS(mat_inv(s), singular_to_precision);
}

TEST_CASE("mat_mul(g, mat_inv(g)) is the identity to precision") {
    SampleBounds bounds;
    bounds.val_window = 3;
    for (unsigned p : {2u, 3u, 5u})
        for (int t = 0; t < 300; ++t) {
            Rng rng(5, static_cast<uint64_t>(t));
            PMatrix g = random_invertible(rng, 3, p, 48, bounds);
            CHECK(mat_eq(mat_mul(g, mat_inv(g)), PMatrix::identity(3, p, 48)));
        }
}

TEST_CASE("subgroup membership pinned examples") {
    unsigned p = 3, prec = 16;
    PMatrix id = PMatrix::identity(3, p, prec);
    for (auto s : {Subgroup::B, Subgroup::N, Subgroup::N0, Subgroup::Nminus,
                   Subgroup::T, Subgroup::Tplus, Subgroup::G0})
        CHECK(membership(id, s));
    CHECK(in_U_level(id, 3));

    // only position (1,2) (1-based) is an N_w position for w = (12)
    WeylElement w12 = WeylElement::parse("2,1,3");
    PMatrix n = id;
    n.at(0, 1) = PAdic::from_int(7, p, prec);
    CHECK(in_Nw_pattern(n, w12));
    CHECK_FALSE(in_Nprime_pattern(n, w12));
    PMatrix n2 = id;
    n2.at(1, 2) = PAdic::one(p, prec);
    CHECK_FALSE(in_Nw_pattern(n2, w12));
    CHECK(in_Nprime_pattern(n2, w12));
}

TEST_CASE("T+ membership follows the contraction property") {
    unsigned p = 3, prec = 16;
    auto diag = [&](std::vector<PAdic> xs) { return DiagElement::from_entries(std::move(xs)); };
    PAdic pp = PAdic::from_int(3, p, prec), one = PAdic::one(p, prec);
    CHECK(diag({pp, pp, one}).in_Tplus());
    CHECK_FALSE(diag({one, pp, pp.inv()}).in_Tplus());
    CHECK(DiagElement::t_zero(4, p, prec).in_Tplus());
    CHECK(DiagElement::contraction(3, 2, p, prec).in_Tplus());

    // multiplicative, and t n t^{-1} stays integral for N_w-pattern n
    for (int t = 0; t < 200; ++t) {
        Rng rng(9, static_cast<uint64_t>(t));
        DiagElement a = random_Tplus(rng, 3, p, prec);
        DiagElement b = random_Tplus(rng, 3, p, prec);
        CHECK((a * b).in_Tplus());
        PMatrix n0 = random_N0(rng, 3, p, prec);
        PMatrix conj = mat_mul(a.to_matrix(prec),
                               mat_mul(n0, a.inverse().to_matrix(prec)));
        CHECK(membership(conj, Subgroup::N0));
    }
}

TEST_CASE("elementary_diag") {
    unsigned p = 3, prec = 8;
    PAdic pi = PAdic::from_int(3, p, prec);
    PMatrix e1 = elementary_diag(1, pi, 3);
    CHECK(e1.at(0, 0).valuation() == 1);
    CHECK(eq_to_precision(e1.at(1, 1), PAdic::one(p, prec)));
    CHECK(mat_eq(elementary_diag(2, PAdic::one(p, prec), 3), PMatrix::identity(3, p, prec)));
    PMatrix prod = mat_mul(elementary_diag(1, pi, 3),
                           mat_mul(elementary_diag(2, pi, 3), elementary_diag(3, pi, 3)));
    for (int i = 0; i < 3; ++i) CHECK(prod.at(i, i).valuation() == 1);
}

TEST_CASE("theta representatives") {
    unsigned p = 3, prec = 8;
    // w = (12) in S3, j0 = 1: only scaled position is (1,2) 1-based
    auto reps = theta_representatives(WeylElement::parse("2,1,3"), 1, p, prec);
    REQUIRE(reps.size() == 3);
    std::set<long> seen;
    for (auto& m : reps) {
        CHECK(membership(m, Subgroup::N0));
        const PAdic& e = m.at(0, 1);
        if (e.is_zero()) {
            seen.insert(0);
        } else {
            CHECK(e.valuation() == 1);
            seen.insert(e.mantissa().get_si());
        }
        CHECK(m.at(0, 2).is_zero());
        CHECK(m.at(1, 2).is_zero());
    }
    CHECK(seen.size() == 3); // p * a for a in {0, 1, 2}

    auto trivial = theta_representatives(WeylElement::identity(3), 1, p, prec);
    REQUIRE(trivial.size() == 1);
    CHECK(mat_eq(trivial[0], PMatrix::identity(3, p, prec)));

    auto w0reps = theta_representatives(WeylElement::longest(3), 2, 2, prec);
    CHECK(w0reps.size() == 4); // positions (1,3) and (2,3), one binary digit each
    for (auto& m : w0reps) CHECK(m.at(0, 1).is_zero());
}
