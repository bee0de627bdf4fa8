#include <doctest.h>

#include "bruhat/decompose.hpp"
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

TEST_CASE("rb_decompose pinned examples") {
    unsigned p = 3, prec = 32;

    PMatrix g1 = from_ints({{1, 0, 0}, {3, 1, 0}, {3, 3, 1}}, p, prec);
    RBDecomposition d1 = rb_decompose(g1);
    CHECK(d1.w == WeylElement::identity(3));
    CHECK(mat_eq(d1.r, g1));
    CHECK(mat_eq(d1.b, PMatrix::identity(3, p, prec)));

    PMatrix g2 = from_ints({{1, 0}, {1, 1}}, p, prec);
    RBDecomposition d2 = rb_decompose(g2);
    CHECK(d2.w == WeylElement::parse("2,1"));
    CHECK(mat_eq(d2.r, from_ints({{1, 1}, {1, 0}}, p, prec)));
    CHECK(mat_eq(d2.b, from_ints({{1, 1}, {0, -1}}, p, prec)));
    CHECK(mat_eq(mat_mul(d2.r, d2.b), g2));

    PMatrix z = from_ints({{9, 0, 1}, {1, 0, 0}, {3, 1, 0}}, p, prec);
    RBDecomposition dz = rb_decompose(z);
    CHECK(dz.w == WeylElement::parse("2,3,1"));
    CHECK(mat_eq(dz.r, z));
    CHECK(mat_eq(dz.b, PMatrix::identity(3, p, prec)));
}

TEST_CASE("decomposition is invariant under right B-multiplication") {
    unsigned p = 3, prec = 48;
    SampleBounds bounds;
    for (int t = 0; t < 300; ++t) {
        Rng rng(3, static_cast<uint64_t>(t));
        PMatrix g = random_invertible(rng, 3, p, prec, bounds);
        PMatrix bp = random_B(rng, 3, p, prec, bounds);
        RBDecomposition d = rb_decompose(g);
        RBDecomposition d2 = rb_decompose(mat_mul(g, bp));
        CHECK(d2.w == d.w);
        CHECK(mat_eq(d2.r, d.r));
        CHECK(mat_eq(d2.b, mat_mul(d.b, bp)));
    }
}

TEST_CASE("pattern classes are disjoint") {
    unsigned p = 3, prec = 16;
    for (int n : {3, 4}) {
        uint64_t c = 0;
        for (auto& w : all_weyl(n))
            for (int t = 0; t < 25; ++t) {
                Rng rng(13, c++);
                PMatrix r = random_pattern_matrix(rng, w, p, prec);
                for (auto& w2 : all_weyl(n))
                    CHECK(matches_pattern(r, w2) == (w2 == w));
            }
    }
}

TEST_CASE("classify_Uw left invariances and B") {
    unsigned p = 3, prec = 48;
    SampleBounds bounds;
    for (int t = 0; t < 300; ++t) {
        Rng rng(17, static_cast<uint64_t>(t));
        PMatrix g = random_invertible(rng, 3, p, prec, bounds);
        WeylElement w = classify_Uw(g);
        CHECK(classify_Uw(mat_mul(random_N0(rng, 3, p, prec), g)) == w);
        CHECK(classify_Uw(mat_mul(random_U1(rng, 3, p, prec), g)) == w);
        CHECK(classify_Uw(random_B(rng, 3, p, prec, bounds)) == WeylElement::identity(3));
    }
    for (auto& w : all_weyl(3))
        CHECK(classify_Uw(PMatrix::permutation(w, p, prec)) == w);
}

TEST_CASE("in_UlwB levels") {
    unsigned p = 3, prec = 32;
    SampleBounds bounds;
    WeylElement w = WeylElement::parse("2,3,1");
    for (int t = 0; t < 100; ++t) {
        Rng rng(23, static_cast<uint64_t>(t));
        PMatrix b = random_B(rng, 3, p, prec, bounds);
        CHECK(in_UlwB(mat_mul(PMatrix::permutation(w, p, prec), b), w, 1));
    }
    // (1 + p^2 E_21) * w' is in U^(2) w' B but not U^(3) w' B when the
    // perturbed entry lands on a free pi*o-class position of r
    WeylElement wp = WeylElement::parse("1,3,2");
    PMatrix u = PMatrix::identity(3, p, prec);
    u.at(1, 0) = PAdic::from_int(9, p, prec);
    PMatrix g = mat_mul(u, PMatrix::permutation(wp, p, prec));
    CHECK(in_UlwB(g, wp, 2));
    CHECK_FALSE(in_UlwB(g, wp, 3));
    CHECK(in_UlwB(g, wp, 1)); // monotone in the level
    CHECK_THROWS_AS(in_UlwB(g, wp, 0), index_out_of_range);
}

TEST_CASE("bruhat_cell pinned examples and sampler round trip") {
    unsigned p = 3, prec = 32;
    SampleBounds bounds;
    for (auto& w : all_weyl(3))
        CHECK(bruhat_cell(PMatrix::permutation(w, p, prec)) == w);

    PMatrix z = from_ints({{9, 0, 1}, {1, 0, 0}, {3, 1, 0}}, p, prec);
    CHECK(bruhat_cell(z) == WeylElement::longest(3)); // big cell, unlike classify
    CHECK(classify_Uw(z) == WeylElement::parse("2,3,1"));

    CHECK(bruhat_cell(from_ints({{1, 0}, {1, 1}}, p, prec)) == WeylElement::parse("2,1"));

    for (int n : {3, 4}) {
        uint64_t c = 0;
        for (auto& w : all_weyl(n))
            for (int t = 0; t < 20; ++t) {
                PMatrix x = sample_cell(w, bounds, p, prec, 29, c++);
                CHECK(bruhat_cell(x) == w);
                CHECK(bruhat_leq(classify_Uw(x), w));
            }
    }
}

TEST_CASE("error paths") {
    unsigned p = 3, prec = 8;
    PMatrix zero(2, p, prec);
    CHECK_THROWS_AS(rb_decompose(zero), singular_to_precision);

    // a column that is zero to a tiny precision is undecidable, not singular
    PMatrix g = PMatrix::identity(2, p, 2);
    g.at(0, 0) = PAdic::zero(p, 1);
    g.at(1, 0) = PAdic::zero(p, 1);
    CHECK_THROWS_AS(rb_decompose(g), error);
}
