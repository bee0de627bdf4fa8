#include <doctest.h>

#include <gmpxx.h>

#include "bruhat/finite_field.hpp"
#include "bruhat/padic.hpp"
#include "bruhat/sampler.hpp"

using namespace bruhat;

TEST_CASE("from_rational digit extraction") {
    PAdic a = PAdic::from_rational(9, 2, 3, 4);
    CHECK(a.valuation() == 2);
    CHECK(a.mantissa() == 41); // 2 * 41 = 82 = 1 mod 81
    CHECK(a.digits() == std::vector<unsigned>{2, 1, 1, 1});

    PAdic z = PAdic::from_rational(0, 1, 5, 8);
    CHECK(z.is_zero());
    CHECK(z.abs_precision() == 8);

    PAdic one = PAdic::from_rational(1, 1, 3, 4);
    CHECK(one.valuation() == 0);
    CHECK(one.mantissa() == 1);

    CHECK_THROWS_AS(PAdic::from_rational(1, 0, 3, 4), denominator_zero);
}

TEST_CASE("arithmetic identities from the contract") {
    PAdic half = PAdic::from_rational(1, 2, 3, 4);
    PAdic s = half + half;
    CHECK(s.valuation() == 0);
    CHECK(s.mantissa() == 1);

    PAdic three = PAdic::from_int(3, 3, 6);
    PAdic third = PAdic::from_rational(1, 3, 3, 6);
    PAdic prod = three * third;
    CHECK(prod.valuation() == 0);
    CHECK(prod.mantissa() == 1);

    // x + (-x) cancels to a zero with absolute precision val + N
    PAdic x = PAdic::from_rational(7, 5, 3, 6);
    PAdic c = x + x.neg();
    CHECK(c.is_zero());
    CHECK(c.abs_precision() == x.valuation() + 6);
}

TEST_CASE("precision propagation rules") {
    // product relative precision = min of operands
    PAdic a = PAdic::from_rational(2, 1, 3, 10);
    PAdic b = PAdic::from_rational(5, 1, 3, 4);
    CHECK((a * b).rel_precision() == 4);

    // sum absolute precision = min of operands
    PAdic lo = PAdic::from_rational(1, 1, 3, 3); // O(3^3)
    PAdic hi = PAdic::from_rational(9, 1, 3, 8); // O(3^10)
    CHECK((lo + hi).abs_precision() == 3);

    // inversion negates valuation and keeps relative precision
    PAdic v = PAdic::from_rational(9, 2, 3, 5);
    PAdic iv = v.inv();
    CHECK(iv.valuation() == -2);
    CHECK(iv.rel_precision() == 5);
    CHECK_THROWS_AS(PAdic::zero(3, 4).inv(), division_by_zero);
}

TEST_CASE("val_at_least decides honestly") {
    PAdic a = PAdic::from_rational(9, 2, 3, 4);
    CHECK(a.val_at_least(2));
    CHECK_FALSE(PAdic::from_rational(1, 2, 3, 4).val_at_least(1));
    CHECK_THROWS_AS(PAdic::zero(3, 4).val_at_least(6), insufficient_precision);
    CHECK(PAdic::zero(3, 7).val_at_least(6));
}

TEST_CASE("unit_residue reads the leading digit") {
    auto F = FiniteField::create(3, 1);
    CHECK(unit_residue(PAdic::from_rational(1, 2, 3, 4), F) == F->from_int(2));
    CHECK(unit_residue(PAdic::one(3, 4), F) == F->one());
    CHECK(unit_residue(PAdic::from_int(6, 3, 4), F) == F->from_int(2));
    CHECK_THROWS_AS(unit_residue(PAdic::zero(3, 4), F), zero_argument);
}

TEST_CASE("from_rational is a ring homomorphism against exact rationals") {
    unsigned p = 3, prec = 24;
    Rng rng(11);
    for (int t = 0; t < 2000; ++t) {
        long n1 = rng.range(-500, 500), d1 = rng.range(1, 500);
        long n2 = rng.range(-500, 500), d2 = rng.range(1, 500);
        mpq_class q1(n1, d1), q2(n2, d2);
        q1.canonicalize();
        q2.canonicalize();
        PAdic a = PAdic::from_rational(q1.get_num(), q1.get_den(), p, prec);
        PAdic b = PAdic::from_rational(q2.get_num(), q2.get_den(), p, prec);
        mpq_class s = q1 + q2, m = q1 * q2;
        CHECK(eq_to_precision(a + b,
                              PAdic::from_rational(s.get_num(), s.get_den(), p, prec)));
        CHECK(eq_to_precision(a * b,
                              PAdic::from_rational(m.get_num(), m.get_den(), p, prec)));
    }
}

TEST_CASE("inv is an involution to precision") {
    SampleBounds bounds;
    for (unsigned p : {2u, 3u, 5u}) {
        for (int t = 0; t < 500; ++t) {
            Rng rng(21, static_cast<uint64_t>(t));
            PAdic a = random_nonzero(rng, p, 32, bounds);
            CHECK(eq_to_precision(a.inv().inv(), a));
        }
    }
}

TEST_CASE("agreement_digits counts matching leading digits") {
    PAdic a = PAdic::from_int(1 + 81, 3, 8); // agrees with 1 in 4 digits
    CHECK(agreement_digits(a, PAdic::one(3, 8)) == 4);
    PAdic b = PAdic::from_int(1, 3, 8);
    CHECK(agreement_digits(b, PAdic::one(3, 8)) == 8); // zero diff: abs precision
}

TEST_CASE("finite field F_9 basics") {
    auto F = FiniteField::create(3, 2);
    KKElem x = F->element({0, 1});
    CHECK(x.pow(8) == F->one());     // multiplicative order divides 8
    CHECK(x * x.inv() == F->one());
    CHECK(x.pow(-1) == x.inv());
    CHECK((x + x.neg()).is_zero());
    CHECK_THROWS_AS(F->zero().inv(), division_by_zero);
}
