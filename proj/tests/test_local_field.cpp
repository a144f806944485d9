#include <gtest/gtest.h>

#include <padicdyn/local_field.hpp>

#include <random>

using namespace padicdyn;

namespace {

FieldPtr Q5() {
    static FieldPtr F = LocalField::Qp(5);
    return F;
}
FieldPtr Q2() {
    static FieldPtr F = LocalField::Qp(2);
    return F;
}
// Unramified quadratic extension of Q_3: x^2 + 2x + 2 is irreducible mod 3.
FieldPtr Q9() {
    static FieldPtr F = LocalField::unramified(3, {BigInt(2), BigInt(2), BigInt(1)});
    return F;
}
// Ramified quadratic Q_5(sqrt 5): Eisenstein x^2 - 5.
FieldPtr Q5r() {
    static FieldPtr F = LocalField::make(5, {}, {BigInt(-5), BigInt(0), BigInt(1)});
    return F;
}
// Q_2(i) = Q_2(zeta_4), ramified with uniformizer 1+i: x^2 - 2x + 2.
FieldPtr Q2i() {
    static FieldPtr F = LocalField::make(2, {}, {BigInt(2), BigInt(-2), BigInt(1)});
    return F;
}

std::vector<BigInt> digit_codes(const PadicElem& x, int k) {
    std::vector<BigInt> out;
    auto ds = x.unit_digits();
    for (int i = 0; i < k && i < static_cast<int>(ds.size()); ++i) out.push_back(ds[i].encode());
    return out;
}

} // namespace

TEST(ElemArith, IntegerAdditionWithCarry) {
    auto F = Q5();
    PadicElem a = PadicElem::from_int(F, 5);
    PadicElem b = PadicElem::from_int(F, 3);
    PadicElem c = a + b;
    EXPECT_EQ(c.val(), 0);
    auto d = digit_codes(c, 2);
    EXPECT_EQ(d[0], 3); // 8 = 3 + 1*5
    EXPECT_EQ(d[1], 1);
}

TEST(ElemArith, SelfSubtractionIsExactZero) {
    auto F = Q5();
    PadicElem a = PadicElem::from_int(F, 42);
    PadicElem z = a - a;
    EXPECT_EQ(z.zero_class(), ZeroClass::ExactlyZero);
    EXPECT_TRUE(is_inf(z.val()));
}

TEST(ElemArith, GeometricSeriesDivision) {
    // oracle: 1/(1-5) = sum 5^k; to 4 terms: 1 + 5 + 25 + 125
    auto F = Q5();
    PadicElem one = PadicElem::from_int(F, 1);
    PadicElem den = PadicElem::from_int(F, 1) - PadicElem::from_int(F, 5);
    PadicElem q = (one / den).reduced_to(4);
    auto d = digit_codes(q, 4);
    ASSERT_EQ(d.size(), 4u);
    EXPECT_EQ(d[0], 1);
    EXPECT_EQ(d[1], 1);
    EXPECT_EQ(d[2], 1);
    EXPECT_EQ(d[3], 1);
}

TEST(ElemArith, PrecisionRules) {
    auto F = Q5();
    PadicElem a = PadicElem::from_int(F, 7).reduced_to(10);
    PadicElem b = PadicElem::from_int(F, 3).reduced_to(20);
    EXPECT_EQ((a + b).aprec(), 10);             // absolute min
    EXPECT_EQ((a * b).relprec(), 10);           // relative min
    PadicElem c = PadicElem::from_int(F, 25).reduced_to(12); // val 2, rel 10
    EXPECT_EQ((a * c).val(), 2);
    EXPECT_EQ((a * c).relprec(), 10);
    EXPECT_EQ((a / c).val(), -2);
}

TEST(ElemArith, FieldMismatchThrows) {
    PadicElem a = PadicElem::from_int(Q5(), 1);
    PadicElem b = PadicElem::from_int(Q2(), 1);
    EXPECT_THROW(a + b, FieldMismatch);
}

TEST(ElemArith, DivisionByIndistinguishableZeroThrows) {
    auto F = Q5();
    PadicElem z = PadicElem::zero_to_prec(F, 8);
    PadicElem a = PadicElem::from_int(F, 3);
    EXPECT_THROW(a / z, DivisionByIndistinguishableZero);
    EXPECT_THROW(a / (a - a), DivisionByIndistinguishableZero);
}

TEST(ElemArith, ValuationProperties) {
    std::mt19937 rng(12345);
    for (auto F : {Q5(), Q2(), Q9(), Q5r()}) {
        for (int it = 0; it < 200; ++it) {
            long na = static_cast<long>(rng() % 10000) + 1;
            long nb = static_cast<long>(rng() % 10000) + 1;
            PadicElem a = PadicElem::from_int(F, na);
            PadicElem b = PadicElem::from_int(F, nb);
            EXPECT_EQ((a * b).val(), a.val() + b.val());
            PadicElem s = a + b;
            long long lo = std::min(a.val(), b.val());
            if (s.provably_nonzero()) {
                EXPECT_GE(s.val(), lo);
                if (a.val() != b.val()) EXPECT_EQ(s.val(), lo);
            }
        }
    }
}

TEST(ElemArith, RamifiedBasics) {
    auto F = Q5r();
    // v(5) = 2 since pi^2 = 5
    PadicElem five = PadicElem::from_int(F, 5);
    EXPECT_EQ(five.val(), 2);
    PadicElem pi = PadicElem::from_int(F, 1).shifted(1);
    EXPECT_EQ((pi * pi).val(), 2);
    // pi^2 / 5 is a unit congruent to 1
    PadicElem u = (pi * pi) / five;
    EXPECT_EQ(u.val(), 0);
    PadicElem d = u - PadicElem::from_int(F, 1);
    EXPECT_FALSE(d.provably_nonzero());
}

TEST(LogExp, LogOneIsZero) {
    auto F = Q5();
    PadicElem l = padic_log(PadicElem::from_int(F, 1));
    EXPECT_TRUE(l.indistinguishable_from_zero());
}

TEST(LogExp, LogOnePlusFive) {
    // oracle: partial sum of sum (-1)^{k+1} 5^k / k mod 5^3 = 5 + 2*25
    auto F = Q5();
    PadicElem x = PadicElem::from_int(F, 6);
    PadicElem l = padic_log(x).reduced_to(3);
    EXPECT_EQ(l.val(), 1);
    auto d = digit_codes(l, 2);
    EXPECT_EQ(d[0], 1);
    EXPECT_EQ(d[1], 2);
}

TEST(LogExp, RoundTrip) {
    std::mt19937 rng(777);
    for (auto F : {Q5(), Q2(), Q9(), Q5r(), Q2i()}) {
        long long c = F->poonen_level();
        int checked = 0;
        for (int it = 0; checked < 100 && it < 4000; ++it) {
            long n = static_cast<long>(rng() % 100000) + 1;
            PadicElem u = PadicElem::from_int(F, n);
            if (!u.provably_nonzero() || u.val() != 0) continue;
            // build a = 1 + pi^c * u to land in the exp/log domain
            PadicElem a = PadicElem::from_int(F, 1) + u.shifted(c);
            PadicElem la = padic_log(a);
            PadicElem back = padic_exp(la);
            PadicElem diff = back - a;
            EXPECT_FALSE(diff.provably_nonzero())
                << "round trip failed p=" << F->p << " e=" << F->e << " n=" << n;
            ++checked;
        }
        EXPECT_EQ(checked, 100);
    }
}

TEST(LogExp, ExpLogDomainErrors) {
    auto F = Q5();
    EXPECT_THROW(padic_log(PadicElem::from_int(F, 2)), ConvergenceDomain);
    EXPECT_THROW(padic_exp(PadicElem::from_int(F, 1)), ConvergenceDomain);
    auto F2 = Q2();
    // p=2: v must exceed e/(p-1) = 1, so v=1 is outside the domain
    EXPECT_THROW(padic_exp(PadicElem::from_int(F2, 2)), ConvergenceDomain);
    EXPECT_NO_THROW(padic_exp(PadicElem::from_int(F2, 4)));
}

TEST(NthRoot, SquareRootOfFour) {
    auto F = Q5();
    PadicElem r = nth_root(PadicElem::from_int(F, 4), 2);
    // both 2 and 3 are square roots; deterministic choice is 2 (smallest code)
    auto d = digit_codes(r, 1);
    EXPECT_EQ(d[0], 2);
    PadicElem chk = r * r - PadicElem::from_int(F, 4);
    EXPECT_FALSE(chk.provably_nonzero());
}

TEST(NthRoot, NonResidueFails) {
    auto F = Q5();
    EXPECT_THROW(nth_root(PadicElem::from_int(F, 2), 2), NoRootInField);
}

TEST(NthRoot, CubeRootHensel) {
    // oracle: Hensel lift from r == 1 of r^3 = 1+5
    auto F = Q5();
    PadicElem a = PadicElem::from_int(F, 6);
    PadicElem r = nth_root(a, 3);
    PadicElem chk = r.pow(3) - a;
    EXPECT_FALSE(chk.provably_nonzero());
    EXPECT_EQ(digit_codes(r, 1)[0], 1);
}

TEST(NthRoot, WildRootOfUnity) {
    // in Q_2(i) the element -1 has the square roots +-i
    auto F = Q2i();
    PadicElem m1 = PadicElem::from_int(F, -1);
    PadicElem r = nth_root(m1, 2);
    PadicElem chk = r * r - m1;
    EXPECT_FALSE(chk.provably_nonzero());
}

TEST(NthRoot, RandomRoundTrip) {
    std::mt19937 rng(99);
    for (auto F : {Q5(), Q9()}) {
        for (int it = 0; it < 25; ++it) {
            long n = static_cast<long>(rng() % 500) + 2;
            long k = 2 + static_cast<long>(rng() % 3);
            PadicElem a = PadicElem::from_int(F, n);
            if (!a.provably_nonzero() || a.val() % k != 0) continue;
            try {
                PadicElem r = nth_root(a, k);
                PadicElem chk = r.pow(k) - a;
                EXPECT_FALSE(chk.provably_nonzero());
            } catch (const NoRootInField&) {
                // legitimate outcome for non-residues
            }
        }
    }
}

TEST(Teichmuller, LiftOne) {
    auto F = Q5();
    PadicElem t = teichmuller_lift(F->res_from_code(1));
    PadicElem d = t - PadicElem::from_int(F, 1);
    EXPECT_FALSE(d.provably_nonzero());
}

TEST(Teichmuller, LiftTwoFrozenDigits) {
    // oracle: Hensel on x^4 - 1 from x == 2 gives 2 + 1*5 + 2*25 mod 5^3
    auto F = Q5();
    PadicElem t = teichmuller_lift(F->res_from_code(2)).reduced_to(3);
    auto d = digit_codes(t, 3);
    EXPECT_EQ(d[0], 2);
    EXPECT_EQ(d[1], 1);
    EXPECT_EQ(d[2], 2);
}

TEST(Teichmuller, LiftFourIsMinusOne) {
    auto F = Q5();
    PadicElem t = teichmuller_lift(F->res_from_code(4));
    PadicElem d = t + PadicElem::from_int(F, 1);
    EXPECT_FALSE(d.provably_nonzero());
}

TEST(Teichmuller, PowerAndReductionInvariants) {
    for (auto F : {Q5(), Q9(), Q2i()}) {
        for (BigInt code = 1; code < F->q; ++code) {
            ResidueElem r = F->res_from_code(code);
            PadicElem t = teichmuller_lift(r);
            PadicElem chk = t.pow(F->q - 1) - PadicElem::from_int(F, 1);
            EXPECT_FALSE(chk.provably_nonzero());
            EXPECT_EQ(t.residue().encode(), code);
        }
    }
}

TEST(RootsOfUnity, Census) {
    EXPECT_EQ(count_roots_of_unity(Q5()), 4);
    EXPECT_EQ(count_roots_of_unity(Q2()), 2);
    EXPECT_EQ(count_roots_of_unity(Q9()), 8);
    EXPECT_EQ(count_roots_of_unity(Q2i()), 4); // +-1, +-i
}

TEST(RootsOfUnity, BruteForceOracleOddP) {
    // oracle: count roots of x^(p-1) - 1 by Hensel from all residues
    for (long p : {3L, 5L, 7L, 11L}) {
        auto F = LocalField::Qp(p, 32);
        PadicPoly poly(static_cast<size_t>(p), PadicElem::zero(F));
        poly[0] = PadicElem::from_int(F, -1);
        poly[static_cast<size_t>(p - 1)] = PadicElem::from_int(F, 1);
        auto roots = find_integral_roots(poly);
        EXPECT_EQ(BigInt(roots.size()), BigInt(p - 1));
        EXPECT_EQ(count_roots_of_unity(F), BigInt(p - 1));
    }
}

TEST(MultOrder, Examples) {
    auto F = Q5();
    EXPECT_EQ(mult_order_in_residue(PadicElem::from_int(F, 2)), 4);
    EXPECT_EQ(mult_order_in_residue(PadicElem::from_int(F, -1)), 2);
    EXPECT_EQ(mult_order_in_residue(PadicElem::from_int(F, 6)), 1);
    EXPECT_THROW(mult_order_in_residue(PadicElem::from_int(F, 5)), NotAUnit);
}

TEST(Digits, RoundTripThroughDigitString) {
    auto F = Q9();
    PadicElem x = PadicElem::from_int(F, 7777).reduced_to(6);
    auto ds = x.unit_digits();
    PadicElem y = PadicElem::zero(F);
    PadicElem pipow = PadicElem::from_int_rel(F, 1, 8);
    std::vector<BigInt> codes;
    for (auto& d : ds) codes.push_back(d.encode());
    PadicElem re = PadicElem::from_digits(F, codes, x.val(), x.aprec());
    PadicElem diff = re - x;
    EXPECT_FALSE(diff.provably_nonzero());
}

TEST(FieldDesc, Validation) {
    EXPECT_THROW(LocalField::Qp(4), SchemaError);
    // x^2 + 1 is reducible mod 5
    EXPECT_THROW(LocalField::unramified(5, {BigInt(1), BigInt(0), BigInt(1)}), SchemaError);
    // non-Eisenstein: constant term valuation 2
    EXPECT_THROW(LocalField::make(5, {}, {BigInt(25), BigInt(0), BigInt(1)}), SchemaError);
    EXPECT_NO_THROW(LocalField::make(5, {}, {BigInt(-5), BigInt(5), BigInt(1)}));
    EXPECT_EQ(Q9()->q, 9);
    EXPECT_EQ(Q2i()->poonen_level(), 2 / (2 - 1) + 1);
}
