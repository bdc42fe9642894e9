#include <gtest/gtest.h>

#include "salemfield/poly.hpp"
#include "salemfield/rng.hpp"
#include "oracles.hpp"

using namespace salemfield;

namespace {

PolyQ poly_from_index(const FieldSpec& spec, const std::vector<FieldElement>& subfield,
                      u64 idx, u32 degree) {
    std::vector<FieldElement> cs;
    for (u32 i = 0; i < degree; ++i) {
        cs.push_back(subfield[idx % spec.q]);
        idx /= spec.q;
    }
    cs.push_back(one(spec)); // monic
    PolyQ r{std::move(cs), &spec};
    trim(r);
    return r;
}

} // namespace

TEST(PolyGcd, EuclideanExamples) {
    const FieldSpec f3 = build_field(3, 1, 2);
    const PolyQ a = poly_from_constants(f3, {-1, 0, 1}); // x^2 - 1
    const PolyQ b = poly_from_constants(f3, {-1, 1});    // x - 1
    EXPECT_EQ(poly_gcd(a, b), poly_from_constants(f3, {2, 1})); // x + 2
    EXPECT_EQ(poly_gcd(a, poly_one(f3)), poly_one(f3));
    const PolyQ c = poly_from_constants(f3, {-1, 0, 0, 1}); // x^3 - 1
    EXPECT_EQ(poly_gcd(c, c), c);
    EXPECT_THROW(poly_gcd(poly_zero(f3), poly_zero(f3)), value_error);
}

TEST(Factor, X3Minus1OverF2) {
    const FieldSpec spec = build_field(2, 1, 3);
    const Factorization f = factor_poly(x_pow_n_minus_1(spec));
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0].factor, poly_from_constants(spec, {1, 1}));    // x+1
    EXPECT_EQ(f.factors[0].exponent, 1u);
    EXPECT_EQ(f.factors[1].factor, poly_from_constants(spec, {1, 1, 1})); // x^2+x+1
    EXPECT_EQ(f.factors[1].exponent, 1u);
}

TEST(Factor, X2Minus1OverF3) {
    const FieldSpec spec = build_field(3, 1, 2);
    const Factorization f = factor_poly(x_pow_n_minus_1(spec));
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0].factor, poly_from_constants(spec, {1, 1})); // x+1
    EXPECT_EQ(f.factors[1].factor, poly_from_constants(spec, {2, 1})); // x+2
}

TEST(Factor, X4Minus1OverF2IsFourthPower) {
    const FieldSpec spec = build_field(2, 1, 4);
    const Factorization f = factor_poly(x_pow_n_minus_1(spec));
    ASSERT_EQ(f.factors.size(), 1u);
    EXPECT_EQ(f.factors[0].factor, poly_from_constants(spec, {1, 1}));
    EXPECT_EQ(f.factors[0].exponent, 4u);
}

TEST(Factor, ConstantInputRejected) {
    const FieldSpec spec = build_field(2, 1, 2);
    EXPECT_THROW(factor_poly(poly_one(spec)), value_error);
}

TEST(Factor, ReconstructionExhaustiveDegreeLe4) {
    for (u64 p : {2ull, 3ull}) {
        const FieldSpec spec = build_field(p, 1, 4);
        const auto subfield = subfield_elements(spec);
        for (u32 deg = 1; deg <= 4; ++deg) {
            u64 total = 1;
            for (u32 i = 0; i < deg; ++i) total *= spec.q;
            for (u64 idx = 0; idx < total; ++idx) {
                const PolyQ g = poly_from_index(spec, subfield, idx, deg);
                const Factorization f = factor_poly(g); // throws on reconstruction mismatch
                for (const auto& pf : f.factors) EXPECT_TRUE(poly_is_irreducible(pf.factor));
            }
        }
    }
}

TEST(Divisors, X2Minus1OverF3) {
    const FieldSpec spec = build_field(3, 1, 2);
    const auto divs = divisors_of(x_pow_n_minus_1(spec));
    ASSERT_EQ(divs.size(), 4u);
    EXPECT_EQ(divs[0], poly_one(spec));
    EXPECT_EQ(divs[1], poly_from_constants(spec, {1, 1}));
    EXPECT_EQ(divs[2], poly_from_constants(spec, {2, 1}));
    EXPECT_EQ(divs[3], poly_from_constants(spec, {-1, 0, 1}));
}

TEST(Divisors, TrivialAndF2Cubic) {
    const FieldSpec spec = build_field(2, 1, 3);
    EXPECT_EQ(divisors_of(poly_one(spec)).size(), 1u);
    const auto divs = divisors_of(x_pow_n_minus_1(spec));
    ASSERT_EQ(divs.size(), 4u);
    EXPECT_EQ(divs[3], poly_from_constants(spec, {1, 0, 0, 1})); // x^3 + 1
}

TEST(Mobius, PolyValues) {
    const FieldSpec spec = build_field(2, 1, 3);
    EXPECT_EQ(mobius_poly(poly_one(spec)), 1);
    EXPECT_EQ(mobius_poly(poly_from_constants(spec, {1, 1, 1})), -1);     // irreducible
    EXPECT_EQ(mobius_poly(poly_from_constants(spec, {1, 0, 1})), 0);      // (x+1)^2
    EXPECT_EQ(mobius_poly(poly_from_constants(spec, {1, 0, 0, 1})), 1);   // two factors
}

TEST(TotientPoly, FrozenExamples) {
    const FieldSpec f2 = build_field(2, 1, 3);
    EXPECT_EQ(totient_poly(x_pow_n_minus_1(f2)), 3u);
    EXPECT_EQ(totient_poly(poly_from_constants(f2, {1, 1})), 1u); // Phi_2(x+1) = 1
    const FieldSpec f3 = build_field(3, 1, 1);
    EXPECT_EQ(totient_poly(x_pow_n_minus_1(f3)), 2u); // Phi_3(x-1) = 2
}

TEST(TotientPoly, MatchesBruteCountExhaustive) {
    for (u64 p : {2ull, 3ull}) {
        const FieldSpec spec = build_field(p, 1, 4);
        const auto subfield = subfield_elements(spec);
        for (u32 deg = 1; deg <= 4; ++deg) {
            u64 total = 1;
            for (u32 i = 0; i < deg; ++i) total *= spec.q;
            for (u64 idx = 0; idx < total; ++idx) {
                const PolyQ g = poly_from_index(spec, subfield, idx, deg);
                EXPECT_EQ(totient_poly(g), oracles::brute_totient_poly(g))
                    << format_poly(g) << " over F_" << p;
            }
        }
    }
}

TEST(TotientPoly, MultiplicativeOnCoprimePairs) {
    const FieldSpec spec = build_field(3, 1, 4);
    const auto subfield = subfield_elements(spec);
    CounterRng rng{5};
    int done = 0;
    while (done < 50) {
        const PolyQ a = poly_from_index(spec, subfield, rng.next_below(81), 1 + rng.next_below(3) % 3);
        const PolyQ b = poly_from_index(spec, subfield, rng.next_below(81), 1 + rng.next_below(3) % 3);
        if (poly_gcd(a, b).degree() != 0) continue;
        EXPECT_EQ(totient_poly(poly_mul(a, b)), totient_poly(a) * totient_poly(b));
        ++done;
    }
}

TEST(TotientPoly, DivisorSumIsNorm) {
    // sum over monic divisors d | g of Phi_q(d) = q^deg(g)
    for (auto [p, n] : {std::pair<u64, u32>{2, 6}, {3, 4}, {5, 2}, {7, 3}}) {
        const FieldSpec spec = build_field(p, 1, n);
        u64 acc = 0;
        for (const auto& d : divisors_of(x_pow_n_minus_1(spec))) acc += totient_poly_or_one(d);
        EXPECT_EQ(acc, spec.order);
    }
}

TEST(SubfieldCoefficients, F4PolynomialsWork) {
    const FieldSpec spec = build_field(2, 2, 2); // F_16 over F_4
    const auto subfield = subfield_elements(spec);
    ASSERT_EQ(subfield.size(), 4u);

    const PolyQ xn1 = x_pow_n_minus_1(spec); // x^2 - 1 = (x+1)^2 over F_4
    const Factorization f = factor_poly(xn1);
    ASSERT_EQ(f.factors.size(), 1u);
    EXPECT_EQ(f.factors[0].exponent, 2u);
    EXPECT_EQ(totient_poly(xn1), 12u);
    EXPECT_EQ(oracles::brute_totient_poly(xn1), 12u);

    // a degree-2 polynomial with a genuine F_4 coefficient factors consistently
    std::vector<FieldElement> cs{subfield[2], subfield[1], one(spec)};
    const PolyQ g = poly_from_elements(spec, cs);
    const Factorization fg = factor_poly(g);
    PolyQ rebuilt{{fg.unit}, &spec};
    for (const auto& pf : fg.factors)
        for (u32 e = 0; e < pf.exponent; ++e) rebuilt = poly_mul(rebuilt, pf.factor);
    EXPECT_EQ(rebuilt, g);
}

TEST(SubfieldCoefficients, RejectsOutsideElements) {
    const FieldSpec spec = build_field(2, 2, 2);
    // the generator x of F_16 is not fixed by the 4-power map
    std::vector<FieldElement> cs{element_from_index(spec, 2), one(spec)};
    EXPECT_THROW(poly_from_elements(spec, cs), value_error);
}

TEST(Format, ReadablePolynomials) {
    const FieldSpec spec = build_field(2, 1, 3);
    EXPECT_EQ(format_poly(x_pow_n_minus_1(spec)), "x^3+1");
    EXPECT_EQ(format_poly(poly_one(spec)), "1");
    EXPECT_EQ(format_poly(poly_zero(spec)), "0");
    const FieldSpec f3 = build_field(3, 1, 2);
    EXPECT_EQ(format_poly(poly_from_constants(f3, {2, 0, 1})), "x^2+2");
}
