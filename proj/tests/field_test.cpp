#include <gtest/gtest.h>

#include "salemfield/field.hpp"
#include "salemfield/rng.hpp"
#include "oracles.hpp"

using namespace salemfield;

TEST(BuildField, CanonicalModulusF8) {
    const FieldSpec spec = build_field(2, 1, 3);
    EXPECT_EQ(spec.modulus, (fp::Poly{1, 1, 0, 1})); // x^3 + x + 1
    EXPECT_EQ(spec.order, 8u);
    EXPECT_EQ(spec.q, 2u);
}

TEST(BuildField, PrimeFieldModulusIsX) {
    const FieldSpec spec = build_field(3, 1, 1);
    EXPECT_EQ(spec.modulus, (fp::Poly{0, 1}));
    EXPECT_EQ(spec.order, 3u);
}

TEST(BuildField, AcceptsSuppliedIrreducible) {
    const FieldSpec spec = build_field(2, 1, 3, fp::Poly{1, 0, 1, 1}); // x^3 + x^2 + 1
    EXPECT_EQ(spec.modulus, (fp::Poly{1, 0, 1, 1}));
}

TEST(BuildField, Errors) {
    EXPECT_THROW(build_field(4, 1, 2), value_error);                        // composite p
    EXPECT_THROW(build_field(2, 1, 3, fp::Poly{1, 0, 0, 1}), value_error);  // x^3+1 reducible
    EXPECT_THROW(build_field(2, 1, 3, fp::Poly{1, 1, 1}), value_error);     // degree mismatch
    EXPECT_THROW(build_field(2, 0, 3), value_error);
}

TEST(BuildField, KnownCanonicalModuli) {
    EXPECT_EQ(build_field(2, 1, 2).modulus, (fp::Poly{1, 1, 1}));        // x^2+x+1
    EXPECT_EQ(build_field(3, 1, 2).modulus, (fp::Poly{1, 0, 1}));        // x^2+1
    EXPECT_EQ(build_field(2, 1, 4).modulus, (fp::Poly{1, 1, 0, 0, 1}));  // x^4+x+1
    EXPECT_EQ(build_field(5, 1, 2).modulus, (fp::Poly{2, 0, 1}));        // x^2+2
    EXPECT_EQ(build_field(3, 1, 3).modulus, (fp::Poly{1, 2, 0, 1}));     // x^3+2x+1
}

TEST(Arithmetic, F8Reduction) {
    const FieldSpec spec = build_field(2, 1, 3);
    const FieldElement x = element_from_index(spec, 2);
    const FieldElement x2 = element_from_index(spec, 4);
    EXPECT_EQ(mul(x, x2), element_from_index(spec, 3)); // x^3 = x + 1
}

TEST(Arithmetic, InverseOfOne) {
    for (auto [p, k, n] : {std::tuple<u64, u32, u32>{2, 1, 3}, {3, 1, 2}, {5, 1, 2}, {2, 2, 2}}) {
        const FieldSpec spec = build_field(p, k, n);
        EXPECT_EQ(inv(one(spec)), one(spec));
    }
}

TEST(Arithmetic, PowCyclesGroup) {
    const FieldSpec spec = build_field(2, 1, 3);
    const FieldElement x = element_from_index(spec, 2);
    EXPECT_EQ(pow(x, 7), one(spec));
    EXPECT_NE(pow(x, 3), one(spec));
}

TEST(Arithmetic, Errors) {
    const FieldSpec f8 = build_field(2, 1, 3);
    const FieldSpec f4 = build_field(2, 1, 2);
    EXPECT_THROW(inv(zero(f8)), value_error);
    EXPECT_THROW(mul(one(f8), one(f4)), value_error);
    EXPECT_THROW(add(one(f8), one(f4)), value_error);
}

TEST(Arithmetic, FieldAxiomsExhaustiveSmall) {
    for (auto [p, k, n] : {std::tuple<u64, u32, u32>{2, 1, 3}, {3, 1, 2}, {2, 1, 4}}) {
        const FieldSpec spec = build_field(p, k, n);
        std::vector<FieldElement> all;
        for (u64 i = 0; i < spec.order; ++i) all.push_back(element_from_index(spec, i));
        for (const auto& a : all) {
            for (const auto& b : all) {
                EXPECT_EQ(add(a, b), add(b, a));
                EXPECT_EQ(mul(a, b), mul(b, a));
                if (!b.is_zero()) {
                    // inverses: (a*b) * b^{-1} = a
                    EXPECT_EQ(mul(mul(a, b), inv(b)), a);
                }
                for (const auto& c : all) {
                    EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
                    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
                }
            }
        }
    }
}

TEST(Arithmetic, FieldAxiomsRandomizedLarger) {
    const FieldSpec spec = build_field(3, 1, 4); // F_81
    CounterRng rng{7};
    for (int trial = 0; trial < 500; ++trial) {
        const FieldElement a = element_from_index(spec, rng.next_below(spec.order));
        const FieldElement b = element_from_index(spec, rng.next_below(spec.order));
        const FieldElement c = element_from_index(spec, rng.next_below(spec.order));
        EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
        EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
        if (!a.is_zero()) EXPECT_EQ(mul(a, inv(a)), one(spec));
    }
}

TEST(Frobenius, SquaringMapInF8) {
    const FieldSpec spec = build_field(2, 1, 3);
    const FieldElement x = element_from_index(spec, 2);
    EXPECT_EQ(frobenius_q(x), mul(x, x));
}

TEST(Frobenius, NthIterateIsIdentity) {
    for (auto [p, k, n] : {std::tuple<u64, u32, u32>{2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}}) {
        const FieldSpec spec = build_field(p, k, n);
        for (u64 i = 0; i < spec.order; ++i) {
            FieldElement a = element_from_index(spec, i);
            FieldElement cur = a;
            for (u32 j = 0; j < spec.n; ++j) cur = frobenius_q(cur);
            EXPECT_EQ(cur, a);
        }
    }
}

TEST(Frobenius, FixesPrimeSubfield) {
    const FieldSpec spec = build_field(5, 1, 2);
    for (u64 c = 0; c < 5; ++c) {
        const FieldElement e = from_constant(spec, c);
        EXPECT_EQ(frobenius_q(e), e);
    }
}

TEST(Frobenius, IsMultiplicative) {
    const FieldSpec spec = build_field(2, 1, 4);
    for (u64 i = 0; i < spec.order; ++i)
        for (u64 j = 0; j < spec.order; ++j) {
            const FieldElement a = element_from_index(spec, i);
            const FieldElement b = element_from_index(spec, j);
            EXPECT_EQ(frobenius_q(mul(a, b)), mul(frobenius_q(a), frobenius_q(b)));
        }
}

TEST(Trace, Examples) {
    const FieldSpec f4 = build_field(2, 1, 2);
    EXPECT_EQ(trace_abs(element_from_index(f4, 2)), 1u); // tr(x) = x + x^2 = 1
    const FieldSpec f8 = build_field(2, 1, 3);
    EXPECT_EQ(trace_abs(zero(f8)), 0u);
    EXPECT_EQ(trace_abs(element_from_index(f8, 3)), 1u); // tr(x+1) = 1
}

TEST(Trace, Additive) {
    const FieldSpec spec = build_field(3, 1, 3);
    CounterRng rng{11};
    for (int trial = 0; trial < 300; ++trial) {
        const FieldElement a = element_from_index(spec, rng.next_below(spec.order));
        const FieldElement b = element_from_index(spec, rng.next_below(spec.order));
        EXPECT_EQ(trace_abs(add(a, b)), (trace_abs(a) + trace_abs(b)) % spec.p);
    }
}

TEST(Trace, SurjectsOntoPrimeField) {
    for (auto [p, k, n] : {std::tuple<u64, u32, u32>{2, 1, 3}, {3, 1, 2}, {5, 1, 2},
                           {2, 2, 2}, {7, 1, 2}, {2, 1, 12}, {3, 1, 7}}) {
        const FieldSpec spec = build_field(p, k, n);
        ASSERT_LE(spec.order, 4096u);
        std::vector<bool> hit(p, false);
        for (u64 i = 0; i < spec.order; ++i) hit[trace_abs(element_from_index(spec, i))] = true;
        for (u64 r = 0; r < p; ++r) EXPECT_TRUE(hit[r]) << "residue " << r;
    }
}

TEST(AdditiveCharacter, TrivialAtZeroFrequency) {
    const FieldSpec spec = build_field(2, 1, 3);
    for (u64 i = 0; i < spec.order; ++i) {
        const cplx v = additive_character(zero(spec), element_from_index(spec, i));
        EXPECT_NEAR(v.real(), 1.0, 1e-12);
        EXPECT_NEAR(v.imag(), 0.0, 1e-12);
    }
}

TEST(AdditiveCharacter, Orthogonality) {
    for (auto [p, k, n] : {std::tuple<u64, u32, u32>{2, 1, 3}, {3, 1, 2}, {2, 2, 2}}) {
        const FieldSpec spec = build_field(p, k, n);
        for (u64 b = 0; b < spec.order; ++b) {
            const FieldElement beta = element_from_index(spec, b);
            cplx acc{0.0, 0.0};
            for (u64 i = 0; i < spec.order; ++i)
                acc += additive_character(beta, element_from_index(spec, i));
            if (b == 0) {
                EXPECT_NEAR(acc.real(), static_cast<double>(spec.order), 1e-9);
            } else {
                EXPECT_LT(std::abs(acc), 1e-6);
            }
        }
    }
}

TEST(AdditiveCharacter, KnownValueInF8) {
    const FieldSpec spec = build_field(2, 1, 3);
    const cplx v = additive_character(one(spec), element_from_index(spec, 3)); // alpha = x+1
    EXPECT_NEAR(v.real(), -1.0, 1e-12);
    EXPECT_NEAR(v.imag(), 0.0, 1e-12);
}

TEST(AdditiveCharacter, MultiplicativeInAlpha) {
    const FieldSpec spec = build_field(5, 1, 2);
    CounterRng rng{3};
    const FieldElement beta = element_from_index(spec, 7);
    for (int trial = 0; trial < 200; ++trial) {
        const FieldElement a1 = element_from_index(spec, rng.next_below(spec.order));
        const FieldElement a2 = element_from_index(spec, rng.next_below(spec.order));
        const cplx lhs = additive_character(beta, add(a1, a2));
        const cplx rhs = additive_character(beta, a1) * additive_character(beta, a2);
        EXPECT_LT(std::abs(lhs - rhs), 1e-12);
    }
}

TEST(Indexing, RoundTrip) {
    const FieldSpec spec = build_field(3, 1, 3);
    for (u64 i = 0; i < spec.order; ++i)
        EXPECT_EQ(index_of(element_from_index(spec, i)), i);
    EXPECT_THROW(element_from_index(spec, spec.order), value_error);
}
