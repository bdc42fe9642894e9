#include <gtest/gtest.h>

#include "salemfield/classify.hpp"
#include "oracles.hpp"

using namespace salemfield;

TEST(MultOrder, Examples) {
    const FieldSpec f8 = build_field(2, 1, 3);
    EXPECT_EQ(multiplicative_order(one(f8)), 1u);
    EXPECT_EQ(multiplicative_order(element_from_index(f8, 2)), 7u);
    const FieldSpec f9 = build_field(3, 1, 2);
    EXPECT_EQ(multiplicative_order(element_from_index(f9, 3)), 4u); // x, since x^2 = -1
    EXPECT_THROW(multiplicative_order(zero(f8)), value_error);
}

TEST(MultOrder, MatchesBruteForce) {
    for (auto [p, k, n] : {std::tuple<u64, u32, u32>{2, 1, 4}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}}) {
        const FieldSpec spec = build_field(p, k, n);
        for (u64 i = 1; i < spec.order; ++i) {
            const FieldElement a = element_from_index(spec, i);
            EXPECT_EQ(multiplicative_order(a), oracles::brute_order(a));
        }
    }
}

TEST(FrobeniusOrder, ZeroHasUnitAnnihilator) {
    const FieldSpec spec = build_field(2, 1, 3);
    EXPECT_EQ(frobenius_order_poly(zero(spec)), poly_one(spec));
}

TEST(FrobeniusOrder, F8Examples) {
    const FieldSpec spec = build_field(2, 1, 3);
    EXPECT_EQ(frobenius_order_poly(element_from_index(spec, 2)),
              poly_from_constants(spec, {1, 1, 1})); // x annihilated by x^2+x+1
    EXPECT_EQ(frobenius_order_poly(element_from_index(spec, 3)),
              x_pow_n_minus_1(spec)); // x+1 is normal
}

TEST(FrobeniusOrder, AlwaysDividesXnMinus1) {
    for (auto [p, k, n] : {std::tuple<u64, u32, u32>{2, 1, 4}, {3, 1, 2}, {2, 2, 2}}) {
        const FieldSpec spec = build_field(p, k, n);
        const PolyQ xn1 = x_pow_n_minus_1(spec);
        for (u64 i = 0; i < spec.order; ++i) {
            const PolyQ h = frobenius_order_poly(element_from_index(spec, i));
            EXPECT_TRUE(poly_mod(xn1, h).is_zero());
        }
    }
}

TEST(Flags, SpecExamples) {
    const FieldSpec f8 = build_field(2, 1, 3);
    EXPECT_TRUE(is_primitive(element_from_index(f8, 3)));
    EXPECT_TRUE(is_normal(element_from_index(f8, 3)));
    EXPECT_TRUE(is_primitive_normal(element_from_index(f8, 3)));
    EXPECT_FALSE(is_normal(element_from_index(f8, 2)));
    EXPECT_FALSE(is_primitive(one(f8)));
    EXPECT_FALSE(is_primitive(zero(f8)));
    EXPECT_FALSE(is_normal(zero(f8)));
    const FieldSpec f2 = build_field(2, 1, 1);
    EXPECT_TRUE(is_primitive(one(f2))); // group of order 1
}

TEST(Flags, AgreeWithIndependentOracles) {
    for (auto [p, k, n] : {std::tuple<u64, u32, u32>{2, 1, 4}, {3, 1, 3}, {2, 2, 2}, {5, 1, 2}}) {
        const FieldSpec spec = build_field(p, k, n);
        for (u64 i = 0; i < spec.order; ++i) {
            const FieldElement a = element_from_index(spec, i);
            EXPECT_EQ(is_primitive(a), oracles::brute_is_primitive(a));
            EXPECT_EQ(is_normal(a), oracles::brute_is_normal(a));
            if (spec.k == 1) {
                EXPECT_EQ(is_normal(a), oracles::brute_is_normal_rank(a));
            }
        }
    }
}

TEST(Flags, ConjugationInvariance) {
    for (auto [p, k, n] : {std::tuple<u64, u32, u32>{2, 1, 4}, {3, 1, 2}, {2, 2, 2}}) {
        const FieldSpec spec = build_field(p, k, n);
        for (u64 i = 1; i < spec.order; ++i) {
            const FieldElement a = element_from_index(spec, i);
            const FieldElement fa = frobenius_q(a);
            EXPECT_EQ(is_primitive(a), is_primitive(fa));
            EXPECT_EQ(is_normal(a), is_normal(fa));
        }
    }
}

TEST(Census, FrozenCounts) {
    const ClassCounts f8 = count_classes(build_field(2, 1, 3));
    EXPECT_EQ(f8.primitive, 6u);
    EXPECT_EQ(f8.normal, 3u);
    EXPECT_EQ(f8.primitive_normal, 3u);

    const ClassCounts f4 = count_classes(build_field(2, 1, 2));
    EXPECT_EQ(f4.primitive, 2u);
    EXPECT_EQ(f4.normal, 2u);
    EXPECT_EQ(f4.primitive_normal, 2u);

    const ClassCounts f9 = count_classes(build_field(3, 1, 2));
    EXPECT_EQ(f9.primitive, 4u);
    EXPECT_EQ(f9.normal, 4u);
    EXPECT_EQ(f9.primitive_normal, 4u);

    const ClassCounts f16 = count_classes(build_field(2, 1, 4));
    EXPECT_EQ(f16.primitive, 8u);
    EXPECT_EQ(f16.normal, 8u);
    EXPECT_EQ(f16.primitive_normal, 4u);

    // F_16 viewed over F_4: different module structure, different counts
    const ClassCounts f16q4 = count_classes(build_field(2, 2, 2));
    EXPECT_EQ(f16q4.primitive, 8u);
    EXPECT_EQ(f16q4.normal, 12u);
    EXPECT_EQ(f16q4.primitive_normal, 8u);
}

TEST(Census, CapEnforced) {
    EXPECT_THROW(count_classes(build_field(2, 1, 3), 4), cap_error);
}

TEST(Fixtures, CanonicalScanOrder) {
    const FieldSpec f8 = build_field(2, 1, 3);
    EXPECT_EQ(index_of(find_primitive_normal(f8)), 3u); // x+1
    EXPECT_EQ(index_of(find_normal_element(f8)), 3u);
    const FieldSpec f4 = build_field(2, 1, 2);
    EXPECT_EQ(index_of(find_primitive_root(f4)), 2u); // x
    const FieldSpec f2 = build_field(2, 1, 1);
    EXPECT_EQ(index_of(find_primitive_root(f2)), 1u); // degenerate group
}

TEST(LogTable, RoundTripExhaustive) {
    for (auto [p, k, n] : {std::tuple<u64, u32, u32>{2, 1, 4}, {3, 1, 2}, {2, 2, 2}}) {
        const FieldSpec spec = build_field(p, k, n);
        const LogTable table = build_log_table(spec);
        for (u64 i = 1; i < spec.order; ++i) {
            const FieldElement a = element_from_index(spec, i);
            EXPECT_EQ(pow(table.base, discrete_log(table, a)), a);
        }
        EXPECT_EQ(discrete_log(table, table.base), 1u);
        EXPECT_EQ(discrete_log(table, one(spec)), 0u);
        EXPECT_THROW(discrete_log(table, zero(spec)), value_error);
    }
}

TEST(LogTable, SpecExampleF8) {
    const FieldSpec spec = build_field(2, 1, 3);
    const LogTable table = build_log_table(spec, element_from_index(spec, 2)); // tau = x
    EXPECT_EQ(discrete_log(table, element_from_index(spec, 6)), 4u); // x^2+x = x^4
}

TEST(LogTable, RejectsNonPrimitiveBase) {
    const FieldSpec spec = build_field(3, 1, 2);
    EXPECT_THROW(build_log_table(spec, one(spec)), value_error);
    EXPECT_THROW(discrete_log_bsgs(one(spec), element_from_index(spec, 3)), value_error);
}

TEST(Bsgs, AgreesWithTable) {
    const FieldSpec spec = build_field(3, 1, 4); // F_81
    const LogTable table = build_log_table(spec);
    for (u64 i = 1; i < spec.order; ++i) {
        const FieldElement a = element_from_index(spec, i);
        EXPECT_EQ(discrete_log_bsgs(table.base, a), discrete_log(table, a));
    }
    EXPECT_THROW(discrete_log_bsgs(table.base, zero(spec)), value_error);
}

TEST(MultCharacter, TrivialAndQuadratic) {
    const FieldSpec spec = build_field(3, 1, 2); // F_9, group order 8
    const LogTable table = build_log_table(spec);
    const MultCharacter trivial(table, 1, 1);
    const MultCharacter quadratic(table, 2, 1);
    for (u64 i = 1; i < spec.order; ++i) {
        const cplx t = trivial(element_from_index(spec, i));
        EXPECT_LT(std::abs(t - cplx{1.0, 0.0}), 1e-12);
    }
    EXPECT_LT(std::abs(quadratic(table.base) - cplx{-1.0, 0.0}), 1e-12);
    EXPECT_LT(std::abs(quadratic(zero(spec))), 1e-15); // chi(0) = 0
}

TEST(MultCharacter, SeventhRootInF8) {
    const FieldSpec spec = build_field(2, 1, 3);
    const LogTable table = build_log_table(spec, element_from_index(spec, 2));
    const MultCharacter chi(table, 7, 1);
    const cplx v = chi(element_from_index(spec, 2));
    EXPECT_LT(std::abs(v - unit_root(1, 7)), 1e-12);
}

TEST(MultCharacter, Validation) {
    const FieldSpec spec = build_field(3, 1, 2);
    const LogTable table = build_log_table(spec);
    EXPECT_THROW(MultCharacter(table, 3, 1), value_error); // 3 does not divide 8
    EXPECT_THROW(MultCharacter(table, 4, 2), value_error); // gcd(2,4) != 1
}

TEST(MultCharacter, OrderDSetHasPhiDistinctMembers) {
    const FieldSpec spec = build_field(2, 1, 4); // group order 15
    const LogTable table = build_log_table(spec);
    for (u64 d : divisors_int(15)) {
        std::vector<cplx> at_base;
        for (u64 j = 1; j <= d; ++j) {
            if (std::gcd(j, d) != 1) continue;
            const cplx v = MultCharacter(table, d, j)(table.base);
            // each character of order d sends tau to a primitive d-th root
            EXPECT_LT(std::abs(std::pow(v, static_cast<double>(d)) - cplx{1.0, 0.0}), 1e-9);
            for (const cplx& seen : at_base) EXPECT_GT(std::abs(v - seen), 1e-9);
            at_base.push_back(v);
        }
        EXPECT_EQ(at_base.size(), totient_int(d));
    }
}

TEST(Fixtures, GeneratorHintCachedAndReused) {
    FieldSpec spec = build_field(3, 1, 2);
    EXPECT_FALSE(spec.generator_hint.has_value());
    const FieldElement g = discover_generator(spec);
    ASSERT_TRUE(spec.generator_hint.has_value());
    EXPECT_EQ(*spec.generator_hint, index_of(g));
    EXPECT_EQ(find_primitive_root(spec), g);
    // a stale hint is rejected rather than trusted
    spec.generator_hint = 1; // the identity is never primitive in F_9
    EXPECT_THROW(find_primitive_root(spec), integrity_error);
}

TEST(PsiPrimitive, DivisorFormExamples) {
    const FieldSpec f8 = build_field(2, 1, 3);
    const LogTable t8 = build_log_table(f8);
    EXPECT_EQ(psi_primitive_divisor(one(f8), t8), 0);
    EXPECT_EQ(psi_primitive_divisor(element_from_index(f8, 2), t8), 1);
    const FieldSpec f9 = build_field(3, 1, 2);
    const LogTable t9 = build_log_table(f9);
    EXPECT_EQ(psi_primitive_divisor(element_from_index(f9, 3), t9), 0); // order 4
    EXPECT_THROW(psi_primitive_divisor(zero(f8), t8), value_error);
}

TEST(PsiPrimitive, DivisorFreeExamples) {
    const FieldSpec f8 = build_field(2, 1, 3);
    const LogTable t8 = build_log_table(f8);
    EXPECT_EQ(psi_primitive_divisorfree(t8.base, t8), 1);
    EXPECT_EQ(psi_primitive_divisorfree(element_from_index(f8, 6), t8), 1); // log 4, gcd(4,7)=1
    const FieldSpec f9 = build_field(3, 1, 2);
    const LogTable t9 = build_log_table(f9);
    const FieldElement log2_elem = pow(t9.base, 2);
    EXPECT_EQ(psi_primitive_divisorfree(log2_elem, t9), 0); // gcd(2,8) = 2
}

TEST(PsiNormal, DivisorFormExamples) {
    const FieldSpec f8 = build_field(2, 1, 3);
    const AdditiveOrderTable tab = build_additive_order_table(f8);
    EXPECT_EQ(psi_normal_divisor(element_from_index(f8, 3), tab), 1); // x+1
    EXPECT_EQ(psi_normal_divisor(element_from_index(f8, 2), tab), 0); // x
    EXPECT_EQ(psi_normal_divisor(one(f8), tab), 0);
    EXPECT_THROW(psi_normal_divisor(zero(f8), tab), value_error);
}

TEST(PsiNormal, CharacterCountPerOrderIsTotient) {
    for (auto [p, k, n] : {std::tuple<u64, u32, u32>{2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {2, 1, 4}}) {
        const FieldSpec spec = build_field(p, k, n);
        const AdditiveOrderTable tab = build_additive_order_table(spec);
        std::vector<u64> counts(tab.divisors.size(), 0);
        for (u64 i = 0; i < spec.order; ++i) ++counts[tab.divisor_of_element[i]];
        for (std::size_t di = 0; di < tab.divisors.size(); ++di)
            EXPECT_EQ(counts[di], tab.phi_of_divisor[di]) << format_poly(tab.divisors[di]);
    }
}

TEST(PsiNormal, DivisorFreeExamples) {
    const FieldSpec f8 = build_field(2, 1, 3);
    const LogTable t8 = build_log_table(f8);
    const FieldElement eta = find_normal_element(f8); // x+1
    EXPECT_EQ(psi_normal_divisorfree(eta, eta, t8), 1);
    EXPECT_EQ(psi_normal_divisorfree(element_from_index(f8, 5), eta, t8), 1); // x^2+1 = eta^q
    EXPECT_EQ(psi_normal_divisorfree(element_from_index(f8, 2), eta, t8), 0); // x
    EXPECT_THROW(psi_normal_divisorfree(element_from_index(f8, 2), element_from_index(f8, 2), t8),
                 value_error); // eta not normal
}

TEST(Indicators, FourWayEquivalenceSmallFields) {
    for (auto [p, k, n] : {std::tuple<u64, u32, u32>{2, 1, 3}, {3, 1, 2}, {2, 1, 4}, {2, 2, 2}}) {
        const FieldSpec spec = build_field(p, k, n);
        const LogTable table = build_log_table(spec);
        const AdditiveOrderTable add_table = build_additive_order_table(spec);
        const FieldElement eta = find_normal_element(spec);
        u64 psum = 0, nsum = 0;
        for (u64 i = 1; i < spec.order; ++i) {
            const FieldElement a = element_from_index(spec, i);
            const int op = oracles::brute_is_primitive(a) ? 1 : 0;
            const int on = oracles::brute_is_normal(a) ? 1 : 0;
            EXPECT_EQ(psi_primitive_divisor(a, table), op);
            EXPECT_EQ(psi_primitive_divisorfree(a, table), op);
            EXPECT_EQ(psi_normal_divisor(a, add_table), on);
            EXPECT_EQ(psi_normal_divisorfree(a, eta, table), on);
            psum += static_cast<u64>(op);
            nsum += static_cast<u64>(on);
        }
        EXPECT_EQ(psum, totient_int(spec.order - 1));
        EXPECT_EQ(nsum, totient_poly(x_pow_n_minus_1(spec)));
    }
}

TEST(ClassificationRecord, ConsistentFlags) {
    const FieldSpec spec = build_field(3, 1, 2);
    for (u64 i = 0; i < spec.order; ++i) {
        const ClassificationRecord rec = classify_element(element_from_index(spec, i));
        EXPECT_EQ(rec.primitive, !rec.element.is_zero() && rec.mult_order == spec.order - 1);
        EXPECT_EQ(rec.normal, !rec.element.is_zero() && rec.frob_order == x_pow_n_minus_1(spec));
        EXPECT_EQ(rec.primitive_normal, rec.primitive && rec.normal);
    }
}
