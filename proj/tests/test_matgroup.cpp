#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "locoh/matgroup.hpp"
#include "locoh/torus.hpp"

using namespace locoh;

namespace {

const Modulus kMod9(3, 2);

ModMatrix gamma1_p3() { return make_gamma1(kMod9); }
ModMatrix gamma2_p3() { return make_gamma2(kMod9); }

MatrixGroup gp3() { return enumerate(kMod9, 2, {gamma1_p3(), gamma2_p3()}); }

// <gamma1, 2*Id>: order 18, the Galois group Z/3 x (Z/9)^x of the lemma
MatrixGroup galois18() { return enumerate(kMod9, 2, {gamma1_p3(), ModMatrix::scalar(kMod9, 2, 2)}); }

// A_4 as degree-4 permutation matrices: the 3-Sylow subgroups are not normal
MatrixGroup a4_mod9() {
    ModMatrix c123(kMod9, 4, 4, {0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1});   // (1 2 3)
    ModMatrix d1234(kMod9, 4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}); // (1 2)(3 4)
    return enumerate(kMod9, 4, {c123, d1234});
}

void check_closure_and_lagrange(const MatrixGroup& g) {
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) {
            const int k = g.mul_index(i, j);
            ASSERT_GE(k, 0);
            ASSERT_LT(k, g.order());
            EXPECT_EQ(g.element(i) * g.element(j), g.element(k));
        }
    for (int i = 0; i < g.order(); ++i) EXPECT_EQ(g.order() % element_order(g, i), 0);
    for (const auto& c : cyclic_subgroups(g)) EXPECT_EQ(g.order() % c.order, 0);
}

} // namespace

TEST(Enumerate, EmptyGeneratorsGiveTrivialGroup) {
    const MatrixGroup g = enumerate(kMod9, 2, {});
    EXPECT_EQ(g.order(), 1);
    EXPECT_EQ(g.element(0), ModMatrix::identity(kMod9, 2));
}

TEST(Enumerate, CounterexampleGroupHasOrderNine) {
    const MatrixGroup g = gp3();
    EXPECT_EQ(g.order(), 9);
    check_closure_and_lagrange(g);
}

TEST(Enumerate, GaloisGroupHasOrderEighteen) {
    const MatrixGroup g = galois18();
    EXPECT_EQ(g.order(), 18);
    check_closure_and_lagrange(g);
}

TEST(Enumerate, RejectsNonInvertibleGenerator) {
    EXPECT_THROW(enumerate(kMod9, 2, {ModMatrix::scalar(kMod9, 2, 3)}), value_error);
}

TEST(Enumerate, CapRaisesResourceError) {
    EXPECT_THROW(enumerate(kMod9, 2, {gamma1_p3(), gamma2_p3()}, 5), resource_error);
}

TEST(Enumerate, BfsOrderIsDeterministic) {
    const MatrixGroup a = gp3();
    const MatrixGroup b = gp3();
    EXPECT_EQ(a.elements, b.elements);
    EXPECT_EQ(a.words, b.words);
    // identity first, then the generators in generator order
    EXPECT_TRUE(a.words[0].empty());
    EXPECT_EQ(a.words[1], (std::vector<int>{0}));
    EXPECT_EQ(a.words[2], (std::vector<int>{1}));
}

TEST(ElementOrder, KnownValues) {
    const MatrixGroup g = gp3();
    EXPECT_EQ(element_order(g, 0), 1);
    const int idx_gamma2 = g.index_of(gamma2_p3());
    ASSERT_GE(idx_gamma2, 0);
    EXPECT_EQ(element_order(g, idx_gamma2), 3); // 4^3 = 64 = 1 mod 9
    const int idx_mixed = g.index_of(gamma1_p3() * gamma2_p3());
    ASSERT_GE(idx_mixed, 0);
    EXPECT_EQ(element_order(g, idx_mixed), 3);
}

TEST(CyclicSubgroups, TrivialGroupHasNone) {
    EXPECT_TRUE(cyclic_subgroups(enumerate(kMod9, 1, {})).empty());
}

TEST(CyclicSubgroups, GpHasFourMaximalOnes) {
    // the p + 1 lines of a rank-2 elementary abelian group
    const MatrixGroup g = gp3();
    const auto subs = cyclic_subgroups(g);
    ASSERT_EQ(subs.size(), 4u);
    for (const auto& s : subs) EXPECT_EQ(s.order, 3);

    // the returned subgroups coincide, as sets, with <gamma2> and
    // <gamma1*gamma2^h> for h = 0, 1, 2
    std::set<std::vector<int>> expected;
    auto subgroup_of = [&](const ModMatrix& mat) {
        const int idx = g.index_of(mat);
        EXPECT_GE(idx, 0);
        std::vector<int> elems{0};
        int cur = idx;
        while (cur != 0) {
            elems.push_back(cur);
            cur = g.mul_index(cur, idx);
        }
        std::sort(elems.begin(), elems.end());
        return elems;
    };
    expected.insert(subgroup_of(gamma2_p3()));
    ModMatrix power = ModMatrix::identity(kMod9, 2);
    for (int h = 0; h < 3; ++h) {
        expected.insert(subgroup_of(gamma1_p3() * power));
        power = power * gamma2_p3();
    }
    std::set<std::vector<int>> got;
    for (const auto& s : subs) got.insert(s.element_indices);
    EXPECT_EQ(got, expected);
}

TEST(CyclicSubgroups, CoverTheGroup) {
    for (const MatrixGroup& g : {gp3(), galois18(), a4_mod9()}) {
        std::set<int> covered;
        for (const auto& s : cyclic_subgroups(g)) covered.insert(s.element_indices.begin(), s.element_indices.end());
        EXPECT_EQ(static_cast<int>(covered.size()), g.order());
    }
}

TEST(CyclicSubgroups, GeneratorIsLowestIndex) {
    for (const auto& s : cyclic_subgroups(galois18())) {
        // no smaller element index generates the same subgroup
        const MatrixGroup g = galois18();
        for (int i = 1; i < s.generator; ++i) {
            std::vector<int> elems{0};
            int cur = i;
            while (cur != 0) {
                elems.push_back(cur);
                cur = g.mul_index(cur, i);
            }
            std::sort(elems.begin(), elems.end());
            EXPECT_NE(elems, s.element_indices);
        }
    }
}

TEST(SylowP, PGroupIsItsOwnSylow) {
    const MatrixGroup g = gp3();
    EXPECT_EQ(sylow_p(g).order(), 9);
}

TEST(SylowP, GaloisGroupSylowIsGammaOneAndFourId) {
    const MatrixGroup s = sylow_p(galois18());
    EXPECT_EQ(s.order(), 9);
    ASSERT_EQ(s.generators.size(), 2u);
    EXPECT_EQ(s.generators[0], gamma1_p3());
    EXPECT_EQ(s.generators[1], ModMatrix::scalar(kMod9, 2, 4));
    EXPECT_EQ(elementary_abelian_profile(s), std::optional<int>(2));
}

TEST(SylowP, CoprimeOrderGivesTrivialSylow) {
    const MatrixGroup g = enumerate(kMod9, 1, {ModMatrix::scalar(kMod9, 1, 8)}); // order 2
    EXPECT_EQ(sylow_p(g).order(), 1);
}

TEST(SylowP, NonNormalSylowIsDetected) {
    // the 3-cycles of A_4 generate the whole group, past the Sylow order
    EXPECT_THROW(sylow_p(a4_mod9()), value_error);
}

TEST(ReduceMod, FullLevelIsIdentityProjection) {
    const MatrixGroup g = gp3();
    const ReductionResult red = reduce_mod(g, 2);
    EXPECT_EQ(red.image.order(), g.order());
    EXPECT_EQ(red.kernel_indices, (std::vector<int>{0}));
}

TEST(ReduceMod, GpModThreeHasKernelGammaTwo) {
    const MatrixGroup g = gp3();
    const ReductionResult red = reduce_mod(g, 1);
    EXPECT_EQ(red.image.order(), 3);
    EXPECT_EQ(red.kernel_indices.size(), 3u);
    // kernel is exactly <gamma2>
    const int idx = g.index_of(gamma2_p3());
    std::vector<int> expected{0};
    int cur = idx;
    while (cur != 0) {
        expected.push_back(cur);
        cur = g.mul_index(cur, idx);
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(red.kernel_indices, expected);
}

TEST(ReduceMod, CongruentToIdentityReducesToTrivial) {
    const MatrixGroup g = enumerate(kMod9, 2, {gamma2_p3()}); // 4*Id = 1 mod 3
    const ReductionResult red = reduce_mod(g, 1);
    EXPECT_EQ(red.image.order(), 1);
    EXPECT_EQ(red.kernel_indices.size(), 3u);
}

TEST(ReduceMod, SylowImageIsImageSylow) {
    // Sylow subgroups project onto Sylow subgroups of the quotient
    for (const MatrixGroup& g : {gp3(), galois18()}) {
        const ReductionResult red = reduce_mod(g, 1);
        const MatrixGroup sylow = sylow_p(g, 4096);
        std::set<std::vector<std::int64_t>> projected;
        for (int i = 0; i < sylow.order(); ++i)
            projected.insert(sylow.element(i).reduce_level(1).entries);
        const MatrixGroup image_sylow = sylow_p(red.image, 4096);
        std::set<std::vector<std::int64_t>> expected;
        for (int i = 0; i < image_sylow.order(); ++i) expected.insert(image_sylow.element(i).entries);
        EXPECT_EQ(projected, expected);
    }
}

TEST(ElementaryAbelianProfile, KnownCases) {
    EXPECT_EQ(elementary_abelian_profile(enumerate(kMod9, 1, {})), std::optional<int>(0));
    EXPECT_EQ(elementary_abelian_profile(gp3()), std::optional<int>(2));
    // scalar group <2*Id> of order 6 has elements of order other than p
    EXPECT_EQ(elementary_abelian_profile(enumerate(kMod9, 1, {ModMatrix::scalar(kMod9, 1, 2)})), std::nullopt);
    // cyclic of order p^2: a unipotent shear mod 9
    const MatrixGroup shear = enumerate(kMod9, 2, {ModMatrix(kMod9, 2, 2, {1, 1, 0, 1})});
    EXPECT_EQ(shear.order(), 9);
    EXPECT_EQ(elementary_abelian_profile(shear), std::nullopt);
    // <(1+p)*Id> mod p^2 is cyclic of order p: genuinely elementary abelian
    EXPECT_EQ(elementary_abelian_profile(enumerate(kMod9, 1, {ModMatrix::scalar(kMod9, 1, 4)})), std::optional<int>(1));
}

TEST(BlockSum, PreservesOrderAndActsTrivially) {
    const MatrixGroup g = gp3();
    EXPECT_EQ(block_sum(g, 0).order(), g.order());
    const MatrixGroup b = block_sum(g, 1);
    EXPECT_EQ(b.order(), 9);
    EXPECT_EQ(b.dim, 3);
    for (int i = 0; i < b.order(); ++i) {
        EXPECT_EQ(b.element(i).at(2, 2), 1);
        EXPECT_EQ(b.element(i).at(0, 2), 0);
        EXPECT_EQ(b.element(i).at(2, 0), 0);
    }
    EXPECT_EQ(block_sum(enumerate(kMod9, 1, {}), 2).order(), 1);
}

TEST(IntegerGroup, GammaOneLiftHasOrderP) {
    const auto elems = enumerate_integer_group({gamma1_int(3)}, 100);
    EXPECT_EQ(elems.size(), 3u);
    const auto elems5 = enumerate_integer_group({gamma1_int(5)}, 100);
    EXPECT_EQ(elems5.size(), 5u);
}

TEST(IntegerGroup, SymmetricGroupOfDegreeThree) {
    const IntMatrix swap12(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    const IntMatrix cyc(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
    EXPECT_EQ(enumerate_integer_group({swap12, cyc}, 100).size(), 6u);
}

TEST(IntegerGroup, NonClosingGroupHitsCap) {
    const IntMatrix shear(2, 2, {1, 1, 0, 1}); // infinite order
    EXPECT_THROW(enumerate_integer_group({shear}, 64), resource_error);
}

TEST(IntegerGroup, NoGeneratorsGiveTrivialGroup) {
    EXPECT_EQ(enumerate_integer_group({}, 8).size(), 1u);
}
