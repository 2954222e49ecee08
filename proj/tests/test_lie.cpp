#include "jfilt/lie.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace jfilt;

TEST(Witt, Examples)
{
    EXPECT_EQ(witt_dimension(2, 1), 2);
    EXPECT_EQ(witt_dimension(2, 2), 1);
    EXPECT_EQ(witt_dimension(4, 3), 20);
    EXPECT_THROW(witt_dimension(0, 2), PreconditionError);
}

TEST(Witt, AgreesWithLyndonEnumeration)
{
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 6; ++k) {
            EXPECT_EQ(witt_dimension(n, k), oracle::count_lyndon(n, k)) << n << "," << k;
            EXPECT_EQ(static_cast<std::int64_t>(lyndon_words(n, k).size()), witt_dimension(n, k));
        }
}

TEST(Lyndon, SortedAndLyndon)
{
    auto words = lyndon_words(3, 5);
    EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
    for (const auto& w : words)
        EXPECT_TRUE(oracle::lyndon(w));
}

TEST(Lyndon, StandardFactorization)
{
    auto [u, v] = standard_factorization({0, 0, 1});
    EXPECT_EQ(u, Monomial({0}));
    EXPECT_EQ(v, Monomial({0, 1}));
    auto [u2, v2] = standard_factorization({0, 1, 1});
    EXPECT_EQ(u2, Monomial({0, 1}));
    EXPECT_EQ(v2, Monomial({1}));
}

TEST(HallBasis, Triangular)
{
    // P(w) = w + larger words.
    auto b = HallBasis::get(3, 4);
    for (std::size_t i = 0; i < b->size(); ++i) {
        const auto& e = b->expansion(i);
        ASSERT_FALSE(e.empty());
        EXPECT_EQ(b->position(e.begin()->first), static_cast<std::ptrdiff_t>(i));
        EXPECT_EQ(e.begin()->second, 1);
    }
}

TEST(Bracket, Examples)
{
    LieElement y1 = LieElement::generator(2, 0), y2 = LieElement::generator(2, 1);
    EXPECT_TRUE(lie_bracket(y1, y1).is_zero());
    LieElement b = lie_bracket(y1, lie_bracket(y1, y2));
    auto basis = HallBasis::get(2, 3);
    ASSERT_EQ(basis->word(0), Monomial({0, 0, 1}));
    EXPECT_EQ(b.coords(), std::vector<Integer>({1, 0}));
    // Oracle: brute-force tensor expansion of the nested commutator.
    oracle::Poly e = oracle::lie_commutator(oracle::Poly{{{0}, 1}},
                                            oracle::lie_commutator(oracle::Poly{{{0}, 1}}, oracle::Poly{{{1}, 1}}));
    EXPECT_EQ(oracle::expand(b), e);
    EXPECT_EQ(b.str({"y1", "y2"}), "[y1,[y1,y2]]");
}

TEST(Bracket, JacobiAndAntisymmetry)
{
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> gen(0, 3), coef(-3, 3);
    auto random_element = [&](int k) {
        LieElement u(4, k);
        for (auto& c : u.coords())
            c = coef(rng);
        return u;
    };
    for (int t = 0; t < 30; ++t) {
        LieElement a = random_element(1), b = random_element(2), c = random_element(1);
        LieElement jac = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                         lie_bracket(c, lie_bracket(a, b));
        EXPECT_TRUE(jac.is_zero());
        EXPECT_EQ(lie_bracket(a, b), Integer(-1) * lie_bracket(b, a));
        // Bilinearity against the tensor oracle.
        EXPECT_EQ(oracle::expand(lie_bracket(a, b)), oracle::lie_commutator(oracle::expand(a), oracle::expand(b)));
    }
}

TEST(Coordinates, RejectsNonLie)
{
    auto b = HallBasis::get(2, 2);
    SparseTensor t{{1, Integer(1)}};  // the word x1 x2 alone
    EXPECT_THROW(b->coordinates(t), PreconditionError);
}

TEST(GradedClass, Examples)
{
    Alphabet a(2, AlphabetKind::yOnly);
    GroupWord y1 = GroupWord::generator(a, 0), y2 = GroupWord::generator(a, 1);
    EXPECT_EQ(graded_class(commutator(y1, y2), 2), LieElement(2, 2, {1}));
    EXPECT_TRUE(graded_class(commutator(commutator(y1, y2), y2), 2).is_zero());
    LieElement c3 = graded_class(commutator(commutator(y1, y2), y2), 3);
    auto basis = HallBasis::get(2, 3);
    ASSERT_EQ(basis->word(1), Monomial({0, 1, 1}));
    oracle::Poly part = oracle::part(oracle::magnus(commutator(commutator(y1, y2), y2), 4), 3);
    EXPECT_EQ(oracle::expand(c3), part);
    EXPECT_EQ(c3.coords(), std::vector<Integer>({0, 1}));
    EXPECT_THROW(graded_class(y1, 2), PreconditionError);
}

TEST(GradedClass, DynkinProjector)
{
    // The degree-k Magnus part f of a weight-k word satisfies dynkin(f) = k f.
    std::mt19937_64 rng(4);
    Alphabet a(2, AlphabetKind::full);
    for (int t = 0; t < 30; ++t) {
        int k = 2 + t % 3;
        GroupWord c = oracle::random_word(a, 3, rng);
        for (int d = 1; d < k; ++d)
            c = commutator(c, oracle::random_word(a, 2, rng));
        auto weight = lcs_weight(c, k + 1);
        if (weight && *weight < k)
            continue;
        oracle::Poly f = oracle::part(oracle::magnus(c, k + 1), k);
        oracle::Poly kf;
        for (const auto& [m, v] : f)
            kf[m] = Integer(k) * v;
        EXPECT_EQ(oracle::dynkin(f), kf);
        EXPECT_EQ(oracle::expand(graded_class(c, k)), f);
    }
}

TEST(GradedClass, CommutatorIsBracket)
{
    std::mt19937_64 rng(8);
    Alphabet a(2, AlphabetKind::full);
    for (int t = 0; t < 40; ++t) {
        GroupWord u = oracle::random_word(a, 4, rng), v = oracle::random_word(a, 4, rng);
        int p = 1, q = 1;
        if (t % 2) {
            u = commutator(u, oracle::random_word(a, 3, rng));
            p = 2;
        }
        auto wu = lcs_weight(u, 6), wv = lcs_weight(v, 6);
        if (!wu || !wv || *wu != p || *wv != q)
            continue;
        EXPECT_EQ(graded_class(commutator(u, v), p + q), lie_bracket(graded_class(u, p), graded_class(v, q)));
    }
}

TEST(GradedClass, Additive)
{
    std::mt19937_64 rng(9);
    Alphabet a(2, AlphabetKind::full);
    for (int t = 0; t < 30; ++t) {
        GroupWord u = commutator(oracle::random_word(a, 3, rng), oracle::random_word(a, 3, rng));
        GroupWord v = commutator(oracle::random_word(a, 3, rng), oracle::random_word(a, 3, rng));
        EXPECT_EQ(graded_class(multiply(u, v), 2), graded_class(u, 2) + graded_class(v, 2));
    }
}

TEST(ApplyLinear, SubstitutesGenerators)
{
    // Swap generators: [a,b] -> [b,a] = -[a,b].
    LieElement ab = lie_bracket(LieElement::generator(2, 0), LieElement::generator(2, 1));
    std::vector<std::vector<Integer>> swap{{0, 1}, {1, 0}};
    EXPECT_EQ(apply_linear(ab, swap), Integer(-1) * ab);
    // Inclusion into three generators.
    std::vector<std::vector<Integer>> inc{{0, 1, 0}, {0, 0, 1}};
    LieElement img = apply_linear(ab, inc);
    EXPECT_EQ(img, lie_bracket(LieElement::generator(3, 1), LieElement::generator(3, 2)));
}
