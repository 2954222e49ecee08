#include "jfilt/collect.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace jfilt;

namespace {

const Alphabet F1(1, AlphabetKind::full);
const Alphabet F2(2, AlphabetKind::full);
const Alphabet F3(3, AlphabetKind::full);

GroupWord w(const Alphabet& a, const char* s) { return parse_word(a, s); }

bool same_series(const TruncatedSeries& s, const oracle::Poly& p)
{
    oracle::Poly q;
    for (const auto& [m, c] : s.terms())
        q[m] = c;
    return q == p;
}

} // namespace

TEST(Reduce, CancelsAndMerges)
{
    EXPECT_TRUE(GroupWord::reduce(F1, {{0, 1}, {0, -1}}).empty());
    GroupWord merged = GroupWord::reduce(F1, {{0, 1}, {1, 1}, {1, 1}});
    EXPECT_EQ(merged.str(), "x1 y1^2");
    GroupWord c = GroupWord::reduce(F1, {{0, 1}, {1, 1}, {0, -1}, {1, -1}});
    EXPECT_EQ(c.letters().size(), 4u);
    EXPECT_EQ(GroupWord::reduce(F1, c.letters()), c);
}

TEST(Reduce, RejectsBadGenerator)
{
    EXPECT_THROW(GroupWord::reduce(F1, {{2, 1}}), ValidationError);
    EXPECT_THROW(GroupWord::reduce(F1, {{-1, 1}}), ValidationError);
}

TEST(Reduce, NestedCancellation)
{
    GroupWord u = GroupWord::reduce(F2, {{0, 1}, {1, 2}, {2, 1}, {2, -1}, {1, -2}, {0, -1}});
    EXPECT_TRUE(u.empty());
}

TEST(GroupOps, Examples)
{
    EXPECT_TRUE(multiply(w(F1, "x1"), w(F1, "x1^-1")).empty());
    EXPECT_EQ(invert(w(F2, "x1 y2")).str(), "y2^-1 x1^-1");
    EXPECT_EQ(commutator(w(F1, "x1"), w(F1, "y1")).str(), "x1 y1 x1^-1 y1^-1");
    EXPECT_TRUE(commutator(w(F2, "x1 y2"), w(F2, "x1 y2")).empty());
    EXPECT_THROW(multiply(w(F1, "x1"), w(F2, "x1")), ValidationError);
}

TEST(GroupOps, InvolutionAndAssociativity)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        GroupWord a = oracle::random_word(F3, 8, rng), b = oracle::random_word(F3, 8, rng),
                  c = oracle::random_word(F3, 8, rng);
        EXPECT_EQ(invert(invert(a)), a);
        EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
        EXPECT_TRUE(multiply(a, invert(a)).empty());
    }
}

TEST(Omega, Formula)
{
    EXPECT_EQ(omega(1).str(), "y1^-1 x1 y1 x1^-1");
    EXPECT_EQ(omega(2).str(), "y2^-1 y1^-1 x1 y1 x1^-1 x2 y2 x2^-1");
    for (auto e : omega(3).abelianization())
        EXPECT_EQ(e, 0);
}

TEST(Parse, Grammar)
{
    EXPECT_EQ(w(F3, "[x1,y1]^-2 y3"), multiply(power(commutator(w(F3, "x1"), w(F3, "y1")), -2), w(F3, "y3")));
    EXPECT_EQ(w(F2, "(x1 y2)^2"), w(F2, "x1 y2 x1 y2"));
    EXPECT_TRUE(w(F2, "1").empty());
    EXPECT_TRUE(w(F2, "").empty());
    EXPECT_EQ(w(F2, "[[x1,y1],x2]"), commutator(commutator(w(F2, "x1"), w(F2, "y1")), w(F2, "x2")));
    EXPECT_THROW(w(F2, "x3"), ValidationError);
    EXPECT_THROW(w(F2, "[x1,y1"), ValidationError);
    EXPECT_THROW(w(F2, "z1"), ValidationError);
    EXPECT_THROW(parse_word(Alphabet(2, AlphabetKind::yOnly), "x1"), ValidationError);
}

TEST(Magnus, Examples)
{
    TruncatedSeries s = magnus_expand(w(F1, "x1"), 3);
    EXPECT_EQ(s.coeff({}), 1);
    EXPECT_EQ(s.coeff({0}), 1);
    EXPECT_EQ(s.terms().size(), 2u);

    TruncatedSeries c = magnus_expand(commutator(w(F1, "x1"), w(F1, "y1")), 3);
    EXPECT_EQ(c.terms().size(), 3u);
    EXPECT_EQ(c.coeff({0, 1}), 1);
    EXPECT_EQ(c.coeff({1, 0}), -1);

    TruncatedSeries o = magnus_expand(omega(1), 3);
    EXPECT_EQ(o.lowest_nonconstant_degree(), 2);
    EXPECT_EQ(o.coeff({0, 1}), 1);
    EXPECT_EQ(o.coeff({1, 0}), -1);

    EXPECT_THROW(magnus_expand(w(F1, "x1"), 1), PreconditionError);
}

TEST(Magnus, InverseLetterSeries)
{
    TruncatedSeries s = magnus_expand(w(F1, "x1^-1"), 5);
    for (int j = 0; j < 5; ++j)
        EXPECT_EQ(s.coeff(Monomial(j, 0)), j % 2 ? -1 : 1);
}

TEST(Magnus, MatchesLetterwiseOracle)
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        GroupWord u = oracle::random_word(F2, 6, rng);
        EXPECT_TRUE(same_series(magnus_expand(u, 4), oracle::magnus(u, 4))) << u.str();
    }
}

TEST(Magnus, Homomorphism)
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        GroupWord u = oracle::random_word(F2, 7, rng), v = oracle::random_word(F2, 7, rng);
        EXPECT_EQ(magnus_expand(multiply(u, v), 5), magnus_expand(u, 5) * magnus_expand(v, 5));
    }
}

TEST(Weight, Examples)
{
    EXPECT_EQ(lcs_weight(w(F1, "x1"), 6), 1);
    EXPECT_EQ(lcs_weight(w(F1, "[x1,y1]"), 6), 2);
    EXPECT_EQ(lcs_weight(w(F1, "[[x1,y1],x1]"), 6), 3);
    EXPECT_EQ(lcs_weight(GroupWord(F1), 6), std::nullopt);
    EXPECT_EQ(lcs_weight(w(F1, "[[[x1,y1],x1],y1]"), 4), std::nullopt);
}

TEST(Weight, NestedCommutatorsAndEquality)
{
    // Left-normed commutators of generators up to depth 5; the degree-d
    // oracle part is nonzero exactly when the weight equals the depth.
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> gen(0, F2.size() - 1);
    for (int t = 0; t < 100; ++t) {
        int depth = 1 + t % 5;
        GroupWord c = GroupWord::generator(F2, gen(rng));
        for (int d = 1; d < depth; ++d)
            c = commutator(c, GroupWord::generator(F2, gen(rng)));
        auto weight = lcs_weight(c, 7);
        int wv = weight ? *weight : 7;
        EXPECT_GE(wv, depth);
        oracle::Poly p = oracle::magnus(c, 7);
        bool lowest_nonzero = !oracle::part(p, depth).empty();
        EXPECT_EQ(lowest_nonzero, wv == depth);
        for (int q = 2; q <= 7; ++q)
            EXPECT_EQ(nilpotent_equal(c, GroupWord(F2), q), wv >= q);
    }
}

TEST(NormalForm, CanonicalAndFaithful)
{
    std::mt19937_64 rng(19);
    for (int t = 0; t < 40; ++t) {
        GroupWord u = oracle::random_word(F2, 10, rng);
        for (int q = 2; q <= 5; ++q) {
            GroupWord nf = nilpotent_normal_form(u, q);
            EXPECT_TRUE(nilpotent_equal(nf, u, q));
            EXPECT_EQ(nilpotent_normal_form(nf, q), nf);
            // A word differing by a weight-q commutator has the same form.
            GroupWord deep = GroupWord::generator(F2, 0);
            for (int d = 1; d < q; ++d)
                deep = commutator(deep, GroupWord::generator(F2, 2 + d % 2));
            EXPECT_EQ(nilpotent_normal_form(multiply(u, deep), q), nf);
        }
    }
}

TEST(NormalForm, BasicCommutatorLeadingTerm)
{
    auto basis = HallBasis::get(3, 4);
    Alphabet a(3, AlphabetKind::yOnly);
    for (std::size_t i = 0; i < basis->size(); ++i) {
        GroupWord c = basic_commutator(a, basis->word(i));
        LieElement cls = graded_class(c, 4);
        for (std::size_t j = 0; j < basis->size(); ++j)
            EXPECT_EQ(cls.coords()[j], i == j ? 1 : 0);
    }
}
