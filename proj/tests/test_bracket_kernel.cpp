#include "jfilt/bracket_kernel.hpp"

#include <gtest/gtest.h>

using namespace jfilt;

namespace {

LieElement gen(int n, int i) { return LieElement::generator(n, i); }

} // namespace

TEST(BracketMap, Examples)
{
    TensorElement t(2, 1);
    t.add_term(0, lie_bracket(gen(2, 0), gen(2, 1)));
    EXPECT_EQ(bracket_map(t), lie_bracket(gen(2, 0), lie_bracket(gen(2, 0), gen(2, 1))));

    TensorElement jac(3, 1);
    jac.add_term(0, lie_bracket(gen(3, 1), gen(3, 2)));
    jac.add_term(1, lie_bracket(gen(3, 2), gen(3, 0)));
    jac.add_term(2, lie_bracket(gen(3, 0), gen(3, 1)));
    EXPECT_TRUE(bracket_map(jac).is_zero());
}

TEST(BracketMatrix, ColumnsAreImages)
{
    IntegerMatrix m = bracket_matrix(3, 2);
    ASSERT_EQ(m.size(), static_cast<std::size_t>(witt_dimension(3, 4)));
    ASSERT_EQ(m.front().size(), static_cast<std::size_t>(3 * witt_dimension(3, 3)));
    const std::size_t width = witt_dimension(3, 3);
    for (std::size_t col = 0; col < m.front().size(); ++col) {
        TensorElement t(3, 2);
        LieElement u(3, 3);
        u.coords()[col % width] = 1;
        t.add_term(static_cast<int>(col / width), u);
        LieElement img = bracket_map(t);
        for (std::size_t r = 0; r < m.size(); ++r)
            EXPECT_EQ(m[r][col], img.coords()[r]);
    }
}

TEST(BracketMatrix, RankByDenseSmith)
{
    SmithDecomposition s = smith_decompose(bracket_matrix(4, 1));
    EXPECT_EQ(s.rank, 20u);
    // Onto over Z: every invariant factor is 1.
    for (const Integer& d : s.invariants())
        EXPECT_EQ(d, 1);
}

TEST(DkRank, Examples)
{
    EXPECT_EQ(dk_rank(4, 1), 4);
    EXPECT_EQ(dk_rank(2, 1), 0);
    EXPECT_EQ(dk_rank(3, 2), 6);
    EXPECT_EQ(dk_rank_smith(3, 2), 6);
    IntegerMatrix m = bracket_matrix(3, 2);
    EXPECT_EQ(m.size(), 18u);
    EXPECT_EQ(m.front().size(), 24u);
}

TEST(DkRank, WittAgreesWithSmith)
{
    // Restricted to matrices of at most 3000 columns.
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 4; ++k) {
            if (n * witt_dimension(n, k + 1) > 3000)
                continue;
            EXPECT_EQ(dk_rank(n, k), dk_rank_smith(n, k)) << n << "," << k;
        }
}

TEST(DkRank, ExteriorCube)
{
    const std::int64_t expected[] = {0, 4, 20, 56};
    for (int g = 1; g <= 4; ++g)
        EXPECT_EQ(dk_rank(2 * g, 1), expected[g - 1]);
}

TEST(DkBasis, KernelAndSaturated)
{
    for (auto [n, k] : {std::pair{3, 1}, {3, 2}, {4, 1}, {2, 2}, {4, 2}}) {
        auto basis = dk_basis(n, k);
        ASSERT_EQ(static_cast<std::int64_t>(basis.size()), dk_rank(n, k));
        IntegerMatrix rows;
        for (const auto& b : basis) {
            EXPECT_TRUE(bracket_map(b).is_zero());
            rows.push_back(b.coords());
        }
        // Saturation: the basis spans a direct summand, so all invariants are 1.
        for (const Integer& d : smith_decompose(rows).invariants())
            EXPECT_EQ(d, 1);
    }
}

TEST(DkBasis, TripodGenerator)
{
    auto basis = dk_basis(3, 1);
    ASSERT_EQ(basis.size(), 1u);
    TensorElement tripod(3, 1);
    tripod.add_term(0, lie_bracket(gen(3, 1), gen(3, 2)));
    tripod.add_term(1, lie_bracket(gen(3, 2), gen(3, 0)));
    tripod.add_term(2, lie_bracket(gen(3, 0), gen(3, 1)));
    EXPECT_TRUE(basis[0] == tripod || basis[0] == Integer(-1) * tripod);
}

TEST(A1, Dimensions)
{
    EXPECT_EQ(a1_dimensions(1), std::make_pair(std::int64_t{0}, std::int64_t{4}));
    EXPECT_EQ(a1_dimensions(2), std::make_pair(std::int64_t{4}, std::int64_t{11}));
    EXPECT_EQ(a1_dimensions(3), std::make_pair(std::int64_t{20}, std::int64_t{22}));
    EXPECT_EQ(a1_dimensions(4), std::make_pair(std::int64_t{56}, std::int64_t{37}));
}
