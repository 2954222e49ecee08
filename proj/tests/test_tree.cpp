#include "jfilt/tree.hpp"

#include <gtest/gtest.h>

using namespace jfilt;

namespace {

LieElement gen(int n, int i) { return LieElement::generator(n, i); }

ClasperGraph tripod(int n, int a, int b, int c)
{
    GraphBuilder g(n);
    int v = g.node();
    int la = g.leaf(a), lb = g.leaf(b), lc = g.leaf(c);
    g.join(v, la);
    g.join(v, lb);
    g.join(v, lc);
    return g.build();
}

ClasperGraph clasper_tree(int& root)
{
    GraphBuilder b(4);
    root = b.leaf(0);
    int u = b.node();
    int a3 = b.leaf(2);
    int v = b.node();
    int a4 = b.leaf(3);
    int a3b = b.leaf(2);
    b.join(u, root);
    b.join(u, a3);
    b.join(u, v);
    b.join(v, a4);
    b.join(v, a3b);
    return b.build();
}

} // namespace

TEST(Validate, Examples)
{
    GraphSummary t = validate(tripod(3, 0, 1, 2));
    EXPECT_EQ(t.degree, 1);
    EXPECT_EQ(t.betti1, 0);
    EXPECT_TRUE(t.is_tree);

    GraphBuilder th(0);
    int u = th.node(), v = th.node();
    for (int i = 0; i < 3; ++i)
        th.join(u, v);
    GraphSummary s = validate(th.build(false), false);
    EXPECT_EQ(s.degree, 2);
    EXPECT_EQ(s.betti1, 2);
    EXPECT_FALSE(s.is_tree);

    int root;
    GraphSummary c = validate(clasper_tree(root));
    EXPECT_EQ(c.degree, 2);
    EXPECT_EQ(c.betti1, 0);
    EXPECT_TRUE(c.is_tree);
}

TEST(Validate, Errors)
{
    GraphBuilder b(2);
    int v = b.node();
    int l = b.leaf(0);
    b.join(v, l);
    EXPECT_THROW(b.build(), ValidationError);  // arity / cyclic order

    GraphBuilder c(2);
    int w = c.node();
    for (int i = 0; i < 3; ++i)
        c.join(w, c.leaf(std::vector<Integer>{}));
    EXPECT_THROW(c.build(true), ValidationError);  // missing labels
    EXPECT_NO_THROW(c.build(false));

    GraphBuilder d(1);
    int l1 = d.leaf(0), l2 = d.leaf(0);
    d.join(l1, l2);
    EXPECT_THROW(d.build(), ValidationError);  // no trivalent vertex
}

TEST(RootedBracket, ClasperCalibration)
{
    int root;
    ClasperGraph t = clasper_tree(root);
    EXPECT_EQ(rooted_bracket(t, root), lie_bracket(gen(4, 2), lie_bracket(gen(4, 3), gen(4, 2))));
}

TEST(RootedBracket, TripodAndErrors)
{
    ClasperGraph t = tripod(3, 0, 1, 2);
    EXPECT_EQ(rooted_bracket(t, 1), lie_bracket(gen(3, 1), gen(3, 2)));
    EXPECT_THROW(rooted_bracket(t, 0), PreconditionError);

    ClasperGraph z = t;
    z.vertices[1].label = {0, 0, 0};
    EXPECT_TRUE(rooted_bracket(z, 2).is_zero());
}

TEST(TreeToDk, Tripod)
{
    TensorElement v = tree_to_dk(tripod(3, 0, 1, 2));
    TensorElement want(3, 1);
    want.add_term(0, lie_bracket(gen(3, 1), gen(3, 2)));
    want.add_term(1, lie_bracket(gen(3, 2), gen(3, 0)));
    want.add_term(2, lie_bracket(gen(3, 0), gen(3, 1)));
    EXPECT_EQ(v, want);
    auto basis = dk_basis(3, 1);
    EXPECT_TRUE(v == basis[0] || v == Integer(-1) * basis[0]);

    ClasperGraph z = tripod(3, 0, 1, 2);
    z.vertices[2].label = {0, 0, 0};
    EXPECT_TRUE(tree_to_dk(z).is_zero());
}

TEST(TreeToDk, RejectsNonTree)
{
    GraphBuilder b(1);
    int u = b.node(), v = b.node();
    b.join(u, v);
    b.join(u, v);
    b.join(u, b.leaf(0));
    b.join(v, b.leaf(0));
    EXPECT_THROW(tree_to_dk(b.build()), PreconditionError);
}

TEST(Relations, Antisymmetry)
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        ClasperGraph tree = random_tree(3, 1 + t % 4, rng);
        ClasperGraph flipped = tree;
        for (auto& v : flipped.vertices)
            if (v.arity == 3) {
                std::swap(v.halfedges[1], v.halfedges[2]);
                break;
            }
        EXPECT_TRUE((tree_to_dk(tree) + tree_to_dk(flipped)).is_zero());
    }
}

TEST(Relations, AntisymmetryRooted)
{
    ClasperGraph t = tripod(3, 0, 1, 2);
    ClasperGraph f = t;
    std::swap(f.vertices[0].halfedges[1], f.vertices[0].halfedges[2]);
    EXPECT_EQ(rooted_bracket(t, 1), Integer(-1) * rooted_bracket(f, 1));
}

TEST(Relations, IhxExhaustiveDegreeTwo)
{
    // Leaves a,b,c,d around an internal edge; reconnections rooted at a read
    // [b,[c,d]], [[b,c],d], [c,[b,d]].
    for (int n = 1; n <= 3; ++n)
        for (int code = 0; code < n * n * n * n; ++code) {
            int labels[4], rest = code;
            for (int& l : labels) {
                l = rest % n;
                rest /= n;
            }
            auto build = [&](int u1, int u2, int v1, int v2, bool edge_second) {
                GraphBuilder b(n);
                int u = b.node(), v = b.node();
                int leaf[4];
                for (int i = 0; i < 4; ++i)
                    leaf[i] = b.leaf(labels[i]);
                b.join(u, leaf[0]);
                if (edge_second) {
                    b.join(u, v);
                    b.join(u, leaf[u2]);
                } else {
                    b.join(u, leaf[u1]);
                    b.join(u, v);
                }
                b.join(v, leaf[v1]);
                b.join(v, leaf[v2]);
                return b.build();
            };
            ClasperGraph ti = build(1, 0, 2, 3, false);
            ClasperGraph th = build(0, 3, 1, 2, true);
            ClasperGraph tx = build(2, 0, 1, 3, false);
            const int a = ti.vertices[2].id;
            EXPECT_EQ(rooted_bracket(ti, a), rooted_bracket(th, a) + rooted_bracket(tx, a));
            EXPECT_TRUE((tree_to_dk(ti) - tree_to_dk(th) - tree_to_dk(tx)).is_zero());
        }
}

TEST(Relations, Multilinear)
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        ClasperGraph a = random_tree(3, 2, rng);
        ClasperGraph b = a, c = a;
        for (std::size_t i = 0; i < a.vertices.size(); ++i)
            if (a.vertices[i].arity == 1) {
                for (auto& x : b.vertices[i].label)
                    x = static_cast<int>(rng() % 5) - 2;
                for (std::size_t j = 0; j < 3; ++j)
                    c.vertices[i].label[j] = a.vertices[i].label[j] + b.vertices[i].label[j];
                break;
            }
        EXPECT_EQ(tree_to_dk(c), tree_to_dk(a) + tree_to_dk(b));
    }
}

TEST(KernelMembership, RandomTrees)
{
    std::mt19937_64 rng(14);
    for (int t = 0; t < 500; ++t) {
        ClasperGraph tree = random_tree(2 + t % 3, 1 + t % 4, rng);
        EXPECT_TRUE(bracket_map(tree_to_dk(tree)).is_zero());
    }
}

TEST(SpanCheck, Examples)
{
    SpanReport a = span_check(4, 1);
    EXPECT_EQ(a.spanned_rank, 4);
    EXPECT_EQ(a.dk_rank, 4);
    EXPECT_EQ(a.trees, 128u);
    SpanReport b = span_check(2, 1);
    EXPECT_EQ(b.spanned_rank, 0);
    EXPECT_EQ(b.dk_rank, 0);
    SpanReport c = span_check(3, 2);
    EXPECT_EQ(c.spanned_rank, 6);
    EXPECT_EQ(c.dk_rank, 6);
    EXPECT_EQ(c.trees, 324u);
    EXPECT_THROW(span_check(5, 1), PreconditionError);
}

TEST(Dot, Renders)
{
    std::string dot = to_dot(tripod(3, 0, 1, 2));
    EXPECT_NE(dot.find("graph G"), std::string::npos);
    EXPECT_NE(dot.find("v0 -- v1"), std::string::npos);
}
