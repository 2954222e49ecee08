#include "jfilt/io.hpp"
#include "jfilt/tree.hpp"

#include <gtest/gtest.h>

using namespace jfilt;

TEST(Json, Integers)
{
    Integer big("123456789012345678901234567890");
    Json j = integer_to_json(big);
    EXPECT_TRUE(j.is_string());
    EXPECT_EQ(integer_from_json(j), big);
    EXPECT_EQ(integer_to_json(Integer(-7)), Json(-7));
    EXPECT_EQ(integer_from_json(Json(-7)), Integer(-7));
    EXPECT_EQ(integer_from_json(Json("-42")), Integer(-42));
    EXPECT_THROW(integer_from_json(Json("4x")), ValidationError);
    EXPECT_THROW(integer_from_json(Json(1.5)), ValidationError);
    EXPECT_THROW(integer_from_json(Json::array()), ValidationError);
}

TEST(Json, LieAndTensorRoundTrip)
{
    LieElement u = lie_bracket(LieElement::generator(3, 0), lie_bracket(LieElement::generator(3, 1), LieElement::generator(3, 2)));
    u *= Integer("99999999999999999999");
    EXPECT_EQ(lie_from_json(to_json(u)), u);
    for (const TensorElement& t : dk_basis(3, 2))
        EXPECT_EQ(tensor_from_json(parse_json(to_json(t).dump())), t);
    EXPECT_EQ(to_json(LieElement::generator(2, 1))["text"], "b");
    EXPECT_THROW(lie_from_json(parse_json(R"({"n":2,"k":2})")), ValidationError);
    EXPECT_THROW(lie_from_json(parse_json(R"({"n":2,"k":2,"coords":[1,2]})")), ValidationError);
}

TEST(Json, AutRoundTrip)
{
    Alphabet y(2, AlphabetKind::yOnly);
    NilAut h = phi_hat(LongitudeTuple(y, 4, {parse_word(y, "(y1 y2)^-1"), parse_word(y, "(y1 y2)^-1")}), 4);
    Json j = to_json(h);
    EXPECT_EQ(j["g"], 2);
    EXPECT_EQ(j["q"], 4);
    EXPECT_EQ(aut_from_json(parse_json(j.dump())), h);

    NilAut partial = aut_from_json(parse_json(R"({"g":1,"q":3,"images":{"x1":"x1 y1"}})"));
    EXPECT_EQ(partial.image(1), parse_word(partial.alphabet(), "y1"));
    EXPECT_THROW(aut_from_json(parse_json(R"({"g":1,"q":3,"images":{"z1":"x1"}})")), ValidationError);
    EXPECT_THROW(aut_from_json(parse_json(R"({"g":1,"q":3,"images":{"x1":3}})")), ValidationError);
    EXPECT_THROW(aut_from_json(parse_json(R"({"g":0,"q":3,"images":{}})")), ValidationError);
    EXPECT_THROW(aut_from_json(parse_json(R"({"g":1,"images":{}})")), ValidationError);
    EXPECT_THROW(aut_from_json(parse_json(R"({"g":1,"q":3,"images":{"x1":"x7"}})")), ValidationError);
}

TEST(Json, TupleRoundTrip)
{
    Alphabet x(2, AlphabetKind::xOnly);
    LongitudeTuple m(x, 3, {parse_word(x, "[x1,x2]"), parse_word(x, "x1^3")});
    Json j = to_json(m);
    EXPECT_EQ(j["kind"], "x");
    EXPECT_EQ(tuple_from_json(j), m);
    LongitudeTuple l = tuple_from_json(parse_json(R"({"g":2,"q":3,"entries":["[y1,y2]","1"]})"));
    EXPECT_EQ(l.alphabet.kind(), AlphabetKind::yOnly);
    EXPECT_TRUE(l.entries[1].empty());
    EXPECT_THROW(tuple_from_json(parse_json(R"({"g":2,"q":3,"kind":"z","entries":["1","1"]})")), ValidationError);
    EXPECT_THROW(tuple_from_json(parse_json(R"({"g":2,"q":3,"entries":["1"]})")), ValidationError);
    EXPECT_THROW(tuple_from_json(parse_json(R"({"g":2,"q":3,"entries":["x1","1"]})")), ValidationError);
}

TEST(Json, GraphRoundTrip)
{
    GraphBuilder b(3);
    int u = b.node(), v = b.node();
    b.join(u, b.leaf(0));
    b.join(u, b.leaf(std::vector<Integer>{Integer(1), Integer(-1), Integer(2)}));
    b.join(u, v);
    b.join(v, b.leaf(2));
    b.join(v, b.leaf(1));
    ClasperGraph g = b.build();
    ClasperGraph back = graph_from_json(parse_json(to_json(g).dump()));
    EXPECT_EQ(validate(back).degree, 2);
    EXPECT_EQ(tree_to_dk(back), tree_to_dk(g));
    EXPECT_EQ(to_json(back), to_json(g));
}

TEST(Json, GraphErrors)
{
    EXPECT_THROW(graph_from_json(parse_json(R"({"vertices":[{"id":0,"arity":3}],"edges":[]})")), ValidationError);
    EXPECT_THROW(graph_from_json(parse_json(R"({"vertices":[{"id":0,"arity":1}],"edges":[]})")), ValidationError);
    EXPECT_THROW(graph_from_json(parse_json(R"({"vertices":[],"edges":[[1,2,3]]})")), ValidationError);
    EXPECT_THROW(graph_from_json(parse_json(R"({"vertices":{},"edges":[]})")), ValidationError);
    ClasperGraph odd = graph_from_json(parse_json(
        R"({"vertices":[{"id":0,"arity":3},{"id":1,"arity":3}],"edges":[[0,3],[1,4]],"cyclic":{"0":[0,1,2],"1":[3,4,5]}})"));
    EXPECT_THROW(validate(odd, false), ValidationError);
}

TEST(Json, Orientation)
{
    ClasperGraph g = graph_from_json(parse_json(
        R"({"vertices":[{"id":0,"arity":3},{"id":1,"arity":3}],"edges":[[0,3],[1,4],[2,5]],"cyclic":{"0":[0,1,2],"1":[3,4,5]}})"));
    Json o = orientation_to_json(g, {true, false, true});
    EXPECT_EQ(o["0"], "0->3");
    EXPECT_EQ(o["1"], "4->1");
    EXPECT_EQ(o["2"], "2->5");
}

TEST(Json, ParseErrors)
{
    EXPECT_THROW(parse_json("{\"g\": "), ValidationError);
    EXPECT_THROW(read_json_file("/nonexistent/file.json"), ValidationError);
}
