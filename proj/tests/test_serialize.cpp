#include <gtest/gtest.h>

#include <ppmat/check_result.hpp>
#include <ppmat/enumerate.hpp>
#include <ppmat/serialize.hpp>
#include <ppmat/symfun.hpp>

#include "printers.hpp"

using namespace ppmat;
using io::json;

TEST(Json, PlanePartition) {
    const PlanePartition p{{4, 4, 2}, {4, 2, 1}, {2, 2}};
    EXPECT_EQ(io::to_json(p).dump(), "[[4,4,2],[4,2,1],[2,2]]");
    EXPECT_EQ(io::plane_partition_from_json(io::parse("[[4,4,2],[4,2,1],[2,2]]")), p);
    EXPECT_EQ(io::plane_partition_from_json(io::parse("[]")), PlanePartition());
    // trailing zeros are trimmed to the canonical form
    EXPECT_EQ(io::plane_partition_from_json(io::parse("[[2,1,0],[0,0,0]]")), PlanePartition({{2, 1}}));
    EXPECT_THROW(io::plane_partition_from_json(io::parse("[[1,2]]")), InvalidArgument);
    EXPECT_THROW(io::plane_partition_from_json(io::parse("[[1],[2]]")), InvalidArgument);
    EXPECT_THROW(io::plane_partition_from_json(io::parse("{\"a\":1}")), InvalidArgument);
    EXPECT_THROW(io::plane_partition_from_json(io::parse("[[1.5]]")), InvalidArgument);
    for (const auto& q : gen_pp_box(2, 2, 3)) EXPECT_EQ(io::plane_partition_from_json(io::to_json(q)), q);
}

TEST(Json, Partition) {
    EXPECT_EQ(io::to_json(Partition({3, 3, 2})).dump(), "[3,3,2]");
    EXPECT_EQ(io::partition_from_json(io::parse("[3,3,2]")), Partition({3, 3, 2}));
    EXPECT_THROW(io::partition_from_json(io::parse("[1,2]")), InvalidArgument);
}

TEST(Json, Matrix) {
    const NMatrix d = NMatrix::from_rows({{0, 1, 0, 1}, {1, 0, 0, 1}, {0, 2, 0, 0}});
    const json j = io::to_json(d);
    EXPECT_EQ(j.dump(), R"({"cols":4,"data":[[0,1,0,1],[1,0,0,1],[0,2,0,0]],"rows":3})");
    EXPECT_EQ(io::nmatrix_from_json(j), d);
    EXPECT_THROW(io::nmatrix_from_json(io::parse(R"({"rows":1,"cols":2,"data":[[1]]})")), InvalidArgument);
    EXPECT_THROW(io::nmatrix_from_json(io::parse(R"({"rows":1,"cols":1,"data":[[-1]]})")), InvalidArgument);
    EXPECT_THROW(io::nmatrix_from_json(io::parse(R"({"rows":1})")), InvalidArgument);
}

TEST(Json, Word) {
    const Word w = Word::parse("132434", 4);
    EXPECT_EQ(io::to_json(w).dump(), R"({"letters":[1,3,2,4,3,4],"m":4})");
    EXPECT_EQ(io::word_from_json(io::to_json(w)), w);
    EXPECT_THROW(io::word_from_json(io::parse(R"({"m":2,"letters":[3]})")), InvalidArgument);
}

TEST(Json, Polynomial) {
    const MultiPoly g = g_refined(Partition({2, 1}), 2, 3);
    const json j = io::to_json(g);
    EXPECT_EQ(j["vars"], json({"x1", "x2", "z1", "z2", "z3"}));
    EXPECT_EQ(io::multipoly_from_json(j), g);

    const auto q = VarTable().scalar("q").share();
    MultiPoly big(q);
    big.add_term({3}, BigInt("123456789012345678901234567890"));
    big.add_term({0}, -1);
    const json jb = io::to_json(big);
    EXPECT_EQ(jb.dump(), R"({"terms":[{"coef":"-1","exp":[0]},{"coef":"123456789012345678901234567890","exp":[3]}],"vars":["q"]})");
    EXPECT_EQ(io::multipoly_from_json(jb), big);

    EXPECT_THROW(io::multipoly_from_json(io::parse(R"({"vars":["q"],"terms":[{"exp":[1],"coef":"x"}]})")),
                 InvalidArgument);
    EXPECT_THROW(io::multipoly_from_json(io::parse(R"({"vars":["q"],"terms":[{"exp":[1,2],"coef":"1"}]})")),
                 InvalidArgument);
    EXPECT_THROW(io::multipoly_from_json(io::parse(R"({"vars":["x2"],"terms":[]})")), InvalidArgument);
}

TEST(Json, Malformed) { EXPECT_THROW(io::parse("[[1,"), InvalidArgument); }

TEST(Json, CheckResultShape) {
    CheckRecorder rec("demo", {{"k", "1"}});
    const auto q = VarTable().scalar("q").share();
    MultiPoly a = MultiPoly::one(q), b = MultiPoly::one(q);
    b.add_term({2}, 5);
    rec.compare("series", a, b);
    rec.note("informational");
    const CheckResult r = rec.finish();
    EXPECT_FALSE(r.pass);
    ASSERT_TRUE(r.first_diff);
    EXPECT_EQ(r.first_diff->where, "series @ q^2");
    EXPECT_EQ(r.first_diff->lhs, "0");
    EXPECT_EQ(r.first_diff->rhs, "5");
    const json j = to_json(r);
    EXPECT_EQ(j["check"], "demo");
    EXPECT_EQ(j["parameters"]["k"], "1");
    EXPECT_EQ(j["pass"], false);
    EXPECT_EQ(j["notes"], json({"informational"}));
    EXPECT_EQ(j["first_diff"]["where"], "series @ q^2");
}
