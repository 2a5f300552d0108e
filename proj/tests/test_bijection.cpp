#include <gtest/gtest.h>

#include <set>

#include <ppmat/bijection.hpp>
#include <ppmat/enumerate.hpp>

#include "oracles.hpp"
#include "printers.hpp"

using namespace ppmat;

namespace {

const PlanePartition kExample32{{4, 4, 2}, {4, 2, 1}, {2, 2}};
const NMatrix kExample32Matrix = NMatrix::from_rows({{0, 1, 0, 1}, {1, 0, 0, 1}, {0, 2, 0, 0}});
const PlanePartition kWordTableau{{6, 5, 3, 1}, {6, 5, 3}, {6, 5, 2}, {6, 4}};

}  // namespace

TEST(Phi, GoldenExample) { EXPECT_EQ(phi(kExample32, 3, 4), kExample32Matrix); }

TEST(Phi, EdgeCases) {
    EXPECT_EQ(phi(PlanePartition(), 2, 2), NMatrix(2, 2));
    EXPECT_EQ(phi(PlanePartition({{1}}), 1, 1), NMatrix::from_rows({{1}}));
    // padding: the same pi with a larger declared codomain
    const NMatrix padded = phi(kExample32, 4, 5);
    EXPECT_EQ(padded.rows(), 4);
    EXPECT_EQ(padded.at(3, 2), 2);
    EXPECT_EQ(padded.total(), 6);
}

TEST(Phi, OutOfDomain) {
    EXPECT_THROW(phi(kExample32, 2, 4), DomainError);
    EXPECT_THROW(phi(kExample32, 3, 3), DomainError);
}

TEST(PhiInverse, GoldenExample) {
    EXPECT_EQ(phi_inverse(kExample32Matrix), kExample32);
    EXPECT_EQ(phi_inverse(NMatrix(3, 3)), PlanePartition());
}

TEST(PhiInverse, InsertionSteps) {
    PlanePartition p;
    p = add_entry_in_row(p, 4, 2);
    EXPECT_EQ(p, PlanePartition({{4}, {4}}));
    p = add_entry_in_row(p, 4, 1);
    EXPECT_EQ(p, PlanePartition({{4, 4}, {4}}));
    p = add_entry_in_row(p, 2, 3);
    p = add_entry_in_row(p, 2, 3);
    EXPECT_EQ(p, PlanePartition({{4, 4}, {4, 2}, {2, 2}}));
    EXPECT_EQ(add_entry_in_row(PlanePartition(), 1, 1), PlanePartition({{1}}));
}

TEST(PhiInverse, InvalidInsertion) {
    // a larger value below smaller ones breaks column monotonicity
    EXPECT_THROW(add_entry_in_row(PlanePartition({{1}}), 3, 2), DomainError);
    EXPECT_THROW(add_entry_in_row(PlanePartition(), 0, 1), InvalidArgument);
}

TEST(PathWeight, Examples) {
    EXPECT_EQ(max_downright_path_weight(kExample32Matrix, {1, 1}, {3, 4}), 3);
    EXPECT_EQ(max_downright_path_weight(NMatrix(3, 3), {1, 1}, {3, 3}), 0);
    EXPECT_EQ(max_downright_path_weight(NMatrix::from_rows({{5}}), {1, 1}, {1, 1}), 5);
    EXPECT_THROW(max_downright_path_weight(kExample32Matrix, {2, 2}, {1, 4}), DomainError);
}

TEST(Words, WordToMatrix) {
    const NMatrix d = word_to_matrix(Word::parse("132434", 4));
    EXPECT_EQ(d, NMatrix::from_rows({{1, 0, 0, 0, 0, 0},
                                     {0, 0, 1, 0, 0, 0},
                                     {0, 1, 0, 0, 1, 0},
                                     {0, 0, 0, 1, 0, 1}}));
    EXPECT_EQ(word_to_matrix(Word::parse("1", 1)), NMatrix::from_rows({{1}}));
    EXPECT_EQ(word_to_matrix(Word::parse("11", 2)), NMatrix::from_rows({{1, 1}, {0, 0}}));
}

TEST(Words, StrictTableau) {
    EXPECT_EQ(word_to_strict_tableau(Word::parse("132434", 4)), kWordTableau);
    EXPECT_EQ(word_to_strict_tableau(Word::parse("1", 1)), PlanePartition({{1}}));
    // D(21) has d_{2,1} = d_{1,2} = 1: insert 2 in row 1, then 1 in row 2
    EXPECT_EQ(word_to_strict_tableau(Word::parse("21", 2)), PlanePartition({{2}, {1}}));
    EXPECT_EQ(word_to_strict_tableau(Word::parse("12", 2)), PlanePartition({{2, 1}, {2}}));
    EXPECT_EQ(strict_tableau_to_word(kWordTableau, 4), Word::parse("132434", 4));
    EXPECT_EQ(strict_tableau_to_word(PlanePartition({{1}}), 1), Word::parse("1", 1));
    EXPECT_EQ(strict_tableau_to_word(PlanePartition({{2}, {1}}), 2), Word::parse("21", 2));
    EXPECT_EQ(strict_tableau_to_word(PlanePartition({{2, 1}, {2}}), 2), Word::parse("12", 2));
    EXPECT_THROW(strict_tableau_to_word(PlanePartition({{1, 1}}), 2), DomainError);
    EXPECT_THROW(strict_tableau_to_word(kWordTableau, 3), DomainError);
}

TEST(Words, IsStrictTableau) {
    EXPECT_TRUE(is_strict_tableau(kWordTableau, 6));
    EXPECT_FALSE(is_strict_tableau(PlanePartition({{1, 1}}), 1));
    EXPECT_TRUE(is_strict_tableau(PlanePartition({{2}, {1}}), 2));
    EXPECT_FALSE(is_strict_tableau(PlanePartition({{2}}), 2));  // 1 missing
    EXPECT_TRUE(is_strict_tableau(PlanePartition(), 0));
}

TEST(Greene, LisTail) {
    const Word w = Word::parse("132434", 4);
    EXPECT_EQ(lis_tail(w, 4), 4);
    EXPECT_EQ(lis_tail(w, 3), 3);
    EXPECT_EQ(lis_tail(w, 2), 3);
    EXPECT_EQ(lis_tail(w, 1), 2);
    EXPECT_EQ(lis_tail(Word::parse("111", 3), 2), 0);
    EXPECT_EQ(lis_tail(Word::parse("3333", 3), 1), 4);
    EXPECT_THROW(lis_tail(w, 0), InvalidArgument);
    EXPECT_THROW(lis_tail(w, 5), InvalidArgument);
}

TEST(Greene, Shape) {
    EXPECT_EQ(greene_shape(Word::parse("132434", 4)), Partition({4, 3, 3, 2}));
    EXPECT_EQ(greene_shape(Word::parse("", 3)), Partition());
    EXPECT_EQ(greene_shape(Word::parse("4444", 4)), Partition({4, 4, 4, 4}));
}

TEST(Greene, LisMatchesSubsetOracle) {
    for (int n = 0; n <= 7; ++n)
        for_each_word(n, 3, [&](const Word& w) {
            for (int i = 1; i <= 3; ++i) ASSERT_EQ(lis_tail(w, i), oracle::lis_subsets(w.letters(), 3, i)) << w.to_string();
        });
}

TEST(Roundtrip, PhiInverseOfPhiOverBox) {
    int count = 0;
    for (const auto& a : oracle::pp_box(3, 3, 3)) {
        const PlanePartition p(a);
        ASSERT_EQ(phi_inverse(phi(p, 3, 3)), p) << p.to_string();
        ++count;
    }
    EXPECT_EQ(count, 980);
}

TEST(Roundtrip, PhiOfPhiInverseOverMatrices) {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for_each_matrix(n, m, MatrixBound::total_at_most(5), [&](const NMatrix& d) {
                const PlanePartition p = phi_inverse(d);
                ASSERT_LE(p.num_rows(), n);
                ASSERT_LE(p.max_entry(), m);
                ASSERT_EQ(phi(p, n, m), d) << d.to_string();
            });
}

TEST(Roundtrip, WeightTransport) {
    for (const auto& a : oracle::pp_box(3, 3, 3)) {
        const PlanePartition p(a);
        const NMatrix d = phi(p, 3, 3);
        EXPECT_EQ(d.col_sums(), column_counts(p, 3));
        auto rows = row_descent_counts(p);
        rows.resize(3, 0);
        EXPECT_EQ(d.row_sums(), rows);
        EXPECT_EQ(d.total(), des(p));
        for (const auto& [key, cols] : descent_level_sets(p))
            EXPECT_EQ(d.at(key.first, key.second), static_cast<int>(cols.size()));
    }
}

TEST(Roundtrip, FirstRowIsHeaviestPath) {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for_each_matrix(n, m, MatrixBound::total_at_most(4), [&](const NMatrix& d) {
                EXPECT_EQ(shape(phi_inverse(d)).first(), max_downright_path_weight(d, {1, 1}, {n, m}));
            });
}

TEST(Roundtrip, GreeneLawAndWordBijection) {
    for (int n = 0; n <= 6; ++n)
        for (int m = 1; m <= 4; ++m) {
            std::set<PlanePartition> seen;
            for_each_word(n, m, [&](const Word& w) {
                const PlanePartition t = word_to_strict_tableau(w);
                ASSERT_EQ(shape(t), greene_shape(w)) << w.to_string();
                ASSERT_TRUE(is_strict_tableau(t, n));
                ASSERT_EQ(strict_tableau_to_word(t, m), w);
                seen.insert(t);
            });
            std::size_t words = 1;
            for (int i = 0; i < n; ++i) words *= static_cast<std::size_t>(m);
            EXPECT_EQ(seen.size(), words);
        }
}
