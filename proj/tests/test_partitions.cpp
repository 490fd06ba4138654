#include <gtest/gtest.h>

#include <set>

#include "nokit/partitions.hpp"

using namespace nokit;

TEST(GridShape, Derived) {
    GridShape s(3, 5);
    EXPECT_EQ(s.rows(), 2);
    EXPECT_EQ(s.cols(), 3);
    EXPECT_EQ(s.dim(), 6);
    EXPECT_EQ(s.dual(), GridShape(2, 5));
    EXPECT_THROW(GridShape(0, 3), std::invalid_argument);
    EXPECT_THROW(GridShape(3, 3), std::invalid_argument);
}

TEST(Partition, TextRoundTrip) {
    EXPECT_EQ(Partition().str(), "0");
    EXPECT_EQ(Partition({3, 3, 0}).str(), "3,3");
    EXPECT_EQ(Partition::parse("0"), Partition());
    EXPECT_EQ(Partition::parse("4,2,2"), Partition({4, 2, 2}));
    EXPECT_THROW(Partition::parse("1,,2"), std::invalid_argument);
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
}

TEST(Partition, CanonicalOrderIsSizeThenRows) {
    EXPECT_LT(Partition({3}), Partition({1, 1, 1, 1}));
    EXPECT_LT(Partition({1, 1}), Partition({2}));
    EXPECT_LT(Partition(), Partition({1}));
}

TEST(Steps, SouthStepExamples) {
    GridShape s(3, 5);
    EXPECT_EQ(south_steps_to_partition({1, 2}, s), Partition({3, 3}));
    EXPECT_EQ(south_steps_to_partition({4, 5}, s), Partition());
    EXPECT_EQ(south_steps_to_partition({1, 3}, s), Partition({3, 2}));
    EXPECT_THROW(south_steps_to_partition({1}, s), std::invalid_argument);
    EXPECT_THROW(south_steps_to_partition({1, 6}, s), std::invalid_argument);
}

TEST(Steps, MutuallyInverseExhaustive) {
    for (int n = 2; n <= 9; ++n)
        for (int k = 1; k < n; ++k) {
            GridShape s(k, n);
            auto all = all_partitions(s);
            EXPECT_EQ(static_cast<long long>(all.size()), binomial(n, k));
            for (const auto& p : all) {
                Subset J = partition_to_south_steps(p, s);
                EXPECT_EQ(south_steps_to_partition(J, s), p);
                EXPECT_EQ(partition_to_west_steps(p, s), complement(J, n));
                EXPECT_EQ(west_steps_to_partition(partition_to_west_steps(p, s), s), p);
            }
        }
}

TEST(MaxDiag, Examples) {
    EXPECT_EQ(max_diag(Partition({7, 7, 4, 4, 3, 1}), Partition({6, 5, 2, 2, 2, 2})), 2);
    Partition l({3, 1});
    EXPECT_EQ(max_diag(l, l), 0);
    EXPECT_EQ(max_diag(Partition({3, 3}), Partition()), 2);
}

TEST(MaxDiag, ZeroExactlyWhenContained) {
    GridShape s(3, 6);
    for (const auto& mu : all_partitions(s))
        for (const auto& lam : all_partitions(s)) EXPECT_EQ(max_diag(mu, lam) == 0, mu.subset_of(lam));
}

TEST(Diag0, Examples) {
    EXPECT_EQ(diag0(Partition({6, 4, 4, 2})), 3);
    EXPECT_EQ(diag0(Partition()), 0);
    EXPECT_EQ(diag0(max_partition(GridShape(3, 5))), 2);
}

TEST(CyclicShift, Examples) {
    GridShape s(6, 10);
    EXPECT_EQ(cyclic_shift(Partition({6, 4, 4, 2}), s), Partition({5, 3, 3, 1}));
    for (const auto& mu : all_partitions(GridShape(3, 6))) EXPECT_EQ(cyclic_shift(mu, GridShape(3, 6), 6), mu);
    for (int n = 3; n <= 7; ++n)
        for (int k = 1; k < n; ++k) {
            GridShape g(k, n);
            EXPECT_EQ(cyclic_shift(Partition(), g, g.rows()), max_partition(g));
        }
}

TEST(CyclicShift, Bijection) {
    GridShape s(3, 7);
    std::set<Partition> image;
    for (const auto& mu : all_partitions(s)) image.insert(cyclic_shift(mu, s));
    EXPECT_EQ(image.size(), all_partitions(s).size());
}

TEST(Frozen, MuForThreeFive) {
    GridShape s(3, 5);
    EXPECT_EQ(frozen_mu(1, s), Partition({3}));
    EXPECT_EQ(frozen_mu(2, s), Partition({3, 3}));
    EXPECT_EQ(frozen_mu(3, s), Partition({2, 2}));
    EXPECT_EQ(frozen_mu(4, s), Partition({1, 1}));
    EXPECT_EQ(frozen_mu(5, s), Partition());
    EXPECT_EQ(frozen_mu(0, s), Partition());
    EXPECT_EQ(frozen_mu(s.rows(), s), max_partition(s));
    EXPECT_EQ(mu_box(2, s), Partition({2}));
}

TEST(Frozen, MuBoxAddsOneBox) {
    for (int n = 3; n <= 7; ++n)
        for (int k = 1; k < n; ++k) {
            GridShape s(k, n);
            for (int i = 1; i <= n; ++i) {
                if (i == s.rows()) {
                    EXPECT_EQ(mu_box(i, s), Partition::rectangle(s.rows() - 1, k - 1));
                } else {
                    EXPECT_EQ(mu_box(i, s).size(), frozen_mu(i, s).size() + 1);
                    EXPECT_TRUE(frozen_mu(i, s).subset_of(mu_box(i, s)));
                }
            }
        }
}

TEST(BoundaryTargets, Examples) {
    GridShape s(3, 5);
    EXPECT_EQ(boundary_target_set(2, s), Subset({1, 3}));
    EXPECT_EQ(boundary_target_set(3, s), Subset({2, 4}));
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(static_cast<int>(boundary_target_set(i, s).size()), s.rows());
}
