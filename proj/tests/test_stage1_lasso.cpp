#include <random>

#include <gtest/gtest.h>

#include <missreg/missreg.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace missreg;

TEST(SolveColumn, NullModelThreshold)
{
    std::mt19937_64 rng(1);
    const Matrix g = oracle::random_spd(5, rng);
    const Vector c = testing_support::random_matrix(5, 1, rng);
    const Vector b = solve_column({g, c, c.cwiseAbs().maxCoeff()}, Vector::Zero(5));
    EXPECT_TRUE(b.isZero());
}

TEST(SolveColumn, UnpenalizedNormalEquations)
{
    std::mt19937_64 rng(2);
    const Matrix g = oracle::random_spd(6, rng);
    const Vector c = testing_support::random_matrix(6, 1, rng);
    const Vector b = solve_column({g, c, 0.0}, Vector::Zero(6));
    EXPECT_TRUE(b.isApprox(g.ldlt().solve(c), 1e-6));
}

TEST(SolveColumn, IdentityGramSoftThreshold)
{
    Vector c(3);
    c << 0.9, -0.1, 0.5;
    const Matrix g = Matrix::Identity(3, 3);
    const Vector b = solve_column({g, c, 0.3}, Vector::Zero(3));
    EXPECT_NEAR(b[0], 0.6, 1e-12);
    EXPECT_EQ(b[1], 0.0);
    EXPECT_NEAR(b[2], 0.2, 1e-12);
    EXPECT_TRUE(b.isApprox(oracle::lasso(g, c, 0.3), 1e-10));
}

TEST(SolveColumn, MatchesIstaOracle)
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) {
        const Matrix g = oracle::random_spd(7, rng, 0.1);
        const Vector c = testing_support::random_matrix(7, 1, rng);
        const double lam = 0.3 * c.cwiseAbs().maxCoeff();
        const Vector b = solve_column({g, c, lam}, Vector::Zero(7));
        const Vector ref = oracle::lasso(g, c, lam);
        EXPECT_LE((b - ref).cwiseAbs().maxCoeff(), 1e-5);
    }
}

TEST(SolveColumn, KktHoldsAtSolution)
{
    std::mt19937_64 rng(4);
    const Matrix g = oracle::random_spd(8, rng);
    const Vector c = testing_support::random_matrix(8, 1, rng);
    SolveInfo info;
    const double lam = 0.2;
    const Vector b = solve_column({g, c, lam}, Vector::Zero(8), {}, &info);
    EXPECT_TRUE(info.converged);
    EXPECT_LE(lasso_kkt(b, g * b - c, lam), 1e-5);
}

TEST(SolveColumn, WarmStartDoesNotChangeSolution)
{
    std::mt19937_64 rng(5);
    const Matrix g = oracle::random_spd(6, rng);
    const Vector c = testing_support::random_matrix(6, 1, rng);
    const Vector cold = solve_column({g, c, 0.1}, Vector::Zero(6));
    const Vector warm = solve_column({g, c, 0.1}, Vector::Ones(6));
    EXPECT_LE((cold - warm).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Stage1, ZeroAtLambdaMaxAndNonzeroJustBelow)
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto m = testing_support::small_moments(seed);
        const double lmax = lambda_b_max(m);
        EXPECT_EQ(fit_stage1(m, lmax).nonzeros(), 0);
        EXPECT_GT(fit_stage1(m, 0.99 * lmax).nonzeros(), 0);
    }
}

TEST(Stage1, SingleColumnMatchesSolveColumn)
{
    const auto m = testing_support::small_moments(8, 100, 6, 1);
    const double lam = 0.2;
    const auto b = fit_stage1(m, lam);
    // Stage I weighs the l1 norm by lambda / 2 against the 1/2-scaled loss.
    const Vector col = solve_column({m.s_xx, m.s_xy_hat.col(0), 0.5 * lam}, Vector::Zero(6));
    EXPECT_LE((b.values().col(0) - col).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Stage1, ColumnsAreIndependentProblems)
{
    const auto m = testing_support::small_moments(9);
    const double lam = 0.1;
    const auto b = fit_stage1(m, lam);
    for (Index j = 0; j < m.q(); ++j) {
        const Vector ref = oracle::lasso(m.s_xx, m.s_xy_hat.col(j), 0.5 * lam);
        EXPECT_LE((b.values().col(j) - ref).cwiseAbs().maxCoeff(), 1e-5);
    }
}

TEST(Stage1, NegativeLambdaRejected)
{
    const auto m = testing_support::small_moments(10);
    EXPECT_THROW(fit_stage1(m, -1.0), data_error);
}

TEST(SolveColumn, ObjectiveNeverIncreasesAcrossSweeps)
{
    std::mt19937_64 rng(6);
    const Matrix g = oracle::random_spd(10, rng, 0.05);
    const Vector c = testing_support::random_matrix(10, 1, rng);
    std::vector<double> trace;
    solve_column({g, c, 0.05}, Vector::Zero(10), {}, nullptr, &trace);
    ASSERT_GE(trace.size(), 2u);
    for (std::size_t i = 1; i < trace.size(); ++i) EXPECT_LE(trace[i], trace[i - 1] + 1e-12);
}
