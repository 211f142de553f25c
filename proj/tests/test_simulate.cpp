#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include <missreg/missreg.hpp>

using namespace missreg;
using namespace missreg::sim;

TEST(Simulate, Ar1Entries)
{
    const Matrix m = ar1_matrix(4, 0.7);
    EXPECT_NEAR(m(0, 2), 0.49, 1e-15);
    EXPECT_DOUBLE_EQ(m(1, 1), 1.0);
}

TEST(Simulate, NoMissingLeavesAllObserved)
{
    SimulationSpec s;
    s.n = 50;
    s.p = 10;
    s.q = 3;
    s.rho_w = Vector::Zero(3);
    const auto d = gen_dataset(s);
    EXPECT_TRUE(d.z.observed().all());
}

TEST(Simulate, EmpiricalMissingRate)
{
    SimulationSpec s;
    s.n = 100000;
    s.p = 2;
    s.q = 3;
    s.rho_w = Vector(3);
    s.rho_w << 0.05, 0.2, 0.4;
    s.b = BScheme::bernoulli(0.5, 0.5);
    s.seed = 5;
    const auto d = gen_dataset(s);
    for (Index j = 0; j < 3; ++j) EXPECT_NEAR(d.z.rho_hat()[j], s.rho_w[j], 0.005);
}

TEST(Simulate, ColumnSparseSupport)
{
    const auto b = gen_b_column_sparse(100, 20, 5, std::uint64_t{3});
    for (Index j = 0; j < 20; ++j) EXPECT_EQ((b.values().col(j).array() != 0.0).count(), 5);
    EXPECT_LE(b.values().cwiseAbs().maxCoeff(), 1.0);
    const auto dense = gen_b_column_sparse(7, 3, 7, std::uint64_t{4});
    EXPECT_EQ(dense.nonzeros(), 21);
}

TEST(Simulate, BernoulliDenseRange)
{
    const auto b = gen_b_bernoulli(20, 10, 1.0, 1.0, std::uint64_t{1});
    EXPECT_EQ(b.nonzeros(), 200);
    EXPECT_GE(b.values().cwiseAbs().minCoeff(), 0.3);
    EXPECT_LE(b.values().cwiseAbs().maxCoeff(), 0.7);
}

TEST(Simulate, BernoulliNonzeroFraction)
{
    Rng rng(7);
    double frac = 0.0;
    for (int t = 0; t < 200; ++t) {
        const auto b = gen_b_bernoulli(30, 30, 0.2, 0.2, rng);
        frac += static_cast<double>(b.nonzeros()) / 900.0;
    }
    EXPECT_NEAR(frac / 200.0, 0.04, 0.01);
}

TEST(Simulate, BernoulliRowsAreAllOrNothing)
{
    Rng rng(8);
    const auto b = gen_b_bernoulli(60, 8, 0.9, 0.3, rng);
    int zero_rows = 0;
    for (Index k = 0; k < 60; ++k)
        if (b.values().row(k).isZero()) ++zero_rows;
    EXPECT_GT(zero_rows, 0);
}

TEST(Simulate, Type1ClosedForm)
{
    const auto e = gen_theta_type1(3, 0.5);
    const Matrix& t = e.theta.values();
    EXPECT_NEAR(t(0, 0), 4.0 / 3.0, 1e-14);
    EXPECT_NEAR(t(1, 1), 5.0 / 3.0, 1e-14);
    EXPECT_NEAR(t(2, 2), 4.0 / 3.0, 1e-14);
    EXPECT_NEAR(t(0, 1), -2.0 / 3.0, 1e-14);
    EXPECT_NEAR(t(1, 2), -2.0 / 3.0, 1e-14);
    EXPECT_EQ(t(0, 2), 0.0);
    EXPECT_TRUE((t * e.sigma).isApprox(Matrix::Identity(3, 3), 1e-10));
    const auto id = gen_theta_type1(4, 0.0);
    EXPECT_TRUE(id.theta.values().isIdentity());
    EXPECT_TRUE(id.sigma.isIdentity());
    EXPECT_THROW(gen_theta_type1(3, 1.0), data_error);
}

TEST(Simulate, Type2Blocks)
{
    Rng rng(2);
    const Matrix blk = type2_blocks(30, rng);
    // First block independent, second weak, third strong.
    for (Index j = 0; j < 10; ++j)
        for (Index i = 0; i < 10; ++i)
            if (i != j) {
                EXPECT_EQ(blk(i, j), 0.0);
            }
    for (Index j = 10; j < 20; ++j)
        for (Index i = 10; i < 20; ++i)
            if (i != j) {
                EXPECT_GE(blk(i, j), 0.1);
                EXPECT_LE(blk(i, j), 0.4);
            }
    for (Index j = 20; j < 30; ++j)
        for (Index i = 20; i < 30; ++i)
            if (i != j) {
                EXPECT_GE(blk(i, j), 0.5);
                EXPECT_LE(blk(i, j), 1.0);
            }
    const auto e = gen_theta_type2(30, std::uint64_t{2});
    Eigen::LLT<Matrix> llt(e.theta.values());
    EXPECT_EQ(llt.info(), Eigen::Success);
    EXPECT_GE(Eigen::SelfAdjointEigenSolver<Matrix>(e.theta.values()).eigenvalues().minCoeff(), 0.01 - 1e-10);
    Rng bad(1);
    EXPECT_THROW(type2_blocks(10, bad), data_error);
}

TEST(Metrics, DefinitionalZeros)
{
    GroundTruth t;
    t.b_star = gen_b_column_sparse(10, 3, 2, std::uint64_t{1});
    t.sigma_xx = ar1_matrix(10, 0.7);
    const auto e = gen_theta_type1(3, 0.7);
    t.sigma_ee = e.sigma;
    t.theta_star = e.theta;
    const auto r = evaluate_estimates(t.b_star.values(), t.b_star.values(), t.theta_star, t);
    EXPECT_NEAR(r.pe, 0.0, 1e-14);
    EXPECT_NEAR(r.kll, 0.0, 1e-10);
    EXPECT_DOUBLE_EQ(r.mcc_b, 1.0);
    EXPECT_DOUBLE_EQ(r.mcc_theta, 1.0);
    EXPECT_DOUBLE_EQ(r.tpr_b, 1.0);
    EXPECT_DOUBLE_EQ(r.tnr_b, 1.0);
}

TEST(Metrics, KllHandValue)
{
    GroundTruth t;
    t.b_star = CoefficientMatrix::zero(1, 2);
    t.sigma_xx = Matrix::Identity(1, 1);
    t.theta_star = PrecisionMatrix(2.0 * Matrix::Identity(2, 2));
    t.sigma_ee = 0.5 * Matrix::Identity(2, 2);
    const auto r = evaluate_estimates(Matrix::Zero(1, 2), Matrix::Zero(1, 2), PrecisionMatrix::identity(2), t);
    EXPECT_NEAR(r.kll, 1.0 + std::log(4.0) - 2.0, 1e-12);
    EXPECT_NEAR(r.kll, 0.3863, 1e-4);
}

TEST(Metrics, SupportScoreConventions)
{
    const auto none = support_scores(0, 0, 5, 0);
    EXPECT_DOUBLE_EQ(none.tpr, 1.0);
    EXPECT_DOUBLE_EQ(none.mcc, 0.0);
    const auto s = support_scores(3, 1, 4, 2);
    EXPECT_DOUBLE_EQ(s.tpr, 0.6);
    EXPECT_DOUBLE_EQ(s.tnr, 0.8);
    EXPECT_NEAR(s.mcc, (12.0 - 2.0) / std::sqrt(4.0 * 5.0 * 5.0 * 6.0), 1e-15);
}

TEST(Scenario, UnknownNameRejected)
{
    EXPECT_THROW(scenario_cells("S9", {}), data_error);
}

TEST(Scenario, CellGrids)
{
    EXPECT_EQ(scenario_cells("model1", {}).size(), 3u);
    ScenarioOptions o;
    o.q = {20};
    o.n = {400};
    o.rho_eps = {0.7};
    o.rho_w = {0.05};
    const auto cells = scenario_cells("S3A", o);
    ASSERT_EQ(cells.size(), 1u);
    EXPECT_EQ(cells[0].spec.p, 100);
    const auto ref = reference_value(cells[0], "frob_b2", TuneRule::bic);
    ASSERT_TRUE(ref.has_value());
    EXPECT_DOUBLE_EQ(ref->first, 1.262);
    const auto big = scenario_cells("S3A", [] {
        ScenarioOptions f;
        f.q = {20};
        f.n = {12800};
        f.rho_eps = {0.9};
        return f;
    }());
    ASSERT_EQ(big.size(), 1u);
    EXPECT_DOUBLE_EQ(reference_value(big[0], "frob_b2", TuneRule::bic)->first, 0.149);
}

TEST(Scenario, ModelReferenceColumns)
{
    ScenarioOptions o;
    o.rho_w = {0.1};
    const auto cells = scenario_cells("model1", o);
    ASSERT_EQ(cells.size(), 1u);
    const auto mcc = reference_value(cells[0], "mcc_theta", TuneRule::bic);
    ASSERT_TRUE(mcc.has_value());
    EXPECT_DOUBLE_EQ(mcc->first, 0.457);
    EXPECT_DOUBLE_EQ(reference_value(cells[0], "kll", TuneRule::bic)->first, 0.773);
    EXPECT_DOUBLE_EQ(reference_value(cells[0], "pe", TuneRule::cv_min)->first, 0.245);
}

TEST(Scenario, SingleReplicationHasZeroSe)
{
    ScenarioOptions o;
    o.reps = 1;
    o.rho_w = {0.1};
    o.tune.n_lambda = 5;
    const auto r = run_scenario("model3", o);
    ASSERT_FALSE(r.rows.empty());
    for (const auto& row : r.rows) EXPECT_EQ(row.se, 0.0);
}

TEST(Scenario, SeedsDependOnCellNotOnFilter)
{
    ScenarioOptions all;
    ScenarioOptions one;
    one.rho_w = {0.2};
    const auto a = scenario_cells("model1", all);
    const auto b = scenario_cells("model1", one);
    EXPECT_EQ(replication_seed(5, a[2], 3), replication_seed(5, b[0], 3));
    EXPECT_NE(replication_seed(5, a[2], 3), replication_seed(5, a[2], 4));
}
