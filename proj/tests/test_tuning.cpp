#include <cmath>

#include <gtest/gtest.h>

#include <missreg/missreg.hpp>

#include "support.hpp"

using namespace missreg;

TEST(Tuning, LambdaBMaxHandExample)
{
    SurrogateMoments m;
    m.s_xy_hat = Matrix(1, 2);
    m.s_xy_hat << 0.5, -1.5;
    EXPECT_DOUBLE_EQ(lambda_b_max(m), 3.0);
}

TEST(Tuning, LambdaBMaxDegenerate)
{
    SurrogateMoments m;
    m.s_xy_hat = Matrix::Zero(2, 2);
    bool degenerate = false;
    const double v = lambda_b_max(m, &degenerate);
    EXPECT_TRUE(degenerate);
    EXPECT_GT(v, 0.0);
}

TEST(Tuning, LambdaThetaMaxExamples)
{
    Matrix s(2, 2);
    s << 1, 0.3, 0.3, 1;
    EXPECT_DOUBLE_EQ(lambda_theta_max(s), 0.3);
    EXPECT_DOUBLE_EQ(lambda_theta_max(Vector::Constant(3, 2.0).asDiagonal().toDenseMatrix()), 0.0);
    EXPECT_DOUBLE_EQ(lambda_theta_max(Matrix::Constant(1, 1, 4.0)), 0.0);
}

TEST(Tuning, GridIsLogSpacedAndDescending)
{
    const auto g = LambdaGrid::make(2.0, 5, 0.01);
    EXPECT_DOUBLE_EQ(g[0], 2.0);
    EXPECT_DOUBLE_EQ(g[4], 0.02);
    for (std::size_t i = 1; i < g.size(); ++i) EXPECT_NEAR(g[i] / g[i - 1], std::pow(0.01, 0.25), 1e-12);
    EXPECT_EQ(LambdaGrid::make(1.0, 1, 0.5).size(), 1u);
    EXPECT_THROW(LambdaGrid::make(1.0, 3, 1.5), data_error);
}

TEST(Bic, NullModel)
{
    const auto m = testing_support::small_moments(1);
    for (Index n : {10, 100, 1000}) {
        const double v = bic(m, CoefficientMatrix::zero(m.p(), m.q()), PrecisionMatrix::identity(m.q()), n);
        EXPECT_NEAR(v, static_cast<double>(m.q()) * std::log(static_cast<double>(n)), 1e-10);
    }
}

TEST(Bic, TwoByTwoHandValue)
{
    // p = 1, q = 2, B = (1, 0), Theta = [[2, 0.5], [0.5, 1]], n = 10.
    SurrogateMoments m;
    m.s_xx = Matrix::Constant(1, 1, 2.0);
    m.s_xy_hat = Matrix(1, 2);
    m.s_xy_hat << 1.0, 0.5;
    m.s_yy_hat = Matrix::Identity(2, 2);
    Matrix b(1, 2);
    b << 1.0, 0.0;
    Matrix t(2, 2);
    t << 2.0, 0.5, 0.5, 1.0;
    // inner = B'SxxB/2 - Sxy'B = [[1 - 1, 0], [-0.5, 0]] = [[0, 0], [-0.5, 0]]
    // tr(Theta inner) = Theta_12 * inner_21 = 0.5 * -0.5 = -0.25
    // log det Theta = log 1.75; edges = 1; nnz(B) = 1
    const double expected = 2.0 * 10.0 * -0.25 - 10.0 * std::log(1.75) + std::log(10.0) * (2.0 + 1.0 + 1.0);
    EXPECT_NEAR(bic(m, CoefficientMatrix(b), PrecisionMatrix(t), 10), expected, 1e-12);
}

TEST(Bic, OneCoefficientAddsLogN)
{
    const auto m = testing_support::small_moments(2);
    const PrecisionMatrix th = PrecisionMatrix::identity(m.q());
    CoefficientMatrix b = CoefficientMatrix::zero(m.p(), m.q());
    const double base = bic(m, b, th, 200);
    b.values()(0, 0) = 1e-300;
    EXPECT_NEAR(bic(m, b, th, 200) - base, std::log(200.0), 1e-9);
}

TEST(Bic, Stage2VariantIsGaussianLikelihood)
{
    const auto m = testing_support::small_moments(3);
    const auto b = fit_stage1(m, 0.3 * lambda_b_max(m));
    const Matrix s = residual_error_cov(m, b);
    const PrecisionMatrix th(s.inverse());
    const double n = 120.0;
    const double expected = n * (th.values() * s).trace() - n * th.log_det() +
                            std::log(n) * static_cast<double>(m.q() + th.edges());
    EXPECT_NEAR(bic(m, b, th, 120, BicStage::stage2), expected, 1e-8 * std::abs(expected));
}

TEST(Cv, HugePenaltyGivesTraceOfValidationMoments)
{
    const auto d = testing_support::small_problem(4, 100, 6, 3, 0.0);
    FitOptions opt;
    opt.standardize_response = false;
    const auto f = make_folds(d.z, 5, 11);
    const auto s = cv_score(d.x, d.z, 5, 1e6, 1e6, 11, opt);
    ASSERT_EQ(s.fold_losses.size(), 5u);
    for (std::size_t k = 0; k < 5; ++k) {
        Matrix zv(static_cast<Index>(f.validation[k].size()), 3);
        for (std::size_t r = 0; r < f.validation[k].size(); ++r) zv.row(static_cast<Index>(r)) = d.z.values().row(f.validation[k][r]);
        EXPECT_NEAR(s.fold_losses[k], (zv.transpose() * zv).trace() / static_cast<double>(zv.rows()), 1e-10);
    }
}

TEST(Cv, SameSeedSameScore)
{
    const auto d = testing_support::small_problem(5);
    const auto a = cv_score(d.x, d.z, 4, 0.2, 0.05, 99);
    const auto b = cv_score(d.x, d.z, 4, 0.2, 0.05, 99);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.se, b.se);
}

TEST(Cv, FoldsPartitionRows)
{
    const auto d = testing_support::small_problem(6, 53);
    const auto f = make_folds(d.z, 5, 3);
    std::vector<int> seen(53, 0);
    for (const auto& v : f.validation)
        for (Index i : v) ++seen[static_cast<std::size_t>(i)];
    for (int c : seen) EXPECT_EQ(c, 1);
    for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(f.validation[k].size() + f.training[k].size(), 53u);
    EXPECT_THROW(make_folds(d.z, 1, 3), data_error);
}

TEST(Tune, GridOfLengthOne)
{
    const auto d = testing_support::small_problem(7);
    TuneConfig c;
    c.n_lambda = 1;
    const auto r = tune(d.x, d.z, c);
    EXPECT_DOUBLE_EQ(r.fit.lambda_b1, r.surface.grid_b[0]);
    EXPECT_EQ(r.fit.b2.nonzeros(), 0);
}

TEST(Tune, DeterministicAcrossThreadCounts)
{
    const auto d = testing_support::small_problem(8, 150, 10, 6);
    for (TuneRule rule : {TuneRule::bic, TuneRule::cv_min}) {
        TuneConfig c;
        c.rule = rule;
        c.n_lambda = 8;
        c.folds = 3;
        c.threads = 1;
        const auto a = tune(d.x, d.z, c);
        c.threads = 3;
        const auto b = tune(d.x, d.z, c);
        EXPECT_TRUE(a.fit.b2.values() == b.fit.b2.values());
        EXPECT_TRUE(a.fit.theta.values() == b.fit.theta.values());
        EXPECT_EQ(a.fit.lambda_theta, b.fit.lambda_theta);
    }
}

TEST(Tune, OneSeRuleIsNoLessSparseThanMin)
{
    const auto d = testing_support::small_problem(9, 150, 10, 6);
    TuneConfig c;
    c.n_lambda = 10;
    c.folds = 3;
    c.rule = TuneRule::cv_min;
    const auto mn = tune(d.x, d.z, c);
    c.rule = TuneRule::cv_1se;
    const auto se = tune(d.x, d.z, c);
    EXPECT_GE(se.fit.lambda_b2, mn.fit.lambda_b2);
}

TEST(Tune, RuleNamesRoundTrip)
{
    for (TuneRule r : {TuneRule::bic, TuneRule::cv_min, TuneRule::cv_1se}) EXPECT_EQ(parse_rule(to_string(r)), r);
    EXPECT_THROW(parse_rule("aic"), data_error);
}

TEST(Tune, WarmPathMatchesColdFits)
{
    const auto m = testing_support::small_moments(10);
    const auto g = LambdaGrid::make(lambda_b_max(m), 8, 0.05);
    std::mt19937_64 rng(10);
    const PrecisionMatrix theta = PrecisionMatrix::identity(m.q());
    std::vector<std::size_t> idx(g.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::size_t nonconv = 0;
    const auto path = stage3_path(m, theta, g, CoefficientMatrix::zero(m.p(), m.q()), idx, {}, nonconv);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto cold = fit_stage3(m, theta, g[i], CoefficientMatrix::zero(m.p(), m.q()));
        EXPECT_LE((path[i]->values() - cold.values()).cwiseAbs().maxCoeff(), 1e-5);
    }
    EXPECT_EQ(nonconv, 0u);
}

TEST(Tune, FastModeEvaluatesFewerCells)
{
    const auto d = testing_support::small_problem(11, 150, 10, 6);
    TuneConfig c;
    c.n_lambda = 20;
    c.fast = true;
    const auto r = tune(d.x, d.z, c);
    EXPECT_TRUE(r.fit.b2.values().allFinite());
    Eigen::LLT<Matrix> llt(r.fit.theta.values());
    EXPECT_EQ(llt.info(), Eigen::Success);
}
