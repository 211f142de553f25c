#include <cmath>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include <missreg/missreg.hpp>

#include "support.hpp"

using namespace missreg;
namespace fs = std::filesystem;

namespace {

fs::path write_text(const std::string& name, const std::string& text)
{
    const fs::path p = fs::temp_directory_path() / ("missreg_dm_" + name);
    std::ofstream(p) << text;
    return p;
}

} // namespace

TEST(DataModel, RhoHatCountsMissingCells)
{
    Matrix v = Matrix::Ones(10, 2);
    BoolMatrix obs = BoolMatrix::Constant(10, 2, true);
    obs(3, 0) = false;
    obs(7, 0) = false;
    MaskedResponse z(v, obs);
    EXPECT_DOUBLE_EQ(z.rho_hat()[0], 0.2);
    EXPECT_DOUBLE_EQ(z.rho_hat()[1], 0.0);
    EXPECT_EQ(z.values()(3, 0), 0.0);
    EXPECT_EQ(z.values()(7, 0), 0.0);
}

TEST(DataModel, CompleteResponseHasZeroRho)
{
    const auto z = MaskedResponse::complete(Matrix::Ones(5, 3));
    EXPECT_TRUE(z.rho_hat().isZero());
    EXPECT_TRUE(z.observed().all());
}

TEST(DataModel, StandardizeHandExample)
{
    Matrix raw(3, 1);
    raw << 1, 2, 3;
    const auto x = DesignMatrix::standardize(raw);
    const double r = std::sqrt(1.5);
    EXPECT_NEAR(x.values()(0, 0), -r, 1e-14);
    EXPECT_NEAR(x.values()(1, 0), 0.0, 1e-14);
    EXPECT_NEAR(x.values()(2, 0), r, 1e-14);
}

TEST(DataModel, StandardizedColumnsHaveUnitMeanSquare)
{
    std::mt19937_64 rng(3);
    const Matrix raw = testing_support::random_matrix(57, 6, rng) * 4.0 + Matrix::Constant(57, 6, 2.0);
    const auto x = DesignMatrix::standardize(raw);
    for (Index j = 0; j < 6; ++j) {
        EXPECT_NEAR(x.values().col(j).squaredNorm() / 57.0, 1.0, 1e-10);
        EXPECT_NEAR(x.values().col(j).mean(), 0.0, 1e-12);
    }
    EXPECT_TRUE(x.values().allFinite());
}

TEST(DataModel, FullyMissingColumnRejected)
{
    BoolMatrix obs = BoolMatrix::Constant(4, 2, true);
    obs.col(1).setConstant(false);
    EXPECT_THROW(MaskedResponse(Matrix::Ones(4, 2), obs), data_error);
}

TEST(DataModel, SecondMomentMaskExamples)
{
    Vector r0 = Vector::Zero(2);
    EXPECT_TRUE(second_moment_mask(r0).isApprox(Matrix::Ones(2, 2)));

    Vector r(2);
    r << 0.5, 0.2;
    Matrix expected(2, 2);
    expected << 0.5, 0.4, 0.4, 0.8;
    EXPECT_TRUE(second_moment_mask(r).isApprox(expected, 1e-15));

    Vector r1(1);
    r1 << 0.3;
    EXPECT_NEAR(second_moment_mask(r1)(0, 0), 0.7, 1e-15);

    Vector bad(1);
    bad << 1.0;
    EXPECT_THROW(second_moment_mask(bad), data_error);
}

TEST(DataModel, LoadDatasetReadsNaCells)
{
    const auto xp = write_text("x.csv", "1,2\n2,1\n3,5\n4,4\n");
    const auto zp = write_text("z.csv", "1.5,NA\n2.5,1\nNA,2\n0.5,3\n");
    const auto [x, z] = load_dataset(xp, zp);
    EXPECT_EQ(x.n(), 4);
    EXPECT_EQ(z.q(), 2);
    EXPECT_DOUBLE_EQ(z.rho_hat()[0], 0.25);
    EXPECT_DOUBLE_EQ(z.rho_hat()[1], 0.25);
    EXPECT_FALSE(z.observed()(0, 1));
    EXPECT_EQ(z.values()(0, 1), 0.0);
    // Centered on the observed entries.
    EXPECT_NEAR(z.values()(0, 0) + z.values()(1, 0) + z.values()(3, 0), 0.0, 1e-14);
}

TEST(DataModel, LoadDatasetErrors)
{
    const auto xp = write_text("x2.csv", "1,2\n2,1\n3,5\n");
    const auto zp = write_text("z2.csv", "1\n2\n");
    EXPECT_THROW(load_dataset(xp, zp), dimension_error);
    const auto zbad = write_text("z3.csv", "1\nfoo\n3\n");
    EXPECT_THROW(load_dataset(xp, zbad), data_error);
    const auto zmiss = write_text("z4.csv", "NA\nNA\nNA\n");
    EXPECT_THROW(load_dataset(xp, zmiss), data_error);
    EXPECT_THROW(load_dataset(xp, "/nonexistent/z.csv"), data_error);
}

TEST(DataModel, CsvRoundTripIsExact)
{
    std::mt19937_64 rng(9);
    const Matrix m = testing_support::random_matrix(5, 4, rng);
    const fs::path p = fs::temp_directory_path() / "missreg_dm_roundtrip.csv";
    write_csv(p, m);
    CsvOptions o;
    o.header = true;
    const auto t = read_csv(p, o);
    EXPECT_EQ(t.header.front(), "V0");
    EXPECT_TRUE(t.values == m);
}

TEST(DataModel, StandardizedResponseBackTransforms)
{
    const auto d = testing_support::small_problem(4);
    const auto zs = d.z.standardized();
    for (Index j = 0; j < zs.q(); ++j) {
        double ss = 0.0;
        Index c = 0;
        for (Index i = 0; i < zs.n(); ++i)
            if (zs.observed()(i, j)) { ss += zs.values()(i, j) * zs.values()(i, j); ++c; }
        EXPECT_NEAR(ss / static_cast<double>(c), 1.0, 1e-12);
        for (Index i = 0; i < zs.n(); ++i)
            EXPECT_NEAR(zs.values()(i, j) * zs.column_scales()[j], d.z.values()(i, j), 1e-12);
    }
    EXPECT_TRUE(zs.rho_hat() == d.z.rho_hat());
}
