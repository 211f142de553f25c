#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include <missreg/missreg.hpp>

namespace fs = std::filesystem;
using namespace missreg;

#ifndef MISSREG_CLI_PATH
#error "MISSREG_CLI_PATH must be defined"
#endif
#ifndef MISSREG_DATA_DIR
#error "MISSREG_DATA_DIR must be defined"
#endif

namespace {

int run(const std::string& args)
{
    const std::string cmd = std::string(MISSREG_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("missreg_cli_" + name);
    fs::remove_all(p);
    return p;
}

const std::string data = MISSREG_DATA_DIR;

std::string fit_args(const fs::path& out)
{
    return "fit --x " + data + "/X.csv --z " + data + "/Z.csv --header --lambda-b 0.2 --lambda-theta 0.1 --threads 1 --out " +
           out.string();
}

} // namespace

TEST(Cli, FitWritesArtifactsThatReload)
{
    const auto out = scratch("fit");
    ASSERT_EQ(run(fit_args(out)), 0);
    for (const char* f : {"b1.csv", "theta.csv", "b2.csv", "fit.json"}) EXPECT_TRUE(fs::exists(out / f)) << f;
    CsvOptions o;
    o.header = true;
    const Matrix theta = read_csv(out / "theta.csv", o).values;
    Eigen::LLT<Matrix> llt(theta);
    EXPECT_EQ(llt.info(), Eigen::Success);
    EXPECT_EQ(read_csv(out / "b2.csv", o).values.rows(), read_csv(out / "b1.csv", o).values.rows());
}

TEST(Cli, FitIsByteIdentical)
{
    const auto a = scratch("fit_a"), b = scratch("fit_b");
    ASSERT_EQ(run(fit_args(a)), 0);
    ASSERT_EQ(run(fit_args(b)), 0);
    for (const char* f : {"b1.csv", "theta.csv", "b2.csv", "fit.json"}) EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
}

TEST(Cli, ConfigFileOverridesFlags)
{
    const auto out = scratch("cfg");
    const auto cfg = scratch("cfg.json");
    std::ofstream(cfg) << "{\"lambda-b\": 1e6, \"lambda-theta\": 1e6}";
    ASSERT_EQ(run(fit_args(out) + " --config " + cfg.string()), 0);
    CsvOptions o;
    o.header = true;
    EXPECT_TRUE(read_csv(out / "b2.csv", o).values.isZero());
}

TEST(Cli, TuneWritesSurface)
{
    const auto out = scratch("tune");
    ASSERT_EQ(run("tune --x " + data + "/X.csv --z " + data + "/Z.csv --header --nlambda 6 --threads 1 --out " + out.string()), 0);
    EXPECT_TRUE(fs::exists(out / "surface.csv"));
    EXPECT_TRUE(fs::exists(out / "tune.json"));
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run("scenario S9 --reps 1"), 2);
    EXPECT_EQ(run("fit --x /nonexistent.csv --z /nonexistent.csv --lambda-b 1 --lambda-theta 1"), 2);
    EXPECT_EQ(run("fit --x " + data + "/X.csv --z " + data + "/Z.csv --header"), 2);
    EXPECT_EQ(run("tune --x " + data + "/X.csv --z " + data + "/Z.csv --header --rule aic"), 2);
    EXPECT_EQ(run("frobnicate"), 2);
}

TEST(Cli, SimulateThenMetrics)
{
    const auto sim = scratch("sim"), fit = scratch("simfit"), met = scratch("met");
    ASSERT_EQ(run("simulate --model 3 --n 120 --seed 4 --out " + sim.string()), 0);
    ASSERT_EQ(run("tune --x " + (sim / "X.csv").string() + " --z " + (sim / "Z.csv").string() +
                  " --header --nlambda 6 --threads 1 --out " + fit.string()),
              0);
    ASSERT_EQ(run("metrics --truth " + sim.string() + " --fit " + fit.string() + " --out " + met.string()), 0);
    const std::string m = slurp(met / "metrics.json");
    for (const char* k : {"pe", "tpr_b", "tnr_b", "mcc_b", "kll", "tpr_theta", "tnr_theta", "mcc_theta"})
        EXPECT_NE(m.find(std::string("\"") + k + "\""), std::string::npos) << k;
}

TEST(Cli, ScenarioSingleRepDeterministic)
{
    const auto a = scratch("sc_a"), b = scratch("sc_b");
    const std::string args = "scenario model3 --missing 0.1 --reps 1 --seed 7 --nlambda 6 --threads 1 --out ";
    ASSERT_EQ(run(args + a.string()), 0);
    ASSERT_EQ(run(args + b.string()), 0);
    const std::string csv = slurp(a / "model3.csv");
    EXPECT_EQ(csv, slurp(b / "model3.csv"));
    for (const char* k : {"pe", "tpr_b", "tnr_b", "mcc_b", "tpr_theta", "tnr_theta", "mcc_theta"})
        EXPECT_NE(csv.find(std::string(",") + k + ","), std::string::npos) << k;
}
