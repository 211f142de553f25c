// missreg command-line front end: fit, tune, simulate, scenario, metrics.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <missreg/missreg.hpp>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace missreg;

namespace {

enum Exit { ok = 0, numerical = 1, usage = 2 };

struct usage_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    // io
    std::string x_path, z_path, out = ".";
    std::string config;
    bool header = false;
    std::string na = "NA";
    // fixed penalties (fit)
    std::optional<double> lambda_b, lambda_theta, lambda_b2;
    // tuning
    std::string rule = "bic";
    std::size_t nlambda = 50;
    std::size_t nlambda_theta = 0;
    double lambda_min_ratio = 0.0;
    std::size_t folds = 5;
    bool fast = false;
    std::string error_cov = "residual";
    bool no_standardize = false;
    std::uint64_t seed = 1;
    std::size_t threads = default_threads();
    // simulate / scenario
    std::string scenario;
    std::size_t reps = 20;
    int model = 1;
    Index n = 400, p = 30, q = 30;
    double rho_eps = 0.7;
    double missing = 0.1;
    std::vector<Index> f_n, f_p, f_q;
    std::vector<double> f_rho_eps, f_missing;
    std::string variant;
    // metrics
    std::string truth_dir, fit_dir;
};

// JSON config: keys are the long flag names; values override flags.
void apply_config(RunConfig& c)
{
    if (c.config.empty()) return;
    std::ifstream in(c.config);
    if (!in) throw usage_error("cannot open config " + c.config);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw usage_error(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw usage_error("config must be a JSON object");
    for (auto& [k, v] : j.items()) {
        try {
            if (k == "x") c.x_path = v.get<std::string>();
            else if (k == "z") c.z_path = v.get<std::string>();
            else if (k == "out") c.out = v.get<std::string>();
            else if (k == "header") c.header = v.get<bool>();
            else if (k == "na") c.na = v.get<std::string>();
            else if (k == "lambda-b") c.lambda_b = v.get<double>();
            else if (k == "lambda-theta") c.lambda_theta = v.get<double>();
            else if (k == "lambda-b2") c.lambda_b2 = v.get<double>();
            else if (k == "rule") c.rule = v.get<std::string>();
            else if (k == "nlambda") c.nlambda = v.get<std::size_t>();
            else if (k == "nlambda-theta") c.nlambda_theta = v.get<std::size_t>();
            else if (k == "lambda-min-ratio") c.lambda_min_ratio = v.get<double>();
            else if (k == "folds") c.folds = v.get<std::size_t>();
            else if (k == "fast") c.fast = v.get<bool>();
            else if (k == "error-cov") c.error_cov = v.get<std::string>();
            else if (k == "no-standardize") c.no_standardize = v.get<bool>();
            else if (k == "seed") c.seed = v.get<std::uint64_t>();
            else if (k == "threads") c.threads = v.get<std::size_t>();
            else if (k == "reps") c.reps = v.get<std::size_t>();
            else if (k == "model") c.model = v.get<int>();
            else if (k == "n") c.f_n = v.is_array() ? v.get<std::vector<Index>>() : std::vector<Index>{v.get<Index>()};
            else if (k == "p") c.f_p = v.is_array() ? v.get<std::vector<Index>>() : std::vector<Index>{v.get<Index>()};
            else if (k == "q") c.f_q = v.is_array() ? v.get<std::vector<Index>>() : std::vector<Index>{v.get<Index>()};
            else if (k == "rho-eps")
                c.f_rho_eps = v.is_array() ? v.get<std::vector<double>>() : std::vector<double>{v.get<double>()};
            else if (k == "missing")
                c.f_missing = v.is_array() ? v.get<std::vector<double>>() : std::vector<double>{v.get<double>()};
            else if (k == "variant") c.variant = v.get<std::string>();
            else if (k == "truth") c.truth_dir = v.get<std::string>();
            else if (k == "fit") c.fit_dir = v.get<std::string>();
            else throw usage_error("config: unknown key '" + k + "'");
        } catch (const json::exception& e) {
            throw usage_error("config key '" + k + "': " + e.what());
        }
    }
}

void require_file(const std::string& path, const char* what)
{
    if (path.empty()) throw usage_error(std::string("--") + what + " is required");
    if (!fs::is_regular_file(path)) throw usage_error(std::string(what) + " file not found: " + path);
}

void ensure_dir(const std::string& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw usage_error("cannot create output directory " + dir);
}

void write_json(const fs::path& path, const json& j)
{
    std::ofstream out(path);
    if (!out) throw data_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

FitOptions solver_options(const RunConfig& c)
{
    FitOptions o;
    if (c.error_cov == "plugin") o.error_cov = ErrorCovForm::plugin;
    else if (c.error_cov != "residual") throw usage_error("--error-cov must be residual or plugin");
    o.standardize_response = !c.no_standardize;
    return o;
}

TuneConfig tune_config(const RunConfig& c)
{
    TuneConfig t;
    try {
        t.rule = parse_rule(c.rule);
    } catch (const data_error& e) {
        throw usage_error(e.what());
    }
    if (c.nlambda < 1) throw usage_error("--nlambda must be positive");
    if (c.threads < 1) throw usage_error("--threads must be at least 1");
    t.n_lambda = c.nlambda;
    t.n_lambda_theta = c.nlambda_theta;
    t.min_ratio = c.lambda_min_ratio;
    t.folds = c.folds;
    t.fast = c.fast;
    t.seed = c.seed;
    t.threads = c.threads;
    t.solver = solver_options(c);
    return t;
}

json info_json(const SolveInfo& i)
{
    return json{{"iterations", i.iterations}, {"objective", i.objective}, {"kkt", i.kkt}, {"converged", i.converged}};
}

json vec_json(const Vector& v)
{
    return json(std::vector<double>(v.data(), v.data() + v.size()));
}

void write_fit(const fs::path& dir, const FitResult& f)
{
    write_csv(dir / "b1.csv", f.b1_original());
    write_csv(dir / "theta.csv", f.theta_original().values());
    write_csv(dir / "b2.csv", f.b2_original());
    json j;
    j["n"] = f.n;
    j["p"] = f.b1.p();
    j["q"] = f.b1.q();
    j["lambda"] = {{"b1", f.lambda_b1}, {"theta", f.lambda_theta}, {"b2", f.lambda_b2}};
    j["stage1"] = info_json(f.stage1);
    j["stage2"] = info_json(f.stage2);
    j["stage2"]["projection_distance"] = f.projection_distance;
    j["stage3"] = info_json(f.stage3);
    j["rho_hat"] = vec_json(f.rho_hat);
    j["response_scales"] = vec_json(f.response_scales);
    j["edges"] = f.theta.edges();
    j["nonzeros_b1"] = f.b1.nonzeros();
    j["nonzeros_b2"] = f.b2.nonzeros();
    write_json(dir / "fit.json", j);
}

std::pair<DesignMatrix, MaskedResponse> load(const RunConfig& c)
{
    require_file(c.x_path, "x");
    require_file(c.z_path, "z");
    CsvOptions co;
    co.header = c.header;
    co.na_token = c.na;
    return load_dataset(c.x_path, c.z_path, co);
}

int cmd_fit(const RunConfig& c)
{
    if (!c.lambda_b || !c.lambda_theta) throw usage_error("fit needs --lambda-b and --lambda-theta (use tune to select them)");
    auto [x, z] = load(c);
    ensure_dir(c.out);
    const FitResult f = fit_three_stage(x, z, *c.lambda_b, *c.lambda_theta, c.lambda_b2.value_or(*c.lambda_b),
                                        solver_options(c));
    write_fit(c.out, f);
    std::cout << "fit: n=" << f.n << " p=" << f.b1.p() << " q=" << f.b1.q() << " nnz(B2)=" << f.b2.nonzeros()
              << " edges=" << f.theta.edges() << " -> " << c.out << '\n';
    return ok;
}

int cmd_tune(const RunConfig& c)
{
    auto [x, z] = load(c);
    ensure_dir(c.out);
    const TuneConfig tc = tune_config(c);
    const TuneResult r = tune(x, z, tc);
    write_fit(c.out, r.fit);
    const TuneSurface& s = r.surface;
    {
        std::ofstream out(fs::path(c.out) / "surface.csv");
        out << "lambda_theta,lambda_b,score,se\n";
        for (Index i = 0; i < s.score.rows(); ++i)
            for (Index k = 0; k < s.score.cols(); ++k) {
                if (std::isnan(s.score(i, k))) continue;
                out << detail::format_double(s.grid_theta.values[i]) << ',' << detail::format_double(s.grid_b.values[k])
                    << ',' << detail::format_double(s.score(i, k)) << ','
                    << detail::format_double(s.score_se.size() ? s.score_se(i, k) : 0.0) << '\n';
            }
    }
    json j;
    j["rule"] = to_string(s.rule);
    j["nlambda"] = tc.n_lambda;
    j["lambda_min_ratio"] = s.grid_b.min_ratio;
    j["lambda_b_max"] = s.grid_b.values[0];
    j["lambda_theta_max"] = s.grid_theta.values[0];
    j["selected"] = {{"b1", r.fit.lambda_b1}, {"theta", r.fit.lambda_theta}, {"b2", r.fit.lambda_b2}};
    j["fold_seed"] = s.fold_seed;
    j["nonconverged"] = s.nonconverged;
    write_json(fs::path(c.out) / "tune.json", j);
    std::cout << "tune[" << to_string(s.rule) << "]: lambda_b1=" << r.fit.lambda_b1 << " lambda_theta=" << r.fit.lambda_theta
              << " lambda_b2=" << r.fit.lambda_b2 << " -> " << c.out << '\n';
    return ok;
}

sim::SimulationSpec model_spec(const RunConfig& c)
{
    sim::ScenarioOptions o;
    const std::string name = "model" + std::to_string(c.model);
    if (c.model < 1 || c.model > 4) throw usage_error("--model must be 1..4");
    auto cells = sim::scenario_cells(name, o);
    sim::SimulationSpec s = cells.front().spec;
    return s;
}

int cmd_simulate(const RunConfig& c)
{
    sim::SimulationSpec s = model_spec(c);
    if (!c.f_n.empty()) s.n = c.f_n.front();
    if (!c.f_p.empty()) s.p = c.f_p.front();
    if (!c.f_q.empty()) s.q = c.f_q.front();
    if (!c.f_rho_eps.empty()) s.rho_eps = c.f_rho_eps.front();
    s.rho_w = Vector::Constant(s.q, c.f_missing.empty() ? 0.1 : c.f_missing.front());
    s.seed = c.seed;
    sim::SimulatedData d;
    try {
        d = sim::gen_dataset(s);
    } catch (const data_error& e) {
        throw usage_error(e.what());
    }
    ensure_dir(c.out);
    const fs::path dir = c.out;
    write_csv(dir / "X.csv", d.x_raw);
    write_csv(dir / "Z.csv", d.y, "V", &d.z.observed());
    write_csv(dir / "b_star.csv", d.truth.b_star.values());
    write_csv(dir / "theta_star.csv", d.truth.theta_star.values());
    write_csv(dir / "sigma_xx.csv", d.truth.sigma_xx);
    json j;
    j["model"] = c.model;
    j["n"] = s.n;
    j["p"] = s.p;
    j["q"] = s.q;
    j["rho_eps"] = s.rho_eps;
    j["missing"] = s.rho_w.size() ? s.rho_w[0] : 0.0;
    j["seed"] = s.seed;
    write_json(dir / "simulation.json", j);
    std::cout << "simulate: model" << c.model << " n=" << s.n << " p=" << s.p << " q=" << s.q << " -> " << c.out << '\n';
    return ok;
}

Matrix read_matrix(const fs::path& path)
{
    if (!fs::is_regular_file(path)) throw usage_error("file not found: " + path.string());
    CsvOptions o;
    o.header = true;
    return read_csv(path, o).values;
}

int cmd_metrics(const RunConfig& c)
{
    if (c.truth_dir.empty() || c.fit_dir.empty()) throw usage_error("metrics needs --truth and --fit directories");
    const fs::path td = c.truth_dir, fd = c.fit_dir;
    sim::GroundTruth t;
    t.b_star = CoefficientMatrix(read_matrix(td / "b_star.csv"));
    t.sigma_xx = read_matrix(td / "sigma_xx.csv");
    t.theta_star = PrecisionMatrix(read_matrix(td / "theta_star.csv"));
    Eigen::LLT<Matrix> llt(t.theta_star.values());
    if (llt.info() != Eigen::Success) throw numerical_error("theta_star is not positive definite");
    t.sigma_ee = llt.solve(Matrix::Identity(t.theta_star.q(), t.theta_star.q()));
    const Matrix b1 = read_matrix(fd / "b1.csv"), b2 = read_matrix(fd / "b2.csv");
    const PrecisionMatrix theta(read_matrix(fd / "theta.csv"));
    if (b1.rows() != t.b_star.p() || b1.cols() != t.b_star.q() || b2.rows() != b1.rows() || b2.cols() != b1.cols() ||
        theta.q() != t.theta_star.q())
        throw usage_error("metrics: fit and truth shapes differ");
    const sim::MetricsReport r = sim::evaluate_estimates(b1, b2, theta, t);
    json j;
    for (const auto& name : sim::MetricsReport::names()) j[name] = r.get(name);
    ensure_dir(c.out);
    write_json(fs::path(c.out) / "metrics.json", j);
    std::printf("metrics: PE=%.4f TPR(B)=%.3f TNR(B)=%.3f MCC(B)=%.3f KLL=%.4f TPR(T)=%.3f TNR(T)=%.3f MCC(T)=%.3f\n", r.pe,
                r.tpr_b, r.tnr_b, r.mcc_b, r.kll, r.tpr_theta, r.tnr_theta, r.mcc_theta);
    return ok;
}

int cmd_scenario(const RunConfig& c)
{
    const auto& names = sim::scenario_names();
    if (std::find(names.begin(), names.end(), c.scenario) == names.end()) {
        std::string all;
        for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
        throw usage_error("unknown scenario '" + c.scenario + "' (expected one of " + all + ")");
    }
    if (c.reps < 1) throw usage_error("--reps must be positive");
    sim::ScenarioOptions o;
    o.reps = c.reps;
    o.seed = c.seed;
    o.threads = c.threads;
    o.tune = tune_config(c);
    o.n = c.f_n;
    o.p = c.f_p;
    o.q = c.f_q;
    o.rho_eps = c.f_rho_eps;
    o.rho_w = c.f_missing;
    o.variant = c.variant;
    if (sim::scenario_cells(c.scenario, o).empty()) throw usage_error("filters select no cells of " + c.scenario);
    const sim::ScenarioResult r = sim::run_scenario(c.scenario, o);

    ensure_dir(c.out);
    const fs::path path = fs::path(c.out) / (c.scenario + ".csv");
    std::ofstream out(path);
    if (!out) throw data_error("cannot write " + path.string());
    out << "scenario,variant,model,n,p,q,rho_eps,missing,rule,metric,mean,se,reps,reference,reference_se,pass\n";
    auto num = [](double v) { return detail::format_double(v); };
    for (const auto& row : r.rows) {
        const auto& s = row.cell.spec;
        out << row.cell.scenario << ',' << row.cell.variant << ',' << row.cell.model << ',' << s.n << ',' << s.p << ','
            << s.q << ',' << num(s.rho_eps) << ',' << num(row.cell.missing()) << ',' << to_string(o.tune.rule) << ','
            << row.metric << ',' << num(row.mean) << ',' << num(row.se) << ',' << row.reps << ','
            << (row.reference ? num(*row.reference) : "") << ',' << (row.reference_se ? num(*row.reference_se) : "")
            << ',' << (row.reference ? (r.row_passes(row) ? "1" : "0") : "") << '\n';
    }
    std::printf("scenario %s: %zu rows, %zu/%zu within %.0f%% of reference -> %s\n", c.scenario.c_str(), r.rows.size(),
                r.passed(), r.compared(), 100.0 * r.tolerance, path.string().c_str());
    return ok;
}

void print_error(const char* kind, const std::string& msg)
{
    std::cerr << json{{"error", kind}, {"message", msg}}.dump() << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sparse multivariate regression with missing responses"};
    app.require_subcommand(1);
    RunConfig c;

    auto io = [&](CLI::App* s) {
        s->add_option("--x", c.x_path, "Predictor CSV (complete)");
        s->add_option("--z", c.z_path, "Response CSV, missing cells as the NA token");
        s->add_flag("--header", c.header, "Input CSVs start with a header row");
        s->add_option("--na", c.na, "Missing-value token");
    };
    auto common = [&](CLI::App* s) {
        s->add_option("--out", c.out, "Output directory");
        s->add_option("--config", c.config, "JSON file; its keys override flags");
        s->add_option("--seed", c.seed, "Random seed");
        s->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
    };
    auto solver = [&](CLI::App* s) {
        s->add_option("--error-cov", c.error_cov, "Stage-II input: residual or plugin");
        s->add_flag("--no-standardize", c.no_standardize, "Fit responses on their original scale");
    };
    auto tuning = [&](CLI::App* s) {
        s->add_option("--rule", c.rule, "bic, cv.min or cv.1se");
        s->add_option("--nlambda", c.nlambda, "Grid length per penalty");
        s->add_option("--nlambda-theta", c.nlambda_theta, "Grid length for lambda_theta (0: same as nlambda)");
        s->add_option("--lambda-min-ratio", c.lambda_min_ratio, "Smallest lambda / largest (0: automatic)");
        s->add_option("--folds", c.folds, "Cross-validation folds");
        s->add_flag("--fast", c.fast, "Coarse-to-fine grid search");
    };

    auto* fit = app.add_subcommand("fit", "Three-stage fit at fixed penalties");
    io(fit);
    common(fit);
    solver(fit);
    fit->add_option("--lambda-b", c.lambda_b, "Stage-I penalty");
    fit->add_option("--lambda-theta", c.lambda_theta, "Stage-II penalty");
    fit->add_option("--lambda-b2", c.lambda_b2, "Stage-III penalty (default: --lambda-b)");

    auto* tune_cmd = app.add_subcommand("tune", "Select penalties by BIC or cross-validation, then fit");
    io(tune_cmd);
    common(tune_cmd);
    solver(tune_cmd);
    tuning(tune_cmd);

    auto* simulate = app.add_subcommand("simulate", "Draw one dataset from a simulation model");
    common(simulate);
    simulate->add_option("--model", c.model, "Model 1..4");
    simulate->add_option("--n", c.f_n, "Override n")->expected(1);
    simulate->add_option("--p", c.f_p, "Override p")->expected(1);
    simulate->add_option("--q", c.f_q, "Override q")->expected(1);
    simulate->add_option("--rho-eps", c.f_rho_eps, "Override the error AR coefficient")->expected(1);
    simulate->add_option("--missing", c.f_missing, "Missing probability per response column")->expected(1);

    auto* scenario = app.add_subcommand("scenario", "Replicate a simulation study");
    common(scenario);
    solver(scenario);
    tuning(scenario);
    scenario->add_option("name", c.scenario, "S1A S1B S2A S2B S3A S3B model1..model4")->required();
    scenario->add_option("--reps", c.reps, "Replications per cell");
    scenario->add_option("--n", c.f_n, "Keep only these n");
    scenario->add_option("--p", c.f_p, "Keep only these p");
    scenario->add_option("--q", c.f_q, "Keep only these q");
    scenario->add_option("--rho-eps", c.f_rho_eps, "Keep only these rho_eps");
    scenario->add_option("--missing", c.f_missing, "Keep only these missing rates");
    scenario->add_option("--variant", c.variant, "a or b (S1-S3 only)");

    auto* metrics = app.add_subcommand("metrics", "Score a fit directory against a simulated truth");
    metrics->add_option("--truth", c.truth_dir, "Directory written by simulate");
    metrics->add_option("--fit", c.fit_dir, "Directory written by fit or tune");
    metrics->add_option("--out", c.out, "Output directory");
    metrics->add_option("--config", c.config, "JSON file; its keys override flags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage", e.what());
        return usage;
    }

    try {
        apply_config(c);
        if (c.threads < 1) throw usage_error("threads must be at least 1");
        if (*fit) return cmd_fit(c);
        if (*tune_cmd) return cmd_tune(c);
        if (*simulate) return cmd_simulate(c);
        if (*scenario) return cmd_scenario(c);
        if (*metrics) return cmd_metrics(c);
    } catch (const usage_error& e) {
        print_error("usage", e.what());
        return usage;
    } catch (const numerical_error& e) {
        print_error("numerical", e.what());
        return numerical;
    } catch (const error& e) {
        print_error("data", e.what());
        return usage;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return numerical;
    }
    return usage;
}
