#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <missreg/estimator.hpp>
#include <missreg/parallel.hpp>
#include <missreg/reference_values.hpp>
#include <missreg/tuning.hpp>
#include <missreg/types.hpp>

namespace missreg::sim {

using Rng = std::mt19937_64;

struct BScheme
{
    enum class Kind { column_sparse, bernoulli };
    Kind kind = Kind::column_sparse;
    Index s_max = 5;
    double s1 = 0.2;
    double s2 = 0.2;

    static BScheme column_sparse(Index s_max) { return {Kind::column_sparse, s_max, 0.0, 0.0}; }
    static BScheme bernoulli(double s1, double s2) { return {Kind::bernoulli, 0, s1, s2}; }
};

enum class ThetaKind { type1, type2 };

struct SimulationSpec
{
    Index n = 200;
    Index p = 100;
    Index q = 10;
    double x_ar_coef = 0.7;
    double rho_eps = 0.7;   // AR(1) coefficient of the error (type 1) or of its chain part (type 2)
    Vector rho_w;           // per-column missing probability; empty means none missing
    BScheme b;
    ThetaKind theta = ThetaKind::type1;
    std::uint64_t seed = 1;

    void validate() const
    {
        if (n < 2 || p < 1 || q < 1) throw data_error("SimulationSpec: need n >= 2, p >= 1, q >= 1");
        auto unit = [](double v) { return v >= 0.0 && v < 1.0; };
        if (!unit(x_ar_coef)) throw data_error("SimulationSpec: x_ar_coef must lie in [0,1)");
        if (!unit(rho_eps)) throw data_error("SimulationSpec: rho_eps must lie in [0,1)");
        if (rho_w.size() != 0 && rho_w.size() != q) throw dimension_error("SimulationSpec: rho_w needs q entries");
        for (Index j = 0; j < rho_w.size(); ++j)
            if (!unit(rho_w[j])) throw data_error("SimulationSpec: rho_w entries must lie in [0,1)");
        if (b.kind == BScheme::Kind::column_sparse && (b.s_max < 0 || b.s_max > p))
            throw data_error("SimulationSpec: s_max must lie in [0, p]");
        if (b.kind == BScheme::Kind::bernoulli && !(b.s1 > 0.0 && b.s1 <= 1.0 && b.s2 > 0.0 && b.s2 <= 1.0))
            throw data_error("SimulationSpec: s1 and s2 must lie in (0,1]");
        if (theta == ThetaKind::type2 && (q < 3 || q % 3 != 0))
            throw data_error("SimulationSpec: type 2 structure needs q divisible by 3");
    }
};

struct GroundTruth
{
    CoefficientMatrix b_star;
    Matrix sigma_xx;
    Matrix sigma_ee;
    PrecisionMatrix theta_star;
};

struct ErrorStructure
{
    Matrix sigma;
    PrecisionMatrix theta;
};

struct SimulatedData
{
    DesignMatrix x;       // standardized
    MaskedResponse z;     // centered on observed entries
    GroundTruth truth;
    Matrix x_raw;
    Matrix y;             // complete responses before masking
};

/// [r^{|i-j|}]
inline Matrix ar1_matrix(Index d, double r)
{
    Matrix m(d, d);
    for (Index j = 0; j < d; ++j)
        for (Index i = 0; i < d; ++i) m(i, j) = std::pow(r, static_cast<double>(std::abs(i - j)));
    return m;
}

/// Tridiagonal inverse of ar1_matrix(d, r).
inline Matrix ar1_precision(Index d, double r)
{
    if (!(r >= 0.0 && r < 1.0)) throw data_error("ar1_precision: r must lie in [0,1)");
    Matrix t = Matrix::Zero(d, d);
    if (d == 1) {
        t(0, 0) = 1.0;
        return t;
    }
    const double c = 1.0 / (1.0 - r * r);
    for (Index i = 0; i < d; ++i) {
        t(i, i) = (i == 0 || i == d - 1) ? c : (1.0 + r * r) * c;
        if (i + 1 < d) t(i, i + 1) = t(i + 1, i) = -r * c;
    }
    return t;
}

/// n rows from N(0, ar1_matrix(d, r)) by the stationary AR(1) recursion.
inline Matrix sample_ar1_rows(Index n, Index d, double r, Rng& rng)
{
    std::normal_distribution<double> norm;
    const double s = std::sqrt(1.0 - r * r);
    Matrix out(n, d);
    for (Index i = 0; i < n; ++i) {
        double prev = norm(rng);
        out(i, 0) = prev;
        for (Index k = 1; k < d; ++k) {
            prev = r * prev + s * norm(rng);
            out(i, k) = prev;
        }
    }
    return out;
}

/// Exactly s_max nonzeros per column at random rows, values U[-1, 1].
inline CoefficientMatrix gen_b_column_sparse(Index p, Index q, Index s_max, Rng& rng)
{
    if (s_max < 0 || s_max > p) throw data_error("gen_b_column_sparse: s_max must lie in [0, p]");
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Matrix b = Matrix::Zero(p, q);
    std::vector<Index> rows(static_cast<std::size_t>(p));
    for (Index j = 0; j < q; ++j) {
        std::iota(rows.begin(), rows.end(), Index{0});
        // partial Fisher-Yates
        for (Index k = 0; k < s_max; ++k) {
            std::uniform_int_distribution<Index> pick(k, p - 1);
            std::swap(rows[static_cast<std::size_t>(k)], rows[static_cast<std::size_t>(pick(rng))]);
        }
        for (Index k = 0; k < s_max; ++k) {
            double v = 0.0;
            while (v == 0.0) v = unif(rng);
            b(rows[static_cast<std::size_t>(k)], j) = v;
        }
    }
    return CoefficientMatrix(std::move(b));
}

inline CoefficientMatrix gen_b_column_sparse(Index p, Index q, Index s_max, std::uint64_t seed)
{
    Rng rng(seed);
    return gen_b_column_sparse(p, q, s_max, rng);
}

/// B ⊙ K ⊙ R: magnitudes U[0.3, 0.7] with random signs, K elementwise
/// Bernoulli(s1), R whole rows Bernoulli(s2).
inline CoefficientMatrix gen_b_bernoulli(Index p, Index q, double s1, double s2, Rng& rng)
{
    if (!(s1 > 0.0 && s1 <= 1.0 && s2 > 0.0 && s2 <= 1.0)) throw data_error("gen_b_bernoulli: s1, s2 must lie in (0,1]");
    std::uniform_real_distribution<double> mag(0.3, 0.7);
    std::bernoulli_distribution sign(0.5), elem(s1), row(s2);
    Matrix b(p, q);
    for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < q; ++j) b(i, j) = (sign(rng) ? 1.0 : -1.0) * mag(rng);
    for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < q; ++j)
            if (!elem(rng)) b(i, j) = 0.0;
    for (Index i = 0; i < p; ++i)
        if (!row(rng)) b.row(i).setZero();
    return CoefficientMatrix(std::move(b));
}

inline CoefficientMatrix gen_b_bernoulli(Index p, Index q, double s1, double s2, std::uint64_t seed)
{
    Rng rng(seed);
    return gen_b_bernoulli(p, q, s1, s2, rng);
}

/// Chain structure: Sigma = [r^{|i-j|}], Theta its tridiagonal inverse.
inline ErrorStructure gen_theta_type1(Index q, double r)
{
    if (q < 1) throw data_error("gen_theta_type1: q must be positive");
    if (!(r >= 0.0 && r < 1.0)) throw data_error("gen_theta_type1: r must lie in [0,1)");
    return {ar1_matrix(q, r), PrecisionMatrix(ar1_precision(q, r))};
}

/// Block part of the composite structure before loading: three equal
/// diagonal blocks holding no edges, weak edges U[0.1, 0.4] and strong edges U[0.5, 1].
inline Matrix type2_blocks(Index q, Rng& rng)
{
    if (q < 3 || q % 3 != 0) throw data_error("gen_theta_type2: q must be a positive multiple of 3");
    const Index g = q / 3;
    Matrix blk = Matrix::Zero(q, q);
    auto fill = [&](Index off, double lo, double hi) {
        std::uniform_real_distribution<double> u(lo, hi);
        for (Index j = 0; j < g; ++j)
            for (Index i = 0; i < j; ++i) blk(off + i, off + j) = blk(off + j, off + i) = u(rng);
    };
    fill(g, 0.1, 0.4);
    fill(2 * g, 0.5, 1.0);
    return blk;
}

/// Composite structure: inverse AR(1) plus block part, then the smallest
/// diagonal shift c >= 0 giving a minimum eigenvalue of at least 0.01.
inline ErrorStructure gen_theta_type2(Index q, Rng& rng, double r = 0.7)
{
    Matrix theta = ar1_precision(q, r) + type2_blocks(q, rng);
    const double lmin = Eigen::SelfAdjointEigenSolver<Matrix>(theta, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
    const double shift = std::max(0.0, 0.01 - lmin);
    theta.diagonal().array() += shift;
    Eigen::LLT<Matrix> llt(theta);
    if (llt.info() != Eigen::Success) throw numerical_error("gen_theta_type2: loaded precision is not PD");
    const Matrix inv = llt.solve(Matrix::Identity(q, q));
    Matrix sigma = 0.5 * (inv + inv.transpose());
    return {std::move(sigma), PrecisionMatrix(std::move(theta))};
}

inline ErrorStructure gen_theta_type2(Index q, std::uint64_t seed, double r = 0.7)
{
    Rng rng(seed);
    return gen_theta_type2(q, rng, r);
}

/// X ~ N(0, AR1(x_ar_coef)), Y = X B* + E, Z = Y ⊙ W with W_ij ~ Bernoulli(1 - rho_w[j]).
inline SimulatedData gen_dataset(const SimulationSpec& spec)
{
    spec.validate();
    Rng rng(spec.seed);
    SimulatedData d;
    GroundTruth& t = d.truth;
    t.b_star = spec.b.kind == BScheme::Kind::column_sparse ? gen_b_column_sparse(spec.p, spec.q, spec.b.s_max, rng)
                                                           : gen_b_bernoulli(spec.p, spec.q, spec.b.s1, spec.b.s2, rng);
    ErrorStructure es = spec.theta == ThetaKind::type1 ? gen_theta_type1(spec.q, spec.rho_eps)
                                                       : gen_theta_type2(spec.q, rng, spec.rho_eps);
    t.sigma_ee = std::move(es.sigma);
    t.theta_star = std::move(es.theta);
    t.sigma_xx = ar1_matrix(spec.p, spec.x_ar_coef);

    d.x_raw = sample_ar1_rows(spec.n, spec.p, spec.x_ar_coef, rng);
    Matrix e;
    if (spec.theta == ThetaKind::type1) {
        e = sample_ar1_rows(spec.n, spec.q, spec.rho_eps, rng);
    } else {
        std::normal_distribution<double> norm;
        Matrix g(spec.n, spec.q);
        for (Index i = 0; i < spec.n; ++i)
            for (Index j = 0; j < spec.q; ++j) g(i, j) = norm(rng);
        const Matrix l = Eigen::LLT<Matrix>(t.sigma_ee).matrixL();
        e = g * l.transpose();
    }
    d.y = d.x_raw * t.b_star.values() + e;

    BoolMatrix obs = BoolMatrix::Constant(spec.n, spec.q, true);
    if (spec.rho_w.size()) {
        for (Index j = 0; j < spec.q; ++j) {
            std::bernoulli_distribution miss(spec.rho_w[j]);
            for (Index i = 0; i < spec.n; ++i) obs(i, j) = !miss(rng);
        }
    }
    d.x = DesignMatrix::standardize(d.x_raw);
    d.z = MaskedResponse::centered(d.y, obs);
    return d;
}

struct SupportScores
{
    double tpr = 1.0;
    double tnr = 1.0;
    double mcc = 0.0;
};

/// Confusion-matrix scores. TPR (TNR) is 1 when there are no true positives
/// (negatives); MCC is 0 when its denominator vanishes.
inline SupportScores support_scores(std::size_t tp, std::size_t fp, std::size_t tn, std::size_t fn)
{
    SupportScores s;
    const double TP = static_cast<double>(tp), FP = static_cast<double>(fp);
    const double TN = static_cast<double>(tn), FN = static_cast<double>(fn);
    if (tp + fn) s.tpr = TP / (TP + FN);
    if (tn + fp) s.tnr = TN / (TN + FP);
    const double den = (TP + FP) * (TP + FN) * (TN + FP) * (TN + FN);
    s.mcc = den > 0.0 ? (TP * TN - FP * FN) / std::sqrt(den) : 0.0;
    return s;
}

struct MetricsReport
{
    double pe = 0.0;
    double kll = 0.0;
    double tpr_b = 0.0, tnr_b = 0.0, mcc_b = 0.0;
    double tpr_theta = 0.0, tnr_theta = 0.0, mcc_theta = 0.0;
    double frob_b1 = 0.0, frob_b2 = 0.0;
    double col_l2_b1 = 0.0;   // mean over columns of ||b1_l - b*_l||_2
    double theta_max = 0.0;   // max |Theta_hat - Theta*|

    static const std::vector<std::string>& names()
    {
        static const std::vector<std::string> n{"pe",        "tpr_b",     "tnr_b",   "mcc_b",   "kll",
                                                "tpr_theta", "tnr_theta", "mcc_theta", "frob_b1", "frob_b2",
                                                "col_l2_b1", "theta_max"};
        return n;
    }

    double get(std::string_view name) const
    {
        if (name == "pe") return pe;
        if (name == "kll") return kll;
        if (name == "tpr_b") return tpr_b;
        if (name == "tnr_b") return tnr_b;
        if (name == "mcc_b") return mcc_b;
        if (name == "tpr_theta") return tpr_theta;
        if (name == "tnr_theta") return tnr_theta;
        if (name == "mcc_theta") return mcc_theta;
        if (name == "frob_b1") return frob_b1;
        if (name == "frob_b2") return frob_b2;
        if (name == "col_l2_b1") return col_l2_b1;
        if (name == "theta_max") return theta_max;
        throw data_error("unknown metric '" + std::string(name) + "'");
    }
};

/// Metrics of estimates on the original predictor scale against the truth.
inline MetricsReport evaluate_estimates(const Matrix& b1, const Matrix& b2, const PrecisionMatrix& theta,
                                        const GroundTruth& truth)
{
    const Matrix& bs = truth.b_star.values();
    const Index q = bs.cols();
    if (b1.rows() != bs.rows() || b1.cols() != q || b2.rows() != bs.rows() || b2.cols() != q || theta.q() != q)
        throw dimension_error("evaluate: shape mismatch");
    MetricsReport r;
    const Matrix d2 = b2 - bs;
    r.pe = (d2.transpose() * truth.sigma_xx * d2).trace();
    r.frob_b1 = (b1 - bs).norm();
    r.frob_b2 = d2.norm();
    r.col_l2_b1 = (b1 - bs).colwise().norm().mean();

    Eigen::LLT<Matrix> llt(theta.values());
    if (llt.info() != Eigen::Success) throw numerical_error("evaluate: estimated precision is not PD");
    const double logdet_hat = theta.log_det();
    const double logdet_star = truth.theta_star.log_det();
    r.kll = (truth.sigma_ee.cwiseProduct(theta.values())).sum() - (logdet_hat - logdet_star) - static_cast<double>(q);
    r.kll = std::max(0.0, r.kll);
    r.theta_max = (theta.values() - truth.theta_star.values()).cwiseAbs().maxCoeff();

    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
    for (Index j = 0; j < q; ++j)
        for (Index i = 0; i < bs.rows(); ++i) {
            const bool t = bs(i, j) != 0.0, e = b2(i, j) != 0.0;
            tp += t && e;
            fp += !t && e;
            tn += !t && !e;
            fn += t && !e;
        }
    auto sb = support_scores(tp, fp, tn, fn);
    r.tpr_b = sb.tpr;
    r.tnr_b = sb.tnr;
    r.mcc_b = sb.mcc;

    tp = fp = tn = fn = 0;
    const Matrix& ts = truth.theta_star.values();
    for (Index j = 0; j < q; ++j)
        for (Index i = 0; i < j; ++i) {
            const bool t = ts(i, j) != 0.0, e = theta.values()(i, j) != 0.0;
            tp += t && e;
            fp += !t && e;
            tn += !t && !e;
            fn += t && !e;
        }
    auto st = support_scores(tp, fp, tn, fn);
    r.tpr_theta = st.tpr;
    r.tnr_theta = st.tnr;
    r.mcc_theta = st.mcc;
    return r;
}

inline MetricsReport evaluate(const FitResult& fit, const GroundTruth& truth)
{
    return evaluate_estimates(fit.b1_original(), fit.b2_original(), fit.theta_original(), truth);
}

// ---------------------------------------------------------------------------
// Scenarios

struct ScenarioOptions
{
    std::size_t reps = 20;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
    TuneConfig tune;
    // Optional filters; empty keeps every value of the scenario's grid.
    std::vector<Index> n, p, q;
    std::vector<double> rho_eps, rho_w;
    std::string variant;   // "a", "b" or empty for both
};

struct Cell
{
    std::string scenario;
    std::string variant;   // "a" varies rho_eps, "b" varies rho_w; empty for models
    int model = 0;
    SimulationSpec spec;   // seed unused; replications derive their own
    double missing() const { return spec.rho_w.size() ? spec.rho_w[0] : 0.0; }
};

struct ScenarioRow
{
    Cell cell;
    std::string metric;
    double mean = 0.0;
    double se = 0.0;
    std::size_t reps = 0;
    std::optional<double> reference;
    std::optional<double> reference_se;
};

struct ScenarioResult
{
    std::string name;
    std::vector<ScenarioRow> rows;
    double tolerance = 0.10; // relative, for rows that carry a reference value

    bool row_passes(const ScenarioRow& r) const
    {
        return !r.reference || std::abs(r.mean - *r.reference) <= tolerance * std::abs(*r.reference);
    }
    std::size_t compared() const
    {
        return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](auto& r) { return r.reference.has_value(); }));
    }
    std::size_t passed() const
    {
        return static_cast<std::size_t>(
            std::count_if(rows.begin(), rows.end(), [&](auto& r) { return r.reference && row_passes(r); }));
    }
};

inline const std::vector<std::string>& scenario_names()
{
    static const std::vector<std::string> n{"S1A", "S1B", "S2A", "S2B", "S3A", "S3B", "model1", "model2", "model3", "model4"};
    return n;
}

inline std::vector<std::string> scenario_metrics(const std::string& name)
{
    if (name == "S1A" || name == "S1B") return {"col_l2_b1", "frob_b1"};
    if (name == "S2A" || name == "S2B") return {"theta_max"};
    if (name == "S3A" || name == "S3B") return {"frob_b1", "frob_b2"};
    return {"pe", "tpr_b", "tnr_b", "mcc_b", "kll", "tpr_theta", "tnr_theta", "mcc_theta"};
}

namespace detail {

template <class T>
bool keep(const std::vector<T>& filter, T v)
{
    if (filter.empty()) return true;
    for (const T& f : filter)
        if (std::abs(static_cast<double>(f) - static_cast<double>(v)) < 1e-12) return true;
    return false;
}

inline std::uint64_t milli(double v) { return static_cast<std::uint64_t>(std::llround(v * 1e6)); }

} // namespace detail

/// Cells of a named scenario after applying the option filters.
inline std::vector<Cell> scenario_cells(const std::string& name, const ScenarioOptions& o)
{
    const auto& names = scenario_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw data_error("unknown scenario '" + name + "'");
    std::vector<Cell> cells;
    auto add = [&](Index n, Index p, Index q, double re, double rw, const std::string& variant, int model,
                   BScheme b, ThetaKind tk) {
        if (!detail::keep(o.n, n) || !detail::keep(o.p, p) || !detail::keep(o.q, q) || !detail::keep(o.rho_eps, re) ||
            !detail::keep(o.rho_w, rw) || (!o.variant.empty() && !variant.empty() && o.variant != variant))
            return;
        Cell c;
        c.scenario = name;
        c.variant = variant;
        c.model = model;
        c.spec.n = n;
        c.spec.p = p;
        c.spec.q = q;
        c.spec.rho_eps = re;
        c.spec.rho_w = Vector::Constant(q, rw);
        c.spec.b = b;
        c.spec.theta = tk;
        cells.push_back(std::move(c));
    };
    const std::vector<Index> ns{200, 400, 800, 1600, 3200, 6400, 12800};
    const std::vector<Index> ps{50, 100, 200, 400, 800};
    const std::vector<double> res{0.0, 0.3, 0.7, 0.9};
    const std::vector<double> rws{0.005, 0.1, 0.2, 0.3};
    const BScheme cs = BScheme::column_sparse(5);
    auto both = [&](Index n, Index p, Index q) {
        for (double re : res) add(n, p, q, re, 0.05, "a", 0, cs, ThetaKind::type1);
        for (double rw : rws) add(n, p, q, 0.7, rw, "b", 0, cs, ThetaKind::type1);
    };
    if (name == "S1A" || name == "S3A") {
        for (Index q : {Index{10}, Index{20}})
            for (Index n : ns) both(n, 100, q);
    } else if (name == "S1B" || name == "S3B") {
        for (Index q : {Index{10}, Index{20}})
            for (Index p : ps) both(400, p, q);
    } else if (name == "S2A") {
        for (Index n : ns) both(n, 100, 10);
    } else if (name == "S2B") {
        for (Index q : {Index{10}, Index{20}, Index{30}, Index{40}, Index{50}}) both(400, 100, q);
    } else {
        const int m = name.back() - '0';
        const Index n = m == 1 ? 400 : 200;
        const Index pq = m == 2 ? 60 : 30;
        const double s = m == 2 ? 0.1 : 0.2;
        const double re = m == 3 ? 0.4 : 0.7;
        const ThetaKind tk = m == 4 ? ThetaKind::type2 : ThetaKind::type1;
        for (double rw : {0.01, 0.10, 0.20}) add(n, pq, pq, re, rw, "", m, BScheme::bernoulli(s, s), tk);
    }
    return cells;
}

/// Seed of one replication, derived from the run seed and the cell parameters
/// so that filtering cells does not change any other cell's stream.
inline std::uint64_t replication_seed(std::uint64_t seed, const Cell& c, std::size_t rep)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(rep),  static_cast<std::uint32_t>(c.spec.n),
                      static_cast<std::uint32_t>(c.spec.p), static_cast<std::uint32_t>(c.spec.q),
                      static_cast<std::uint32_t>(detail::milli(c.spec.rho_eps)),
                      static_cast<std::uint32_t>(detail::milli(c.missing())),
                      static_cast<std::uint32_t>(c.model)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

/// One replication: simulate, tune, evaluate.
inline MetricsReport run_replication(const Cell& c, std::size_t rep, const ScenarioOptions& o)
{
    SimulationSpec spec = c.spec;
    spec.seed = replication_seed(o.seed, c, rep);
    const SimulatedData d = gen_dataset(spec);
    TuneConfig tc = o.tune;
    tc.threads = 1;
    tc.seed = spec.seed;
    const TuneResult tr = tune(d.x, d.z, tc);
    return evaluate(tr.fit, d.truth);
}

/// Published value for a (cell, metric) pair, if one exists.
inline std::optional<std::pair<double, double>> reference_value(const Cell& c, const std::string& metric,
                                                                 TuneRule rule)
{
    auto close = [](double a, double b) { return std::abs(a - b) < 1e-9; };
    if (c.model == 0) {
        if (metric != "frob_b1" && metric != "frob_b2") return std::nullopt;
        const bool varies_n = c.scenario == "S1A" || c.scenario == "S3A";
        const bool varies_p = c.scenario == "S1B" || c.scenario == "S3B";
        if (!varies_n && !varies_p) return std::nullopt;
        if (c.scenario[1] == '1' && metric == "frob_b2") return std::nullopt;
        for (const auto& r : reference::error_rows) {
            const bool match = (varies_n ? r.scenario == "S3A" && r.size == c.spec.n && c.spec.p == 100
                                         : r.scenario == "S3B" && r.size == c.spec.p && c.spec.n == 400) &&
                               r.q == c.spec.q && close(r.rho_eps, c.spec.rho_eps) && close(r.rho_w, c.missing());
            if (match) return metric == "frob_b1" ? std::make_pair(r.b1, r.b1_se) : std::make_pair(r.b2, r.b2_se);
        }
        return std::nullopt;
    }
    const auto& names = scenario_metrics("model1");
    const auto pos = std::find(names.begin(), names.end(), metric);
    if (pos == names.end()) return std::nullopt;
    const auto k = static_cast<std::size_t>(pos - names.begin());
    for (const auto& r : reference::model_rows)
        if (r.model == c.model && close(r.missing, c.missing()) && r.rule == to_string(rule))
            return std::make_pair(r.mean[k], r.se[k]);
    return std::nullopt;
}

struct CellReplicates
{
    Cell cell;
    std::vector<MetricsReport> reps;
};

/// Mean and standard error of one metric over replicates (se = 0 for one replicate).
inline std::pair<double, double> summarize(const std::vector<MetricsReport>& reps, const std::string& metric)
{
    const double k = static_cast<double>(reps.size());
    double mean = 0.0;
    for (const auto& r : reps) mean += r.get(metric);
    mean /= k;
    if (reps.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (const auto& r : reps) ss += (r.get(metric) - mean) * (r.get(metric) - mean);
    return {mean, std::sqrt(ss / (k - 1.0)) / std::sqrt(k)};
}

/// Runs every replication of every cell (in parallel over replications,
/// reduced in replication order) and returns the per-rep metrics.
inline std::vector<CellReplicates> run_cells(const std::vector<Cell>& cells, const ScenarioOptions& o)
{
    if (o.reps == 0) throw data_error("run_scenario: reps must be positive");
    std::vector<CellReplicates> out;
    for (const Cell& c : cells) {
        CellReplicates cr{c, std::vector<MetricsReport>(o.reps)};
        parallel_for(o.reps, o.threads, [&](std::size_t r) { cr.reps[r] = run_replication(c, r, o); });
        out.push_back(std::move(cr));
    }
    return out;
}

inline ScenarioResult run_scenario(const std::string& name, const ScenarioOptions& o)
{
    ScenarioResult res;
    res.name = name;
    const auto cells = scenario_cells(name, o);
    for (const auto& cr : run_cells(cells, o)) {
        for (const std::string& metric : scenario_metrics(name)) {
            ScenarioRow row;
            row.cell = cr.cell;
            row.metric = metric;
            std::tie(row.mean, row.se) = summarize(cr.reps, metric);
            row.reps = cr.reps.size();
            if (auto ref = reference_value(cr.cell, metric, o.tune.rule)) {
                row.reference = ref->first;
                row.reference_se = ref->second;
            }
            res.rows.push_back(std::move(row));
        }
    }
    return res;
}

} // namespace missreg::sim
