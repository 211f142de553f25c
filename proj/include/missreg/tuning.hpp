#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <missreg/estimator.hpp>
#include <missreg/parallel.hpp>

namespace missreg {

/// Descending, log-spaced penalty sequence from lambda_max to lambda_max * min_ratio.
struct LambdaGrid
{
    Vector values;
    double min_ratio = 0.01;

    std::size_t size() const noexcept { return static_cast<std::size_t>(values.size()); }
    double operator[](std::size_t i) const { return values[static_cast<Index>(i)]; }

    static LambdaGrid make(double lambda_max, std::size_t n_lambda, double min_ratio)
    {
        if (!(lambda_max > 0.0)) throw data_error("LambdaGrid: lambda_max must be positive");
        if (!(min_ratio > 0.0 && min_ratio < 1.0)) throw data_error("LambdaGrid: min_ratio must lie in (0,1)");
        if (n_lambda == 0) throw data_error("LambdaGrid: empty grid");
        LambdaGrid g;
        g.min_ratio = min_ratio;
        g.values.resize(static_cast<Index>(n_lambda));
        if (n_lambda == 1) {
            g.values[0] = lambda_max;
            return g;
        }
        const double step = std::log(min_ratio) / static_cast<double>(n_lambda - 1);
        for (std::size_t i = 0; i < n_lambda; ++i)
            g.values[static_cast<Index>(i)] = lambda_max * std::exp(step * static_cast<double>(i));
        g.values[0] = lambda_max;
        g.values[static_cast<Index>(n_lambda - 1)] = lambda_max * min_ratio;
        return g;
    }
};

/// ||2 S_xy||_max: the smallest lambda_b whose stage I fit is identically zero.
/// A zero S_xy returns a tiny positive value and sets `degenerate`.
inline double lambda_b_max(const SurrogateMoments& m, bool* degenerate = nullptr)
{
    const double v = m.s_xy_hat.size() ? 2.0 * m.s_xy_hat.cwiseAbs().maxCoeff() : 0.0;
    if (degenerate) *degenerate = !(v > 0.0);
    return v > 0.0 ? v : std::numeric_limits<double>::epsilon();
}

/// Largest absolute off-diagonal entry; zero when q = 1.
inline double lambda_theta_max(const Matrix& s_ee)
{
    double v = 0.0;
    for (Index j = 0; j < s_ee.cols(); ++j)
        for (Index i = 0; i < s_ee.rows(); ++i)
            if (i != j) v = std::max(v, std::abs(s_ee(i, j)));
    return v;
}

enum class BicStage { joint, stage1, stage2, stage3 };

/// Information criterion
///   2n tr[Theta (B^T S_xx B / 2 - S_xy^T B)] - n log det Theta
///     + log n { q + #{i<j : Theta_ij != 0} + #{B_ij != 0} }.
/// Stage variants keep the terms that vary with the quantity being tuned:
/// stage1 fixes Theta = I and drops edges; stage3 drops the log det and edge
/// terms; stage2 drops the coefficient count and adds n tr(Theta S_yy), the
/// part of the Gaussian likelihood that is constant in B but not in Theta.
inline double bic(const SurrogateMoments& m, const CoefficientMatrix& b, const PrecisionMatrix& theta, Index n,
                  BicStage stage = BicStage::joint)
{
    if (theta.q() != m.q() || b.p() != m.p() || b.q() != m.q()) throw dimension_error("bic: shape mismatch");
    if (!std::isfinite(theta.log_det())) throw numerical_error("bic: log det undefined");
    const double dn = static_cast<double>(n);
    const double logn = std::log(dn);
    const double q = static_cast<double>(m.q());
    const Matrix& bv = b.values();
    const Matrix inner = 0.5 * bv.transpose() * (m.s_xx * bv) - m.s_xy_hat.transpose() * bv;
    const double nnz_b = static_cast<double>(b.nonzeros());
    const double edges = static_cast<double>(theta.edges());
    switch (stage) {
    case BicStage::stage1:
        return 2.0 * dn * inner.trace() + logn * (q + nnz_b);
    case BicStage::stage2:
        return 2.0 * dn * (theta.values() * inner).trace() + dn * (theta.values() * m.s_yy_hat).trace() -
               dn * theta.log_det() + logn * (q + edges);
    case BicStage::stage3:
        return 2.0 * dn * (theta.values() * inner).trace() + logn * (q + nnz_b);
    case BicStage::joint:
    default:
        return 2.0 * dn * (theta.values() * inner).trace() - dn * theta.log_det() + logn * (q + edges + nnz_b);
    }
}

/// Calibrated validation loss  tr[S_yy - 2 S_xy^T B + B^T S_xx B]  on held-out moments.
inline double calibrated_loss(const SurrogateMoments& val, const Matrix& b)
{
    return val.s_yy_hat.trace() - 2.0 * (val.s_xy_hat.cwiseProduct(b)).sum() + (b.cwiseProduct(val.s_xx * b)).sum();
}

struct Folds
{
    std::vector<std::vector<Index>> validation;
    std::vector<std::vector<Index>> training;
    std::uint64_t seed = 0; // seed actually used after any re-draws
};

/// Row-wise K-fold split from a seeded shuffle. Redraws (seed + attempt) up
/// to 10 times if some fold leaves a response column without observations.
inline Folds make_folds(const MaskedResponse& z, std::size_t k, std::uint64_t seed)
{
    const auto n = static_cast<std::size_t>(z.n());
    if (k < 2 || k > n) throw data_error("make_folds: need 2 <= folds <= n");
    for (std::uint64_t attempt = 0; attempt < 10; ++attempt) {
        Folds f;
        f.seed = seed + attempt;
        std::vector<Index> perm(n);
        std::iota(perm.begin(), perm.end(), Index{0});
        std::mt19937_64 rng(f.seed);
        std::shuffle(perm.begin(), perm.end(), rng);
        f.validation.assign(k, {});
        for (std::size_t i = 0; i < n; ++i) f.validation[i % k].push_back(perm[i]);
        bool ok = true;
        for (auto& v : f.validation) std::sort(v.begin(), v.end());
        f.training.assign(k, {});
        for (std::size_t fi = 0; fi < k && ok; ++fi) {
            std::vector<char> in_val(n, 0);
            for (Index i : f.validation[fi]) in_val[static_cast<std::size_t>(i)] = 1;
            for (std::size_t i = 0; i < n; ++i)
                if (!in_val[i]) f.training[fi].push_back(static_cast<Index>(i));
            for (const auto* rows : {&f.validation[fi], &f.training[fi]}) {
                for (Index j = 0; j < z.q() && ok; ++j) {
                    bool any = false;
                    for (Index i : *rows) any = any || z.observed()(i, j);
                    ok = any;
                }
            }
        }
        if (ok) return f;
    }
    throw data_error("make_folds: a fold has a fully missing response column after 10 draws");
}

struct CvScore
{
    double mean = 0.0;
    double se = 0.0;
    std::vector<double> fold_losses;
    std::vector<std::size_t> fold_sizes;
};

/// K-fold calibrated cross-validation of the three-stage fit at one
/// (lambda_b, lambda_theta) pair; lambda_b is used in stages I and III.
inline CvScore cv_score(const DesignMatrix& x, const MaskedResponse& z, std::size_t folds, double lambda_b,
                        double lambda_theta, std::uint64_t seed, const FitOptions& opt = {})
{
    if (x.n() != z.n()) throw dimension_error("cv_score: row counts differ");
    const MaskedResponse zs = opt.standardize_response ? z.standardized() : z;
    const Folds f = make_folds(zs, folds, seed);
    const FitOptions lo = opt.lenient();
    CvScore s;
    for (std::size_t k = 0; k < folds; ++k) {
        const auto train = compute_moments(x.rows(f.training[k]), zs.rows(f.training[k]));
        const auto val = compute_moments(x.rows(f.validation[k]), zs.rows(f.validation[k]));
        const FitResult fit = fit_three_stage(train, lambda_b, lambda_theta, lambda_b, lo);
        s.fold_losses.push_back(calibrated_loss(val, fit.b2.values()));
        s.fold_sizes.push_back(f.validation[k].size());
    }
    const double kk = static_cast<double>(folds);
    s.mean = std::accumulate(s.fold_losses.begin(), s.fold_losses.end(), 0.0) / kk;
    double ss = 0.0;
    for (double v : s.fold_losses) ss += (v - s.mean) * (v - s.mean);
    s.se = std::sqrt(ss / (kk - 1.0)) / std::sqrt(kk);
    return s;
}

enum class TuneRule { bic, cv_min, cv_1se };

inline const char* to_string(TuneRule r)
{
    switch (r) {
    case TuneRule::cv_min: return "cv.min";
    case TuneRule::cv_1se: return "cv.1se";
    default: return "bic";
    }
}

inline TuneRule parse_rule(const std::string& s)
{
    if (s == "bic") return TuneRule::bic;
    if (s == "cv.min") return TuneRule::cv_min;
    if (s == "cv.1se") return TuneRule::cv_1se;
    throw data_error("unknown tuning rule '" + s + "' (expected bic, cv.min or cv.1se)");
}

struct TuneConfig
{
    TuneRule rule = TuneRule::bic;
    std::size_t n_lambda = 50;
    std::size_t n_lambda_theta = 0;  // 0: same as n_lambda
    double min_ratio = 0.0;          // <= 0: 0.01 if n > p + q else 0.1
    std::size_t folds = 5;
    bool fast = false;
    bool full_surface = false;       // BIC mode: score every (lambda_theta, lambda_b) cell
    std::uint64_t seed = 1;
    std::size_t threads = 1;
    FitOptions solver;
};

/// Scores over the (lambda_theta, lambda_b) grid. Unevaluated cells are NaN.
struct TuneSurface
{
    LambdaGrid grid_b;
    LambdaGrid grid_theta;
    Matrix score;     // rows: lambda_theta, cols: lambda_b
    Matrix score_se;  // CV only
    Vector bic_stage1;
    Vector bic_stage2;
    std::size_t selected_theta = 0;
    std::size_t selected_b = 0;
    std::size_t selected_b1 = 0;
    TuneRule rule = TuneRule::bic;
    std::uint64_t fold_seed = 0;
    std::size_t nonconverged = 0;
};

struct TuneResult
{
    TuneSurface surface;
    FitResult fit;
};

namespace detail {

inline std::size_t argmin(const Vector& v)
{
    std::size_t best = 0;
    for (Index i = 1; i < v.size(); ++i)
        if (v[i] < v[static_cast<Index>(best)]) best = static_cast<std::size_t>(i);
    return best;
}

inline double auto_min_ratio(const TuneConfig& c, Index n, Index p, Index q)
{
    if (c.min_ratio > 0.0) return c.min_ratio;
    return n > p + q ? 0.01 : 0.1;
}

// Indices to evaluate: the whole grid, or in fast mode a coarse pass followed
// by the full-resolution neighborhood of the coarse optimum.
inline std::size_t coarse_stride(std::size_t n) { return std::max<std::size_t>(1, n / 10); }

inline void count(std::size_t& nc, const SolveInfo& i)
{
    if (!i.converged) ++nc;
}

} // namespace detail

/// Stage III scores along a descending lambda_b path at fixed Theta with warm
/// starts. Returns BIC values (NaN where skipped) and fits.
inline std::vector<std::optional<CoefficientMatrix>> stage3_path(const SurrogateMoments& m,
                                                                 const PrecisionMatrix& theta, const LambdaGrid& grid,
                                                                 const CoefficientMatrix& init,
                                                                 const std::vector<std::size_t>& indices,
                                                                 const LineSearchConfig& ls, std::size_t& nonconv)
{
    std::vector<std::optional<CoefficientMatrix>> out(grid.size());
    CoefficientMatrix warm = init;
    for (std::size_t idx : indices) {
        SolveInfo info;
        warm = fit_stage3(m, theta, grid[idx], warm, ls, &info);
        detail::count(nonconv, info);
        out[idx] = warm;
    }
    return out;
}

/// Sequential BIC tuning of (lambda_b1, lambda_theta, lambda_b2), or K-fold
/// calibrated cross-validation over (lambda_theta, lambda_b), followed by a
/// final fit at the selected penalties.
inline TuneResult tune(const DesignMatrix& x, const MaskedResponse& z_in, const TuneConfig& cfg = {})
{
    if (x.n() != z_in.n()) throw dimension_error("tune: row counts differ");
    const MaskedResponse z = cfg.solver.standardize_response ? z_in.standardized() : z_in;
    const SurrogateMoments m = compute_moments(x, z);
    const Index n = m.n, p = m.p(), q = m.q();
    const FitOptions lo = cfg.solver.lenient();
    const double ratio = detail::auto_min_ratio(cfg, n, p, q);
    const std::size_t nb = cfg.n_lambda;
    const std::size_t nt = cfg.n_lambda_theta ? cfg.n_lambda_theta : cfg.n_lambda;

    TuneResult res;
    TuneSurface& sf = res.surface;
    sf.rule = cfg.rule;
    sf.grid_b = LambdaGrid::make(lambda_b_max(m), nb, ratio);
    {
        // Both rules start the lambda_theta sequence from the projected S_yy (B = 0).
        const PsdProjection proj0 = project_psd_maxnorm(m.s_yy_hat, lo.projection);
        double lt_max = lambda_theta_max(proj0.k);
        if (!(lt_max > 0.0)) lt_max = std::numeric_limits<double>::epsilon();
        sf.grid_theta = LambdaGrid::make(lt_max, nt, ratio);
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();

    if (cfg.rule == TuneRule::bic) {
        // Stage I path with Theta = I.
        std::vector<CoefficientMatrix> b1_path;
        sf.bic_stage1 = Vector(static_cast<Index>(nb));
        const PrecisionMatrix eye = PrecisionMatrix::identity(q);
        std::optional<CoefficientMatrix> warm;
        for (std::size_t i = 0; i < nb; ++i) {
            SolveInfo info;
            warm = fit_stage1(m, sf.grid_b[i], warm, lo.lasso, &info);
            detail::count(sf.nonconverged, info);
            sf.bic_stage1[static_cast<Index>(i)] = bic(m, *warm, eye, n, BicStage::stage1);
            b1_path.push_back(*warm);
        }
        sf.selected_b1 = detail::argmin(sf.bic_stage1);
        const CoefficientMatrix& b1 = b1_path[sf.selected_b1];

        // Stage II path over lambda_theta; the projection does not depend on lambda.
        const Matrix s_hat = error_cov(m, b1, lo.error_cov);
        const PsdProjection proj = project_psd_maxnorm(s_hat, lo.projection);
        sf.bic_stage2 = Vector(static_cast<Index>(nt));
        std::vector<GlassoResult> theta_path;
        std::optional<GlassoState> gwarm;
        for (std::size_t i = 0; i < nt; ++i) {
            GlassoResult g = fit_stage2_projected(proj.k, sf.grid_theta[i], lo.glasso, gwarm);
            detail::count(sf.nonconverged, g.info);
            sf.bic_stage2[static_cast<Index>(i)] = bic(m, b1, g.theta, n, BicStage::stage2);
            gwarm = g.state;
            theta_path.push_back(std::move(g));
        }
        sf.selected_theta = detail::argmin(sf.bic_stage2);

        // Stage III path(s).
        sf.score = Matrix::Constant(static_cast<Index>(nt), static_cast<Index>(nb), nan);
        std::vector<std::size_t> rows{sf.selected_theta};
        if (cfg.full_surface) {
            rows.resize(nt);
            std::iota(rows.begin(), rows.end(), std::size_t{0});
        }
        std::vector<std::optional<CoefficientMatrix>> chosen_row;
        std::vector<std::size_t> row_nonconv(rows.size(), 0);
        std::vector<std::vector<std::optional<CoefficientMatrix>>> row_fits(rows.size());
        parallel_for(rows.size(), cfg.threads, [&](std::size_t r) {
            const std::size_t ti = rows[r];
            const PrecisionMatrix& th = theta_path[ti].theta;
            std::vector<std::size_t> idx;
            auto score_of = [&](const std::vector<std::optional<CoefficientMatrix>>& fits, std::size_t j) {
                return bic(m, *fits[j], th, n, BicStage::stage3);
            };
            if (cfg.fast && nb > 2) {
                const std::size_t stride = detail::coarse_stride(nb);
                for (std::size_t j = 0; j < nb; j += stride) idx.push_back(j);
                auto fits = stage3_path(m, th, sf.grid_b, b1, idx, lo.line_search, row_nonconv[r]);
                std::size_t best = idx.front();
                for (std::size_t j : idx)
                    if (score_of(fits, j) < score_of(fits, best)) best = j;
                const std::size_t from = best >= stride ? best - stride + 1 : 0;
                const std::size_t to = std::min(nb - 1, best + stride - 1);
                std::vector<std::size_t> fine;
                for (std::size_t j = from; j <= to; ++j)
                    if (!fits[j]) fine.push_back(j);
                const CoefficientMatrix& start = from > 0 && fits[from - 1] ? *fits[from - 1]
                                                : (fits[from] ? *fits[from] : b1);
                auto more = stage3_path(m, th, sf.grid_b, start, fine, lo.line_search, row_nonconv[r]);
                for (std::size_t j : fine) fits[j] = std::move(more[j]);
                row_fits[r] = std::move(fits);
            } else {
                idx.resize(nb);
                std::iota(idx.begin(), idx.end(), std::size_t{0});
                row_fits[r] = stage3_path(m, th, sf.grid_b, b1, idx, lo.line_search, row_nonconv[r]);
            }
            for (std::size_t j = 0; j < nb; ++j)
                if (row_fits[r][j])
                    sf.score(static_cast<Index>(ti), static_cast<Index>(j)) = score_of(row_fits[r], j);
        });
        for (auto c : row_nonconv) sf.nonconverged += c;
        const std::size_t sel_row = static_cast<std::size_t>(
            std::find(rows.begin(), rows.end(), sf.selected_theta) - rows.begin());
        std::size_t best_b = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < nb; ++j) {
            const double v = sf.score(static_cast<Index>(sf.selected_theta), static_cast<Index>(j));
            if (std::isfinite(v) && v < best) {
                best = v;
                best_b = j;
            }
        }
        sf.selected_b = best_b;

        FitResult& fit = res.fit;
        fit.b1 = b1;
        fit.lambda_b1 = sf.grid_b[sf.selected_b1];
        fit.lambda_theta = sf.grid_theta[sf.selected_theta];
        fit.lambda_b2 = sf.grid_b[sf.selected_b];
        fit.theta = theta_path[sf.selected_theta].theta;
        fit.stage2 = theta_path[sf.selected_theta].info;
        fit.b2 = *row_fits[sel_row][sf.selected_b];
        fit.s_ee_hat = s_hat;
        fit.s_ee_proj = proj.k;
        fit.projection_distance = proj.distance;
        fit.b1 = fit_stage1(m, fit.lambda_b1, fit.b1, lo.lasso, &fit.stage1);
        fit.b2 = fit_stage3(m, fit.theta, fit.lambda_b2, fit.b2, lo.line_search, &fit.stage3);
    } else {
        // Calibrated K-fold cross-validation over the joint grid.
        const Folds folds = make_folds(z, cfg.folds, cfg.seed);
        sf.fold_seed = folds.seed;
        const std::size_t K = cfg.folds;
        std::vector<SurrogateMoments> train(K), val(K);
        for (std::size_t k = 0; k < K; ++k) {
            train[k] = compute_moments(x.rows(folds.training[k]), z.rows(folds.training[k]));
            val[k] = compute_moments(x.rows(folds.validation[k]), z.rows(folds.validation[k]));
        }
        // losses[k](ti, bj)
        std::vector<Matrix> losses(K, Matrix::Constant(static_cast<Index>(nt), static_cast<Index>(nb), nan));
        std::vector<std::size_t> fold_nonconv(K, 0);

        auto run_rows = [&](const std::vector<std::size_t>& theta_rows) {
            parallel_for(K, cfg.threads, [&](std::size_t k) {
                const SurrogateMoments& tm = train[k];
                std::optional<CoefficientMatrix> b1w;
                for (std::size_t bj = 0; bj < nb; ++bj) {
                    SolveInfo i1;
                    b1w = fit_stage1(tm, sf.grid_b[bj], b1w, lo.lasso, &i1);
                    detail::count(fold_nonconv[k], i1);
                    const PsdProjection pr = project_psd_maxnorm(error_cov(tm, *b1w, lo.error_cov), lo.projection);
                    std::optional<GlassoState> gw;
                    CoefficientMatrix b2w = *b1w;
                    for (std::size_t ti : theta_rows) {
                        GlassoResult g = fit_stage2_projected(pr.k, sf.grid_theta[ti], lo.glasso, gw);
                        detail::count(fold_nonconv[k], g.info);
                        gw = g.state;
                        SolveInfo i3;
                        b2w = fit_stage3(tm, g.theta, sf.grid_b[bj], b2w, lo.line_search, &i3);
                        detail::count(fold_nonconv[k], i3);
                        losses[k](static_cast<Index>(ti), static_cast<Index>(bj)) = calibrated_loss(val[k], b2w.values());
                    }
                }
            });
        };

        std::vector<std::size_t> rows;
        if (cfg.fast && nt > 2) {
            const std::size_t stride = detail::coarse_stride(nt);
            for (std::size_t i = 0; i < nt; i += stride) rows.push_back(i);
            run_rows(rows);
        } else {
            rows.resize(nt);
            std::iota(rows.begin(), rows.end(), std::size_t{0});
            run_rows(rows);
        }

        auto reduce = [&]() {
            sf.score = Matrix::Constant(static_cast<Index>(nt), static_cast<Index>(nb), nan);
            sf.score_se = sf.score;
            for (Index i = 0; i < static_cast<Index>(nt); ++i)
                for (Index j = 0; j < static_cast<Index>(nb); ++j) {
                    if (!std::isfinite(losses[0](i, j))) continue;
                    double mean = 0.0;
                    for (std::size_t k = 0; k < K; ++k) mean += losses[k](i, j);
                    mean /= static_cast<double>(K);
                    double ss = 0.0;
                    for (std::size_t k = 0; k < K; ++k) ss += (losses[k](i, j) - mean) * (losses[k](i, j) - mean);
                    sf.score(i, j) = mean;
                    sf.score_se(i, j) = std::sqrt(ss / static_cast<double>(K - 1)) / std::sqrt(static_cast<double>(K));
                }
        };
        auto best_cell = [&]() {
            std::pair<std::size_t, std::size_t> b{0, 0};
            double best = std::numeric_limits<double>::infinity();
            for (Index i = 0; i < sf.score.rows(); ++i)
                for (Index j = 0; j < sf.score.cols(); ++j)
                    if (std::isfinite(sf.score(i, j)) && sf.score(i, j) < best) {
                        best = sf.score(i, j);
                        b = {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
                    }
            return b;
        };

        reduce();
        if (cfg.fast && nt > 2) {
            const std::size_t stride = detail::coarse_stride(nt);
            const std::size_t ct = best_cell().first;
            std::vector<std::size_t> fine;
            const std::size_t from = ct >= stride ? ct - stride + 1 : 0;
            const std::size_t to = std::min(nt - 1, ct + stride - 1);
            for (std::size_t i = from; i <= to; ++i)
                if (!std::isfinite(sf.score(static_cast<Index>(i), 0))) fine.push_back(i);
            if (!fine.empty()) {
                run_rows(fine);
                reduce();
            }
        }
        for (auto c : fold_nonconv) sf.nonconverged += c;

        auto [ti, bj] = best_cell();
        if (cfg.rule == TuneRule::cv_1se) {
            // One-standard-error rule on lambda_b only, at the selected lambda_theta.
            const double limit = sf.score(static_cast<Index>(ti), static_cast<Index>(bj)) +
                                 sf.score_se(static_cast<Index>(ti), static_cast<Index>(bj));
            for (std::size_t j = 0; j <= bj; ++j) {
                const double v = sf.score(static_cast<Index>(ti), static_cast<Index>(j));
                if (std::isfinite(v) && v <= limit) {
                    bj = j;
                    break;
                }
            }
        }
        sf.selected_theta = ti;
        sf.selected_b = bj;
        sf.selected_b1 = bj;
        res.fit = fit_three_stage(m, sf.grid_b[bj], sf.grid_theta[ti], sf.grid_b[bj], lo);
    }

    res.fit.rho_hat = z.rho_hat();
    res.fit.column_scales = x.column_scales();
    res.fit.response_scales = z.column_scales();
    res.fit.n = n;
    return res;
}

} // namespace missreg
