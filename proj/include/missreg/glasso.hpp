#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include <Eigen/Cholesky>

#include <missreg/lasso.hpp>
#include <missreg/surrogate.hpp>
#include <missreg/types.hpp>

namespace missreg {

/// min_{Theta > 0}  tr(Theta S) - log det Theta + lambda sum_{i != j} |Theta_ij|
struct GlassoProblem
{
    Matrix cov;
    double lambda_theta = 0.0;
    double diag_floor = -1.0; // < 0 selects 1e-8 * trace(cov) / q
};

struct GlassoOptions
{
    double tol = 1e-6;       // mean absolute change of the off-diagonal of W per sweep
    double kkt_tol = 1e-5;
    std::size_t max_iter = 200;
    LassoOptions inner{1e-10, 1e-9, 100000, false};
    bool strict = true;
};

/// Warm-start state: the covariance estimate W and the column regressions.
struct GlassoState
{
    Matrix w;
    Matrix beta; // (q-1) x q
};

struct GlassoResult
{
    PrecisionMatrix theta;
    GlassoState state;
    SolveInfo info;
    bool floored = false;
};

/// Largest violation of the stationarity conditions of the glasso problem,
/// evaluated with W = Theta^{-1}. The diagonal is unpenalized.
inline double glasso_kkt(const Matrix& theta, const Matrix& cov, double lambda)
{
    Eigen::LLT<Matrix> llt(theta);
    if (llt.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
    const Matrix w = llt.solve(Matrix::Identity(theta.rows(), theta.cols()));
    double r = 0.0;
    for (Index j = 0; j < theta.cols(); ++j)
        for (Index i = 0; i < theta.rows(); ++i) {
            const double d = w(i, j) - cov(i, j);
            double v;
            if (i == j) v = std::abs(d);
            else if (theta(i, j) == 0.0) v = std::max(0.0, std::abs(d) - lambda);
            else v = std::abs(d - lambda * (theta(i, j) > 0 ? 1.0 : -1.0));
            r = std::max(r, v);
        }
    return r;
}

inline double glasso_objective(const Matrix& theta, const Matrix& cov, double lambda)
{
    Eigen::LLT<Matrix> llt(theta);
    const double logdet = 2.0 * llt.matrixLLT().diagonal().array().log().sum();
    const double off = theta.cwiseAbs().sum() - theta.diagonal().cwiseAbs().sum();
    return (theta.cwiseProduct(cov)).sum() - logdet + lambda * off;
}

/// Block coordinate descent over columns of W = Theta^{-1}; each column is a
/// covariance-form lasso solved by `solve_column`.
inline GlassoResult fit_precision(const GlassoProblem& prob, const GlassoOptions& opt = {},
                                  const std::optional<GlassoState>& warm = std::nullopt,
                                  std::vector<double>* objective_trace = nullptr)
{
    const Index q = prob.cov.rows();
    if (prob.cov.cols() != q) throw dimension_error("fit_precision: covariance not square");
    if (!(prob.lambda_theta >= 0.0)) throw data_error("fit_precision: lambda must be nonnegative");
    Matrix s = 0.5 * (prob.cov + prob.cov.transpose());
    if (s.diagonal().minCoeff() <= 0.0) throw numerical_error("fit_precision: covariance diagonal nonpositive");

    GlassoResult res;
    {
        Eigen::LLT<Matrix> llt(s);
        if (llt.info() != Eigen::Success) {
            const double floor = prob.diag_floor >= 0.0 ? prob.diag_floor : 1e-8 * s.trace() / static_cast<double>(q);
            s.diagonal().array() += floor;
            res.floored = true;
        }
    }

    if (q == 1) {
        res.theta = PrecisionMatrix(Matrix::Constant(1, 1, 1.0 / s(0, 0)));
        res.state.w = s;
        res.state.beta = Matrix::Zero(0, 1);
        res.info.objective = glasso_objective(res.theta.values(), s, prob.lambda_theta);
        return res;
    }

    Matrix w = s;
    Matrix beta = Matrix::Zero(q - 1, q);
    if (warm && warm->w.rows() == q && warm->beta.rows() == q - 1) {
        w = warm->w;
        w.diagonal() = s.diagonal();
        beta = warm->beta;
    }

    auto theta_from = [&](const Matrix& wm, const Matrix& bm) {
        Matrix th = Matrix::Zero(q, q);
        for (Index j = 0; j < q; ++j) {
            Vector w12(q - 1), b(q - 1);
            for (Index i = 0, r = 0; i < q; ++i) {
                if (i == j) continue;
                w12[r] = wm(i, j);
                b[r] = bm(r, j);
                ++r;
            }
            const double tjj = 1.0 / (wm(j, j) - w12.dot(b));
            th(j, j) = tjj;
            for (Index i = 0, r = 0; i < q; ++i) {
                if (i == j) continue;
                th(i, j) = -b[r] * tjj;
                ++r;
            }
        }
        return Matrix(0.5 * (th + th.transpose()));
    };

    Matrix w11(q - 1, q - 1);
    Vector s12(q - 1);
    Matrix theta;
    double kkt = std::numeric_limits<double>::infinity();
    std::size_t it = 0;
    bool done = false;
    while (it < opt.max_iter) {
        ++it;
        double change = 0.0;
        for (Index j = 0; j < q; ++j) {
            for (Index c = 0, cc = 0; c < q; ++c) {
                if (c == j) continue;
                for (Index r = 0, rr = 0; r < q; ++r) {
                    if (r == j) continue;
                    w11(rr, cc) = w(r, c);
                    ++rr;
                }
                s12[cc] = s(c, j);
                ++cc;
            }
            const LassoProblem sub{w11, s12, prob.lambda_theta};
            const Vector b = solve_column(sub, beta.col(j), opt.inner);
            beta.col(j) = b;
            const Vector w12 = w11 * b;
            for (Index i = 0, r = 0; i < q; ++i) {
                if (i == j) continue;
                change += std::abs(w12[r] - w(i, j));
                w(i, j) = w12[r];
                w(j, i) = w12[r];
                ++r;
            }
        }
        change /= static_cast<double>(q * (q - 1));
        theta = theta_from(w, beta);
        if (objective_trace) objective_trace->push_back(glasso_objective(theta, s, prob.lambda_theta));
        if (change < opt.tol) {
            kkt = glasso_kkt(theta, s, prob.lambda_theta);
            if (kkt < opt.kkt_tol) {
                done = true;
                break;
            }
        }
    }
    if (!done) {
        kkt = glasso_kkt(theta, s, prob.lambda_theta);
        if (opt.strict) throw convergence_error("fit_precision: max_iter exceeded", kkt, it);
    }
    Eigen::LLT<Matrix> llt(theta);
    if (llt.info() != Eigen::Success) throw numerical_error("fit_precision: estimate is not positive definite");
    res.theta = PrecisionMatrix(std::move(theta));
    res.state = GlassoState{std::move(w), std::move(beta)};
    res.info.iterations = it;
    res.info.kkt = kkt;
    res.info.converged = done;
    res.info.objective = glasso_objective(res.theta.values(), s, prob.lambda_theta);
    return res;
}

struct Stage2Result
{
    GlassoResult glasso;
    Matrix s_ee_hat;
    PsdProjection projection;
};

/// Residual covariance -> max-norm PSD projection -> graphical lasso.
inline Stage2Result fit_stage2(const SurrogateMoments& m, const CoefficientMatrix& b1, double lambda_theta,
                               const GlassoOptions& opt = {}, const PsdProjectionOptions& popt = {},
                               ErrorCovForm form = ErrorCovForm::residual)
{
    Stage2Result r;
    r.s_ee_hat = error_cov(m, b1, form);
    r.projection = project_psd_maxnorm(r.s_ee_hat, popt);
    r.glasso = fit_precision(GlassoProblem{r.projection.k, lambda_theta}, opt);
    return r;
}

/// Same as above with a precomputed projection, for paths over lambda_theta.
inline GlassoResult fit_stage2_projected(const Matrix& s_ee_proj, double lambda_theta, const GlassoOptions& opt = {},
                                         const std::optional<GlassoState>& warm = std::nullopt)
{
    return fit_precision(GlassoProblem{s_ee_proj, lambda_theta}, opt, warm);
}

} // namespace missreg
