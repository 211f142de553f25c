#pragma once

#include <missreg/fista.hpp>
#include <missreg/glasso.hpp>
#include <missreg/lasso.hpp>
#include <missreg/surrogate.hpp>
#include <missreg/types.hpp>

namespace missreg {

/// Solver settings for all three stages.
struct FitOptions
{
    LassoOptions lasso;
    GlassoOptions glasso;
    LineSearchConfig line_search;
    PsdProjectionOptions projection;
    ErrorCovForm error_cov = ErrorCovForm::residual;
    bool standardize_response = true;   // fit on unit-scale responses, report on the original scale

    /// Same tolerances, but solvers return their last iterate instead of
    /// throwing when an iteration cap is hit. Used along tuning paths.
    FitOptions lenient() const
    {
        FitOptions o = *this;
        o.lasso.strict = false;
        o.glasso.strict = false;
        o.line_search.strict = false;
        return o;
    }
};

/// Staged estimates on the standardized design scale.
struct FitResult
{
    CoefficientMatrix b1;
    PrecisionMatrix theta;
    CoefficientMatrix b2;
    double lambda_b1 = 0.0;
    double lambda_theta = 0.0;
    double lambda_b2 = 0.0;
    SolveInfo stage1, stage2, stage3;
    Matrix s_ee_hat;
    Matrix s_ee_proj;
    double projection_distance = 0.0;
    Vector rho_hat;
    Vector column_scales;    // predictor scales (empty: all 1)
    Vector response_scales;  // response scales (empty: all 1)
    Index n = 0;

    /// Coefficients on the original predictor and response scales.
    static Matrix unscale(const Matrix& b, const Vector& x_scales, const Vector& y_scales = Vector())
    {
        Matrix out = b;
        if (x_scales.size())
            for (Index k = 0; k < out.rows(); ++k) out.row(k) /= x_scales[k];
        if (y_scales.size())
            for (Index j = 0; j < out.cols(); ++j) out.col(j) *= y_scales[j];
        return out;
    }
    /// Precision on the original response scale.
    static Matrix unscale_precision(const Matrix& theta, const Vector& y_scales)
    {
        if (!y_scales.size()) return theta;
        const Vector inv = y_scales.cwiseInverse();
        return inv.asDiagonal() * theta * inv.asDiagonal();
    }
    Matrix b1_original() const { return unscale(b1.values(), column_scales, response_scales); }
    Matrix b2_original() const { return unscale(b2.values(), column_scales, response_scales); }
    PrecisionMatrix theta_original() const { return PrecisionMatrix(unscale_precision(theta.values(), response_scales)); }
};

/// Runs stage I -> II -> III at fixed penalties.
inline FitResult fit_three_stage(const SurrogateMoments& m, double lambda_b1, double lambda_theta, double lambda_b2,
                                 const FitOptions& opt = {})
{
    FitResult r;
    r.lambda_b1 = lambda_b1;
    r.lambda_theta = lambda_theta;
    r.lambda_b2 = lambda_b2;
    r.n = m.n;
    r.b1 = fit_stage1(m, lambda_b1, std::nullopt, opt.lasso, &r.stage1);
    auto s2 = fit_stage2(m, r.b1, lambda_theta, opt.glasso, opt.projection, opt.error_cov);
    r.s_ee_hat = std::move(s2.s_ee_hat);
    r.s_ee_proj = s2.projection.k;
    r.projection_distance = s2.projection.distance;
    r.theta = s2.glasso.theta;
    r.stage2 = s2.glasso.info;
    r.b2 = fit_stage3(m, r.theta, lambda_b2, r.b1, opt.line_search, &r.stage3);
    return r;
}

inline FitResult fit_three_stage(const DesignMatrix& x, const MaskedResponse& z, double lambda_b1,
                                 double lambda_theta, double lambda_b2, const FitOptions& opt = {})
{
    const MaskedResponse zs = opt.standardize_response ? z.standardized() : z;
    const SurrogateMoments m = compute_moments(x, zs);
    FitResult r = fit_three_stage(m, lambda_b1, lambda_theta, lambda_b2, opt);
    r.rho_hat = zs.rho_hat();
    r.column_scales = x.column_scales();
    r.response_scales = zs.column_scales();
    return r;
}

} // namespace missreg
