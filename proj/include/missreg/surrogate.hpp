#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Eigenvalues>

#include <missreg/data.hpp>
#include <missreg/types.hpp>

namespace missreg {

/// Moment matrices entering every stage of the estimator. `s_xy_hat` and
/// `s_yy_hat` are bias-corrected for missing responses; `s_ee_hat` is the
/// plug-in residual covariance (possibly indefinite) and `s_ee_proj` its
/// max-norm projection onto the PSD cone. The last two are filled by stage II.
struct SurrogateMoments
{
    Matrix s_xx;
    Matrix s_xy_hat;
    Matrix s_yy_hat;
    Matrix s_ee_hat;
    Matrix s_ee_proj;
    Index n = 0;

    Index p() const noexcept { return s_xx.rows(); }
    Index q() const noexcept { return s_yy_hat.rows(); }
};

/// (1/n) X^T Z with column j divided by (1 - rho_j).
inline Matrix surrogate_xy(const DesignMatrix& x, const MaskedResponse& z)
{
    if (x.n() != z.n()) throw dimension_error("surrogate_xy: row counts differ");
    const Vector& rho = z.rho_hat();
    for (Index j = 0; j < rho.size(); ++j)
        if (!(rho[j] < 1.0)) throw data_error("surrogate_xy: column fully missing");
    Matrix s = x.values().transpose() * z.values() / static_cast<double>(x.n());
    for (Index j = 0; j < s.cols(); ++j) s.col(j) /= (1.0 - rho[j]);
    return s;
}

/// (1/n) Z^T Z divided elementwise by E[W W^T].
inline Matrix surrogate_yy(const MaskedResponse& z)
{
    const Matrix mask = second_moment_mask(z.rho_hat());
    Matrix s = z.values().transpose() * z.values() / static_cast<double>(z.n());
    s.array() /= mask.array();
    return 0.5 * (s + s.transpose());
}

inline SurrogateMoments compute_moments(const DesignMatrix& x, const MaskedResponse& z)
{
    if (x.n() != z.n()) throw dimension_error("compute_moments: row counts differ");
    SurrogateMoments m;
    m.n = x.n();
    const Matrix sxx = x.values().transpose() * x.values() / static_cast<double>(x.n());
    m.s_xx = 0.5 * (sxx + sxx.transpose());
    m.s_xy_hat = surrogate_xy(x, z);
    m.s_yy_hat = surrogate_yy(z);
    return m;
}

/// S_yy_hat - B^T S_xx B, symmetrized.
inline Matrix plugin_error_cov(const SurrogateMoments& m, const CoefficientMatrix& b1)
{
    if (b1.p() != m.p() || b1.q() != m.q()) throw dimension_error("plugin_error_cov: shape mismatch");
    const Matrix& b = b1.values();
    Matrix s = m.s_yy_hat - b.transpose() * (m.s_xx * b);
    return 0.5 * (s + s.transpose());
}

/// Surrogate residual second moment
///   S_yy_hat - S_xy_hat^T B - B^T S_xy_hat + B^T S_xx B,
/// the unbiased estimate of E[(y - B^T x)(y - B^T x)^T] at fixed B. Unlike
/// `plugin_error_cov` it does not inherit the shrinkage of a penalized B.
inline Matrix residual_error_cov(const SurrogateMoments& m, const CoefficientMatrix& b1)
{
    if (b1.p() != m.p() || b1.q() != m.q()) throw dimension_error("residual_error_cov: shape mismatch");
    const Matrix& b = b1.values();
    const Matrix cross = m.s_xy_hat.transpose() * b;
    Matrix s = m.s_yy_hat - cross - cross.transpose() + b.transpose() * (m.s_xx * b);
    return 0.5 * (s + s.transpose());
}

/// Which residual covariance feeds stage II.
enum class ErrorCovForm { residual, plugin };

inline Matrix error_cov(const SurrogateMoments& m, const CoefficientMatrix& b1, ErrorCovForm form)
{
    return form == ErrorCovForm::plugin ? plugin_error_cov(m, b1) : residual_error_cov(m, b1);
}

struct PsdProjectionOptions
{
    double tol = 1e-9;                  // ADMM residual tolerance, relative to max(1, ||S||_max)
    std::size_t max_iter = 20000;
    double rho = 1.0;                   // initial ADMM penalty; rebalanced on the fly
    bool accept_clip_fallback = true;   // return the best iterate instead of throwing at the cap
};

struct PsdProjection
{
    Matrix k;
    double distance = 0.0;       // ||K - S||_max
    double clip_distance = 0.0;  // ||K_clip - S||_max
    std::size_t iterations = 0;
    bool converged = true;
};

namespace detail {

inline Matrix clip_eigen(const Matrix& a, double floor = 0.0)
{
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    const Vector w = es.eigenvalues().cwiseMax(floor);
    Matrix k = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
    return 0.5 * (k + k.transpose());
}

inline double max_abs(const Matrix& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

/// Euclidean projection of the entries of `v` onto the l1 ball of radius `r`.
inline Matrix project_l1_ball(const Matrix& v, double r)
{
    if (v.cwiseAbs().sum() <= r) return v;
    std::vector<double> a(v.data(), v.data() + v.size());
    for (double& x : a) x = std::abs(x);
    std::sort(a.begin(), a.end(), std::greater<>());
    double cum = 0.0, theta = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        cum += a[i];
        const double t = (cum - r) / static_cast<double>(i + 1);
        if (i + 1 == a.size() || a[i + 1] <= t) {
            theta = t;
            break;
        }
    }
    return v.unaryExpr([theta](double x) { return x > theta ? x - theta : (x < -theta ? x + theta : 0.0); });
}

/// prox of tau * ||.||_max (entrywise), by Moreau decomposition.
inline Matrix prox_maxnorm(const Matrix& v, double tau)
{
    return v - project_l1_ball(v, tau);
}

} // namespace detail

/// Nearest PSD matrix to `s` in the elementwise max norm. Solved by ADMM on
///   min ||K - S||_max  s.t.  K = R,  R PSD,
/// returning the PSD block R. The minimizer need not be unique; the result is
/// never farther from `s` than the eigenvalue-clipping projection.
inline PsdProjection project_psd_maxnorm(const Matrix& s_in, const PsdProjectionOptions& opt = {})
{
    if (s_in.rows() != s_in.cols()) throw dimension_error("project_psd_maxnorm: not square");
    const double scale = std::max(1.0, detail::max_abs(s_in));
    if (detail::max_abs(s_in - s_in.transpose()) > 1e-8 * scale)
        throw numerical_error("project_psd_maxnorm: input not symmetric");
    const Matrix s = 0.5 * (s_in + s_in.transpose());

    PsdProjection res;
    Eigen::SelfAdjointEigenSolver<Matrix> es(s, Eigen::EigenvaluesOnly);
    const double lmin = s.size() ? es.eigenvalues().minCoeff() : 0.0;
    if (lmin >= 0.0) {
        res.k = s;
        return res;
    }

    res.k = detail::clip_eigen(s);
    res.clip_distance = detail::max_abs(res.k - s);
    res.distance = res.clip_distance;

    const double dim = static_cast<double>(s.rows());
    const double eps = opt.tol * scale * dim;
    double rho = opt.rho;
    Matrix r = res.k;
    Matrix u = Matrix::Zero(s.rows(), s.cols());
    res.converged = false;
    for (std::size_t it = 1; it <= opt.max_iter; ++it) {
        const Matrix k = s + detail::prox_maxnorm(r - u - s, 1.0 / rho);
        const Matrix r_prev = r;
        r = detail::clip_eigen(k + u);
        u += k - r;
        res.iterations = it;

        const double d = detail::max_abs(r - s);
        if (d < res.distance) {
            res.distance = d;
            res.k = r;
        }
        const double primal = (k - r).norm();
        const double dual = rho * (r - r_prev).norm();
        if (primal <= eps && dual <= eps) {
            res.converged = true;
            break;
        }
        // Residual balancing; the scaled dual variable follows rho.
        if (primal > 10.0 * dual) {
            rho *= 2.0;
            u /= 2.0;
        } else if (dual > 10.0 * primal) {
            rho /= 2.0;
            u *= 2.0;
        }
    }
    if (!res.converged && !opt.accept_clip_fallback)
        throw convergence_error("project_psd_maxnorm: ADMM hit the iteration cap", res.distance, opt.max_iter);
    res.k = (0.5 * (res.k + res.k.transpose())).eval();
    return res;
}

} // namespace missreg
