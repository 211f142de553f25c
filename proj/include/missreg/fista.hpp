#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include <missreg/lasso.hpp>
#include <missreg/surrogate.hpp>
#include <missreg/types.hpp>

namespace missreg {

/// Gradient of tr[(B^T S_xx B / 2 - S_xy^T B) Theta] with respect to B.
inline Matrix smooth_grad(const Matrix& b, const SurrogateMoments& m, const PrecisionMatrix& theta)
{
    return (m.s_xx * b - m.s_xy_hat) * theta.values();
}

/// Smooth part of the stage III objective.
inline double smooth_loss(const Matrix& b, const SurrogateMoments& m, const PrecisionMatrix& theta)
{
    const Matrix bt = b * theta.values();
    return 0.5 * (m.s_xx * b).cwiseProduct(bt).sum() - m.s_xy_hat.cwiseProduct(bt).sum();
}

/// Entrywise soft-thresholding.
inline Matrix prox_l1(const Matrix& v, double threshold)
{
    if (!(threshold >= 0.0)) throw data_error("prox_l1: negative threshold");
    return v.unaryExpr([threshold](double x) { return soft_threshold(x, threshold); });
}

/// One accepted backtracking step, for in-line verification of the Armijo
/// inequality  f(B - t G_t) <= f(B) - t <grad f(B), G_t> + t/2 ||G_t||_F^2.
struct ArmijoRecord
{
    std::size_t iteration;
    double step;
    double lhs;            // f at the new iterate
    double rhs;            // right-hand side of the inequality
    double curvature;      // <D, S_xx D Theta>, D = -t G_t
    double gmap_sq;        // ||G_t||_F^2
};

struct LineSearchConfig
{
    double eta = 0.5;
    double t_init = 0.0;             // <= 0: 1 / (power-iteration estimate of ||S_xx||_2 ||Theta||_2)
    std::size_t power_iters = 5;
    double min_step = 1e-14;
    std::size_t max_iter = 10000;
    double obj_rel_tol = 1e-14;      // stall guard only; convergence is judged by KKT
    double kkt_tol = 1e-7;           // scaled by (1 + lambda)
    bool restart = true;             // reset momentum when the objective increases
    bool strict = true;
    std::function<void(const ArmijoRecord&)> on_accept;
};

namespace detail {

inline double power_norm(const Matrix& a, std::size_t iters)
{
    if (a.rows() == 0) return 0.0;
    Vector v = Vector::Ones(a.rows()) / std::sqrt(static_cast<double>(a.rows()));
    double est = 0.0;
    for (std::size_t i = 0; i < std::max<std::size_t>(iters, 1); ++i) {
        Vector w = a * v;
        est = w.norm();
        if (est == 0.0) return 0.0;
        v = w / est;
    }
    return est;
}

inline double stage3_kkt(const Matrix& b, const Matrix& grad, double penalty)
{
    double r = 0.0;
    for (Index j = 0; j < b.cols(); ++j)
        for (Index i = 0; i < b.rows(); ++i) {
            const double x = b(i, j), g = grad(i, j);
            r = std::max(r, x == 0.0 ? std::max(0.0, std::abs(g) - penalty) : std::abs(g + penalty * (x > 0 ? 1.0 : -1.0)));
        }
    return r;
}

} // namespace detail

/// Composite stage III objective on the same lambda scale as stage I.
inline double stage3_objective(const Matrix& b, const SurrogateMoments& m, const PrecisionMatrix& theta, double lambda_b)
{
    return smooth_loss(b, m, theta) + 0.5 * lambda_b * b.cwiseAbs().sum();
}

/// Stage III: FISTA with backtracking on
///   tr[(B^T S_xx B / 2 - S_xy^T B) Theta] + (lambda_b / 2) ||B||_{1,1}.
/// The penalty scaling matches `fit_stage1`, so Theta = I reproduces stage I.
inline CoefficientMatrix fit_stage3(const SurrogateMoments& m, const PrecisionMatrix& theta, double lambda_b,
                                    const CoefficientMatrix& init, const LineSearchConfig& ls = {},
                                    SolveInfo* info = nullptr)
{
    const Index p = m.p(), q = m.q();
    if (theta.q() != q || init.p() != p || init.q() != q) throw dimension_error("fit_stage3: shape mismatch");
    if (!(lambda_b >= 0.0)) throw data_error("fit_stage3: lambda must be nonnegative");
    if (!init.values().allFinite()) throw data_error("fit_stage3: non-finite initial value");
    if (!(ls.eta > 0.0 && ls.eta < 1.0)) throw data_error("fit_stage3: eta must lie in (0,1)");

    const Matrix& th = theta.values();
    const double penalty = 0.5 * lambda_b;
    double t_init = ls.t_init;
    if (t_init <= 0.0) {
        const double lip = detail::power_norm(m.s_xx, ls.power_iters) * detail::power_norm(th, ls.power_iters);
        t_init = lip > 0.0 ? 1.0 / lip : 1.0;
    }

    auto composite = [&](const Matrix& sxx_b, const Matrix& b) {
        const Matrix bt = b * th;
        return 0.5 * sxx_b.cwiseProduct(bt).sum() - m.s_xy_hat.cwiseProduct(bt).sum() + penalty * b.cwiseAbs().sum();
    };

    Matrix b_curr = init.values();
    Matrix b_prev = b_curr;
    Matrix sb_curr = m.s_xx * b_curr;
    Matrix sb_prev = sb_curr;
    double f_curr = composite(sb_curr, b_curr);

    std::size_t k = 2;
    std::size_t it = 0;
    double kkt = detail::stage3_kkt(b_curr, (sb_curr - m.s_xy_hat) * th, penalty);
    bool done = kkt <= ls.kkt_tol * (1.0 + lambda_b);

    while (!done && it < ls.max_iter) {
        ++it;
        // Momentum (k-2)/(k+1), clamped at zero for the first two iterations.
        const double mom = k > 2 ? static_cast<double>(k - 2) / static_cast<double>(k + 1) : 0.0;
        const Matrix v = b_curr + mom * (b_curr - b_prev);
        const Matrix sv = sb_curr + mom * (sb_curr - sb_prev);
        const Matrix gv = (sv - m.s_xy_hat) * th;
        const Matrix vt = v * th;
        const double fv = 0.5 * sv.cwiseProduct(vt).sum() - m.s_xy_hat.cwiseProduct(vt).sum();

        double t = t_init;
        Matrix bn, sbn;
        for (;;) {
            bn = prox_l1(v - t * gv, t * penalty);
            const Matrix d = bn - v;
            const Matrix sd = m.s_xx * d;
            // f is quadratic, so f(V + D) - f(V) - <grad, D> = <S_xx D, D Theta> / 2 exactly.
            // The inequality is tested in that form to avoid cancellation.
            const double curv = sd.cwiseProduct(d * th).sum();
            const double dsq = d.squaredNorm();
            if (t * curv <= dsq) {
                sbn = sv + sd;
                if (ls.on_accept) {
                    const double gdot = gv.cwiseProduct(d).sum();
                    const double lhs = fv + gdot + 0.5 * curv;
                    // -t <grad, G> = <grad, D>;  t/2 ||G||^2 = ||D||^2 / (2t)
                    const double rhs = fv + gdot + 0.5 * dsq / t;
                    ls.on_accept(ArmijoRecord{it, t, lhs, rhs, curv, dsq / (t * t)});
                }
                break;
            }
            t *= ls.eta;
            if (t < ls.min_step) {
                if (info) *info = SolveInfo{it, kkt, f_curr, false};
                throw numerical_error("fit_stage3: step size underflow");
            }
        }
        const double f_new = composite(sbn, bn);
        if (ls.restart && f_new > f_curr && mom > 0.0) {
            // Restart: drop momentum and retry from the current iterate.
            b_prev = b_curr;
            sb_prev = sb_curr;
            k = 2;
            continue;
        }
        const double rel = std::abs(f_curr - f_new) / std::max(1.0, std::abs(f_curr));
        b_prev = std::move(b_curr);
        sb_prev = std::move(sb_curr);
        b_curr = std::move(bn);
        sb_curr = std::move(sbn);
        f_curr = f_new;
        ++k;
        if (it % 64 == 0) sb_curr = m.s_xx * b_curr; // shed drift from the incremental update

        kkt = detail::stage3_kkt(b_curr, (sb_curr - m.s_xy_hat) * th, penalty);
        if (kkt <= ls.kkt_tol * (1.0 + lambda_b) || (rel < ls.obj_rel_tol && mom == 0.0)) done = true;
        else if (rel < ls.obj_rel_tol) k = 2; // stalled under momentum: confirm with a plain step
    }
    if (info) *info = SolveInfo{it, kkt, f_curr, done};
    if (!done && ls.strict) throw convergence_error("fit_stage3: max_iter reached", kkt, it);
    return CoefficientMatrix(std::move(b_curr));
}

} // namespace missreg
