#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <missreg/surrogate.hpp>
#include <missreg/types.hpp>

namespace missreg {

/// Covariance-form lasso:  min_b  b^T G b / 2 - c^T b + lambda ||b||_1.
struct LassoProblem
{
    Eigen::Ref<const Matrix> gram;
    Eigen::Ref<const Vector> linear;
    double lambda = 0.0;
};

struct LassoOptions
{
    double tol = 1e-7;        // max coefficient change per sweep
    double kkt_tol = 1e-5;    // subgradient residual
    std::size_t max_iter = 100000;
    bool strict = true;       // throw on max_iter instead of returning the last iterate
};

/// Iteration diagnostics shared by all stage solvers.
struct SolveInfo
{
    std::size_t iterations = 0;
    double kkt = 0.0;
    double objective = 0.0;
    bool converged = true;
};

inline double soft_threshold(double v, double t)
{
    if (v > t) return v - t;
    if (v < -t) return v + t;
    return 0.0;
}

inline double lasso_objective(const LassoProblem& prob, const Vector& beta)
{
    return 0.5 * beta.dot(prob.gram * beta) - prob.linear.dot(beta) + prob.lambda * beta.lpNorm<1>();
}

/// Largest subgradient-optimality violation given grad = G b - c.
inline double lasso_kkt(const Vector& beta, const Vector& grad, double lambda)
{
    double r = 0.0;
    for (Index k = 0; k < beta.size(); ++k) {
        const double v = beta[k] == 0.0 ? std::max(0.0, std::abs(grad[k]) - lambda)
                                         : std::abs(grad[k] + lambda * (beta[k] > 0 ? 1.0 : -1.0));
        r = std::max(r, v);
    }
    return r;
}

/// Cyclic coordinate descent on the Gram form. After each full pass the
/// solver iterates on the active set until it settles, then re-checks all
/// coordinates. `objective_trace`, when given, receives the objective after
/// every sweep.
inline Vector solve_column(const LassoProblem& prob, const Vector& init, const LassoOptions& opt = {},
                           SolveInfo* info = nullptr, std::vector<double>* objective_trace = nullptr)
{
    const Index p = prob.gram.rows();
    if (prob.gram.cols() != p || prob.linear.size() != p || init.size() != p)
        throw dimension_error("solve_column: dimension mismatch");
    if (!(prob.lambda >= 0.0)) throw data_error("solve_column: lambda must be nonnegative");
    if (!init.allFinite()) throw data_error("solve_column: non-finite initial value");

    Vector beta = init;
    Vector grad = prob.gram * beta - prob.linear;
    std::vector<char> active(static_cast<std::size_t>(p), 0);

    auto sweep = [&](bool active_only) {
        double max_change = 0.0;
        for (Index k = 0; k < p; ++k) {
            if (active_only && !active[static_cast<std::size_t>(k)]) continue;
            const double gkk = prob.gram(k, k);
            const double old = beta[k];
            double upd = 0.0;
            if (gkk > 0.0) upd = soft_threshold(gkk * old - grad[k], prob.lambda) / gkk;
            const double delta = upd - old;
            if (delta != 0.0) {
                beta[k] = upd;
                grad += delta * prob.gram.col(k);
                max_change = std::max(max_change, std::abs(delta));
            }
            if (upd != 0.0) active[static_cast<std::size_t>(k)] = 1;
        }
        if (objective_trace) objective_trace->push_back(lasso_objective(prob, beta));
        return max_change;
    };

    std::size_t it = 0;
    double kkt = 0.0;
    bool done = false;
    while (it < opt.max_iter) {
        double change = sweep(false);
        ++it;
        while (change >= opt.tol && it < opt.max_iter) {
            change = sweep(true);
            ++it;
        }
        // Refresh the gradient to shed accumulated rounding before the check.
        grad = prob.gram * beta - prob.linear;
        kkt = lasso_kkt(beta, grad, prob.lambda);
        if (change < opt.tol && kkt < opt.kkt_tol) {
            // One more full pass must leave the solution in place.
            const double final_change = sweep(false);
            ++it;
            if (final_change < opt.tol) {
                grad = prob.gram * beta - prob.linear;
                kkt = lasso_kkt(beta, grad, prob.lambda);
                if (kkt < opt.kkt_tol) {
                    done = true;
                    break;
                }
            }
        }
    }
    if (info) {
        info->iterations = it;
        info->kkt = kkt;
        info->objective = lasso_objective(prob, beta);
        info->converged = done;
    }
    if (!done && opt.strict) throw convergence_error("solve_column: max_iter exceeded", kkt, it);
    return beta;
}

/// Stage I: one lasso per response column with Theta = I.
///
/// `lambda` is on the scale where the null model appears at ||2 S_xy||_max,
/// i.e. each column minimizes b^T S_xx b / 2 - s_l^T b + (lambda / 2) ||b||_1.
inline CoefficientMatrix fit_stage1(const SurrogateMoments& m, const Vector& lambdas,
                                    const std::optional<CoefficientMatrix>& warm = std::nullopt,
                                    const LassoOptions& opt = {}, SolveInfo* info = nullptr)
{
    const Index p = m.p(), q = m.q();
    if (lambdas.size() != q) throw dimension_error("fit_stage1: need one lambda per column");
    if (warm && (warm->p() != p || warm->q() != q)) throw dimension_error("fit_stage1: warm start shape");
    Matrix b(p, q);
    SolveInfo total;
    total.objective = 0.0;
    for (Index l = 0; l < q; ++l) {
        const LassoProblem prob{m.s_xx, m.s_xy_hat.col(l), 0.5 * lambdas[l]};
        const Vector init = warm ? Vector(warm->values().col(l)) : Vector::Zero(p);
        SolveInfo ci;
        try {
            b.col(l) = solve_column(prob, init, opt, &ci);
        } catch (const convergence_error& e) {
            throw convergence_error("fit_stage1: column " + std::to_string(l) + ": " + e.what(), e.residual(),
                                    e.iterations());
        }
        total.iterations = std::max(total.iterations, ci.iterations);
        total.kkt = std::max(total.kkt, ci.kkt);
        total.objective += ci.objective;
        total.converged = total.converged && ci.converged;
    }
    if (info) *info = total;
    return CoefficientMatrix(std::move(b));
}

inline CoefficientMatrix fit_stage1(const SurrogateMoments& m, double lambda,
                                    const std::optional<CoefficientMatrix>& warm = std::nullopt,
                                    const LassoOptions& opt = {}, SolveInfo* info = nullptr)
{
    if (!(lambda >= 0.0)) throw data_error("fit_stage1: lambda must be nonnegative");
    return fit_stage1(m, Vector::Constant(m.q(), lambda), warm, opt, info);
}

} // namespace missreg
