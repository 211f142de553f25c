#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

namespace missreg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

// Error hierarchy. Anything derived from `error` is reported by the CLI as a
// machine-readable JSON object; `numerical_error` maps to exit code 1.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

class data_error : public error
{
public:
    using error::error;
    const char* kind() const noexcept override { return "data_error"; }
};

class dimension_error : public error
{
public:
    using error::error;
    const char* kind() const noexcept override { return "dimension_error"; }
};

class numerical_error : public error
{
public:
    using error::error;
    const char* kind() const noexcept override { return "numerical_error"; }
};

// Solver stopped without meeting its tolerance. Carries the final residual
// so callers can decide whether to accept the last iterate.
class convergence_error : public numerical_error
{
public:
    convergence_error(const std::string& what, double residual, std::size_t iters)
        : numerical_error(what + " (residual " + std::to_string(residual) +
                          " after " + std::to_string(iters) + " iterations)"),
          residual_(residual), iters_(iters)
    {}
    const char* kind() const noexcept override { return "convergence_error"; }
    double residual() const noexcept { return residual_; }
    std::size_t iterations() const noexcept { return iters_; }

private:
    double residual_;
    std::size_t iters_;
};

/// Standardized n x p design. Columns are centered and scaled so that
/// (1/n) sum_i x_ij^2 = 1; `column_scales` holds the divisors used.
class DesignMatrix
{
public:
    DesignMatrix() = default;

    /// Takes already-standardized values; scales default to 1.
    explicit DesignMatrix(Matrix values, Vector column_scales = Vector())
        : values_(std::move(values)), scales_(std::move(column_scales))
    {
        if (scales_.size() == 0) scales_ = Vector::Ones(values_.cols());
        if (scales_.size() != values_.cols())
            throw dimension_error("DesignMatrix: scale vector length != p");
        if (!values_.allFinite())
            throw data_error("DesignMatrix: non-finite entry");
    }

    /// Centers each column and rescales it to unit mean square.
    static DesignMatrix standardize(const Matrix& raw)
    {
        if (!raw.allFinite()) throw data_error("design matrix has non-finite entries");
        const auto n = raw.rows();
        if (n == 0) throw data_error("design matrix has no rows");
        Matrix v = raw.rowwise() - raw.colwise().mean();
        Vector scales(v.cols());
        for (Index j = 0; j < v.cols(); ++j) {
            const double ms = v.col(j).squaredNorm() / static_cast<double>(n);
            if (!(ms > 0.0)) throw data_error("design column " + std::to_string(j) + " is constant");
            scales[j] = std::sqrt(ms);
            v.col(j) /= scales[j];
        }
        return DesignMatrix(std::move(v), std::move(scales));
    }

    const Matrix& values() const noexcept { return values_; }
    const Vector& column_scales() const noexcept { return scales_; }
    Index n() const noexcept { return values_.rows(); }
    Index p() const noexcept { return values_.cols(); }

    /// Rows subset, keeping the original scales.
    DesignMatrix rows(const std::vector<Index>& idx) const
    {
        Matrix sub(static_cast<Index>(idx.size()), p());
        for (std::size_t r = 0; r < idx.size(); ++r) sub.row(static_cast<Index>(r)) = values_.row(idx[r]);
        return DesignMatrix(std::move(sub), scales_);
    }

private:
    Matrix values_;
    Vector scales_;
};

/// Response matrix with missing entries. Unobserved cells hold an exact 0 so
/// that dense products reproduce Z = Y (.) W.
class MaskedResponse
{
public:
    MaskedResponse() = default;

    MaskedResponse(Matrix values, BoolMatrix observed, Vector column_centers = Vector(),
                   Vector column_scales = Vector())
        : values_(std::move(values)), observed_(std::move(observed)), centers_(std::move(column_centers)),
          scales_(std::move(column_scales))
    {
        if (values_.rows() != observed_.rows() || values_.cols() != observed_.cols())
            throw dimension_error("MaskedResponse: values and mask shapes differ");
        if (centers_.size() == 0) centers_ = Vector::Zero(values_.cols());
        if (scales_.size() == 0) scales_ = Vector::Ones(values_.cols());
        if (centers_.size() != values_.cols() || scales_.size() != values_.cols())
            throw dimension_error("MaskedResponse: center or scale vector length != q");
        const auto n = values_.rows();
        rho_hat_.resize(values_.cols());
        for (Index j = 0; j < values_.cols(); ++j) {
            Index missing = 0;
            for (Index i = 0; i < n; ++i) {
                if (!observed_(i, j)) {
                    ++missing;
                    values_(i, j) = 0.0;
                } else if (!std::isfinite(values_(i, j))) {
                    throw data_error("MaskedResponse: non-finite observed entry");
                }
            }
            if (missing == n)
                throw data_error("response column " + std::to_string(j) + " has no observed entries");
            rho_hat_[j] = static_cast<double>(missing) / static_cast<double>(n);
        }
    }

    /// Fully observed response.
    static MaskedResponse complete(Matrix values)
    {
        BoolMatrix obs = BoolMatrix::Constant(values.rows(), values.cols(), true);
        return MaskedResponse(std::move(values), std::move(obs));
    }

    /// Subtracts the mean of the observed entries from each column.
    static MaskedResponse centered(Matrix values, BoolMatrix observed)
    {
        Vector centers = Vector::Zero(values.cols());
        for (Index j = 0; j < values.cols(); ++j) {
            double s = 0.0;
            Index c = 0;
            for (Index i = 0; i < values.rows(); ++i)
                if (observed(i, j)) { s += values(i, j); ++c; }
            if (c == 0) throw data_error("response column " + std::to_string(j) + " has no observed entries");
            centers[j] = s / static_cast<double>(c);
            for (Index i = 0; i < values.rows(); ++i)
                if (observed(i, j)) values(i, j) -= centers[j];
        }
        return MaskedResponse(std::move(values), std::move(observed), std::move(centers));
    }

    /// Divides each column by the root mean square of its observed entries.
    /// The accumulated scale is kept in `column_scales`.
    MaskedResponse standardized() const
    {
        Matrix v = values_;
        Vector sc = scales_;
        for (Index j = 0; j < q(); ++j) {
            double ss = 0.0;
            Index c = 0;
            for (Index i = 0; i < n(); ++i)
                if (observed_(i, j)) { ss += v(i, j) * v(i, j); ++c; }
            const double rms = std::sqrt(ss / static_cast<double>(c));
            if (!(rms > 0.0)) throw data_error("response column " + std::to_string(j) + " is constant");
            v.col(j) /= rms;
            sc[j] *= rms;
        }
        return MaskedResponse(std::move(v), observed_, centers_, std::move(sc));
    }

    const Matrix& values() const noexcept { return values_; }
    const BoolMatrix& observed() const noexcept { return observed_; }
    const Vector& rho_hat() const noexcept { return rho_hat_; }
    const Vector& column_centers() const noexcept { return centers_; }
    const Vector& column_scales() const noexcept { return scales_; }
    Index n() const noexcept { return values_.rows(); }
    Index q() const noexcept { return values_.cols(); }

    MaskedResponse rows(const std::vector<Index>& idx) const
    {
        Matrix v(static_cast<Index>(idx.size()), q());
        BoolMatrix o(static_cast<Index>(idx.size()), q());
        for (std::size_t r = 0; r < idx.size(); ++r) {
            v.row(static_cast<Index>(r)) = values_.row(idx[r]);
            o.row(static_cast<Index>(r)) = observed_.row(idx[r]);
        }
        return MaskedResponse(std::move(v), std::move(o), centers_, scales_);
    }

private:
    Matrix values_;
    BoolMatrix observed_;
    Vector rho_hat_;
    Vector centers_;
    Vector scales_;
};

/// p x q regression coefficients. The support is derived from exact zeros.
class CoefficientMatrix
{
public:
    CoefficientMatrix() = default;
    explicit CoefficientMatrix(Matrix values) : values_(std::move(values)) {}
    static CoefficientMatrix zero(Index p, Index q) { return CoefficientMatrix(Matrix::Zero(p, q)); }

    const Matrix& values() const noexcept { return values_; }
    Matrix& values() noexcept { return values_; }
    Index p() const noexcept { return values_.rows(); }
    Index q() const noexcept { return values_.cols(); }

    std::vector<std::pair<Index, Index>> support() const
    {
        std::vector<std::pair<Index, Index>> s;
        for (Index l = 0; l < values_.cols(); ++l)
            for (Index k = 0; k < values_.rows(); ++k)
                if (values_(k, l) != 0.0) s.emplace_back(k, l);
        return s;
    }
    Index nonzeros() const noexcept { return (values_.array() != 0.0).count(); }

private:
    Matrix values_;
};

/// Symmetric positive-definite q x q precision matrix.
class PrecisionMatrix
{
public:
    PrecisionMatrix() = default;
    explicit PrecisionMatrix(Matrix values) : values_(std::move(values))
    {
        if (values_.rows() != values_.cols()) throw dimension_error("PrecisionMatrix: not square");
        const double asym = (values_ - values_.transpose()).cwiseAbs().maxCoeff();
        if (asym > 1e-10 * std::max(1.0, values_.cwiseAbs().maxCoeff()))
            throw numerical_error("PrecisionMatrix: not symmetric");
        Eigen::LLT<Matrix> llt(values_);
        if (llt.info() != Eigen::Success) throw numerical_error("PrecisionMatrix: not positive definite");
        logdet_ = 2.0 * llt.matrixLLT().diagonal().array().log().sum();
    }
    static PrecisionMatrix identity(Index q) { return PrecisionMatrix(Matrix::Identity(q, q)); }

    const Matrix& values() const noexcept { return values_; }
    Index q() const noexcept { return values_.rows(); }
    double log_det() const noexcept { return logdet_; }

    /// Number of nonzero entries strictly above the diagonal.
    Index edges() const noexcept
    {
        Index e = 0;
        for (Index j = 1; j < values_.cols(); ++j)
            for (Index i = 0; i < j; ++i)
                if (values_(i, j) != 0.0) ++e;
        return e;
    }

private:
    Matrix values_;
    double logdet_ = 0.0;
};

} // namespace missreg
