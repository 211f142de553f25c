#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <missreg/types.hpp>

namespace missreg {

struct CsvOptions
{
    bool header = false;
    char delimiter = ',';
    std::string na_token = "NA";
};

/// Raw table read from CSV; `present(i,j)` is false where the cell held the NA token.
struct CsvTable
{
    Matrix values;
    BoolMatrix present;
    std::vector<std::string> header;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view line, char delim)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(delim, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace detail

inline CsvTable read_csv(const std::filesystem::path& path, const CsvOptions& opt = {})
{
    std::ifstream in(path);
    if (!in) throw data_error("cannot open " + path.string());

    CsvTable table;
    std::vector<std::vector<double>> rows;
    std::vector<std::vector<bool>> present;
    std::string line;
    std::size_t lineno = 0;
    bool header_pending = opt.header;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        const auto cells = detail::split(line, opt.delimiter);
        if (header_pending) {
            for (auto c : cells) table.header.emplace_back(c);
            header_pending = false;
            continue;
        }
        if (width == 0) width = cells.size();
        if (cells.size() != width)
            throw data_error(path.string() + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(width) + " fields, got " + std::to_string(cells.size()));
        std::vector<double> r(width);
        std::vector<bool> pr(width, true);
        for (std::size_t j = 0; j < width; ++j) {
            if (cells[j] == opt.na_token) {
                r[j] = 0.0;
                pr[j] = false;
                continue;
            }
            std::string cell(cells[j]);
            std::size_t used = 0;
            try {
                r[j] = std::stod(cell, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != cell.size() || cell.empty())
                throw data_error(path.string() + ":" + std::to_string(lineno) + ": non-numeric cell '" + cell + "'");
        }
        rows.push_back(std::move(r));
        present.push_back(std::move(pr));
    }
    const auto n = static_cast<Index>(rows.size());
    table.values.resize(n, static_cast<Index>(width));
    table.present.resize(n, static_cast<Index>(width));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < static_cast<Index>(width); ++j) {
            table.values(i, j) = rows[i][j];
            table.present(i, j) = present[i][j];
        }
    return table;
}

/// Writes a matrix row-major with a header row `prefix0,prefix1,...`.
/// Cells where `present` is false are written as the NA token.
inline void write_csv(const std::filesystem::path& path, const Matrix& m, const std::string& prefix = "V",
                      const BoolMatrix* present = nullptr, const std::string& na_token = "NA")
{
    std::ofstream out(path);
    if (!out) throw data_error("cannot write " + path.string());
    for (Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << prefix << j;
    out << '\n';
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            if (present && !(*present)(i, j)) out << na_token;
            else out << detail::format_double(m(i, j));
        }
        out << '\n';
    }
}

/// Loads X (complete) and Z (may contain NA cells). X is centered and
/// column-normalized; Z is centered by the mean of its observed entries.
inline std::pair<DesignMatrix, MaskedResponse> load_dataset(const std::filesystem::path& x_path,
                                                            const std::filesystem::path& z_path,
                                                            const CsvOptions& opt = {})
{
    auto x = read_csv(x_path, opt);
    auto z = read_csv(z_path, opt);
    if (x.values.rows() != z.values.rows())
        throw dimension_error("row counts differ: X has " + std::to_string(x.values.rows()) + ", Z has " +
                              std::to_string(z.values.rows()));
    if (!x.present.all()) throw data_error("X contains missing cells");
    return {DesignMatrix::standardize(x.values), MaskedResponse::centered(std::move(z.values), std::move(z.present))};
}

/// E[W W^T] for independent Bernoulli(1 - rho_j) masks:
/// (1-rho_i)(1-rho_j) off the diagonal, (1-rho_i) on it.
inline Matrix second_moment_mask(const Vector& rho_hat)
{
    const auto q = rho_hat.size();
    for (Index j = 0; j < q; ++j)
        if (!(rho_hat[j] >= 0.0 && rho_hat[j] < 1.0))
            throw data_error("missing rate of column " + std::to_string(j) + " must lie in [0,1)");
    const Vector mu = Vector::Ones(q) - rho_hat;
    Matrix m = mu * mu.transpose();
    m.diagonal() = mu;
    return m;
}

} // namespace missreg
