#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcdct {

/// Dense double-precision matrix with row-major storage.
class RealMatrix {
public:
    RealMatrix() = default;

    RealMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static RealMatrix identity(std::size_t n) {
        RealMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const double* row_data(std::size_t i) const { return data_.data() + i * cols_; }
    double* row_data(std::size_t i) { return data_.data() + i * cols_; }

    const std::vector<double>& data() const { return data_; }

    RealMatrix transpose() const {
        RealMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product: dimension mismatch " +
                                        std::to_string(a.cols_) + " vs " + std::to_string(b.rows_));
        RealMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) continue;
                const double* brow = b.row_data(k);
                double* crow = c.row_data(i);
                for (std::size_t j = 0; j < b.cols_; ++j) crow[j] += aik * brow[j];
            }
        }
        return c;
    }

    friend RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference: dimension mismatch");
        RealMatrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
        return c;
    }

    RealMatrix& operator*=(double s) {
        for (double& v : data_) v *= s;
        return *this;
    }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

inline double frobenius_norm_sq(const RealMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
    return s;
}

inline double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

inline double inf_norm(const RealMatrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

/// Inverse by LU with partial pivoting. Rejects singular or badly conditioned
/// input (infinity-norm condition estimate above 1e12), naming the estimate.
inline RealMatrix inverse(const RealMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    RealMatrix lu = m;
    RealMatrix inv = RealMatrix::identity(n);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(lu(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(lu(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (best < std::numeric_limits<double>::min() * n)
            throw std::domain_error("inverse: singular matrix (zero pivot at column " +
                                    std::to_string(col) + ")");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(lu(piv, j), lu(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        const double d = lu(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = lu(r, col) / d;
            if (f == 0.0) continue;
            lu(r, col) = 0.0;
            for (std::size_t j = col + 1; j < n; ++j) lu(r, j) -= f * lu(col, j);
            for (std::size_t j = 0; j < n; ++j) inv(r, j) -= f * inv(col, j);
        }
    }
    // back substitution
    for (std::size_t col = n; col-- > 0;) {
        const double d = lu(col, col);
        for (std::size_t j = 0; j < n; ++j) inv(col, j) /= d;
        for (std::size_t r = 0; r < col; ++r) {
            const double f = lu(r, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) inv(r, j) -= f * inv(col, j);
        }
    }

    const double cond = inf_norm(m) * inf_norm(inv);
    if (!(cond < 1e12))
        throw std::domain_error("inverse: ill-conditioned matrix (condition estimate " +
                                std::to_string(cond) + " exceeds 1e12)");
    return inv;
}

}  // namespace lcdct
