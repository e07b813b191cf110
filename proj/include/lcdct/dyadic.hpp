#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcdct/matrix.hpp"

namespace lcdct {

/// Exact dyadic rational m * 2^e, kept canonical: m odd, or m == 0 with e == 0.
/// All low-complexity transform entries live here so that factor composition
/// and arithmetic-cost accounting never depend on floating-point rounding.
class Dyadic {
public:
    constexpr Dyadic() = default;

    Dyadic(std::int64_t mantissa, int exponent = 0) : m_(mantissa), e_(exponent) {
        canonicalize();
    }

    /// value 1/2^k
    static Dyadic half_power(int k) { return Dyadic(1, -k); }

    std::int64_t mantissa() const { return m_; }
    int exponent() const { return e_; }
    bool is_zero() const { return m_ == 0; }

    double to_double() const { return std::ldexp(static_cast<double>(m_), e_); }

    Dyadic operator-() const {
        Dyadic r;
        r.m_ = -m_;
        r.e_ = e_;
        return r;
    }

    Dyadic abs() const { return m_ < 0 ? -*this : *this; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        if (a.m_ == 0) return b;
        if (b.m_ == 0) return a;
        const int e = a.e_ < b.e_ ? a.e_ : b.e_;
        const __int128 s = shifted(a.m_, a.e_ - e) + shifted(b.m_, b.e_ - e);
        return from_wide(s, e);
    }

    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        const __int128 p = static_cast<__int128>(a.m_) * b.m_;
        return from_wide(p, a.e_ + b.e_);
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.m_ == b.m_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        return (b - a).m_ > 0;
    }

private:
    std::int64_t m_ = 0;
    int e_ = 0;

    void canonicalize() {
        if (m_ == 0) {
            e_ = 0;
            return;
        }
        while ((m_ & 1) == 0) {
            m_ >>= 1;
            ++e_;
        }
    }

    static __int128 shifted(std::int64_t m, int k) {
        if (k >= 127) throw std::overflow_error("dyadic: exponent spread too large");
        return static_cast<__int128>(m) << k;
    }

    static Dyadic from_wide(__int128 v, int e) {
        if (v == 0) return Dyadic();
        while ((v & 1) == 0) {
            v >>= 1;
            ++e;
        }
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("dyadic: mantissa exceeds 64 bits");
        Dyadic r;
        r.m_ = static_cast<std::int64_t>(v);
        r.e_ = e;
        return r;
    }
};

/// Dense matrix of exact dyadic rationals.
class DyadicMatrix {
public:
    DyadicMatrix() = default;

    DyadicMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DyadicMatrix identity(std::size_t n) {
        DyadicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Dyadic(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Dyadic& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Dyadic& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend DyadicMatrix operator*(const DyadicMatrix& a, const DyadicMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("dyadic product: dimension mismatch " +
                                        std::to_string(a.cols_) + " vs " + std::to_string(b.rows_));
        DyadicMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Dyadic& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Dyadic& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    c(i, j) = c(i, j) + aik * bkj;
                }
            }
        return c;
    }

    friend bool operator==(const DyadicMatrix& a, const DyadicMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    DyadicMatrix transpose() const {
        DyadicMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RealMatrix to_real() const {
        RealMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).to_double();
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Dyadic> data_;
};

/// Ones on the anti-diagonal.
inline DyadicMatrix counter_identity(std::size_t n) {
    if (n < 1) throw std::invalid_argument("counter_identity: size must be at least 1");
    DyadicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = Dyadic(1);
    return m;
}

/// Sum/difference stage [[I, J],[-J, I]] in half-size blocks, J the counter-identity.
inline DyadicMatrix butterfly(std::size_t n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("butterfly: size must be even and >= 2");
    const std::size_t h = n / 2;
    DyadicMatrix m(n, n);
    for (std::size_t i = 0; i < h; ++i) {
        m(i, i) = Dyadic(1);
        m(i, n - 1 - i) = Dyadic(1);
        m(h + i, h - 1 - i) = Dyadic(-1);
        m(h + i, h + i) = Dyadic(1);
    }
    return m;
}

/// Direct sum of square blocks; an empty list yields the 0x0 matrix.
inline DyadicMatrix block_diag(const std::vector<DyadicMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) throw std::invalid_argument("block_diag: block not square");
        n += b.rows();
    }
    DyadicMatrix m(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

/// Permutation matrix from zero-indexed cycles. A cycle (a b c) maps a -> b,
/// b -> c, c -> a, realized with the one for source index j placed in row
/// map(j): P[map(j)][j] = 1. This orientation was fixed by checking the
/// composed catalog transforms against their published merit figures.
inline DyadicMatrix permutation_from_cycles(const std::vector<std::vector<int>>& cycles,
                                            std::size_t size) {
    std::vector<int> map(size);
    for (std::size_t i = 0; i < size; ++i) map[i] = static_cast<int>(i);
    std::vector<bool> seen(size, false);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int a = cyc[i];
            const int b = cyc[(i + 1) % cyc.size()];
            if (a < 0 || b < 0 || a >= static_cast<int>(size) || b >= static_cast<int>(size))
                throw std::invalid_argument("permutation_from_cycles: index out of range");
            if (seen[a])
                throw std::invalid_argument("permutation_from_cycles: duplicate index " +
                                            std::to_string(a));
            seen[a] = true;
            map[a] = b;
        }
    }
    DyadicMatrix p(size, size);
    for (std::size_t j = 0; j < size; ++j) p(map[j], j) = Dyadic(1);
    return p;
}

}  // namespace lcdct
