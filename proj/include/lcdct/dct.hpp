#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lcdct/dyadic.hpp"
#include "lcdct/matrix.hpp"

namespace lcdct {

/// Exact N-point DCT-II matrix: entry (i,j) = sqrt(2/N) * u_i * cos(i(2j+1)pi/2N)
/// with u_0 = 1/sqrt(2) and u_i = 1 otherwise. Row 0 is constant 1/sqrt(N).
inline RealMatrix exact_dct(std::size_t n) {
    if (n < 2) throw std::invalid_argument("exact_dct: blocklength must be at least 2");
    RealMatrix c(n, n);
    const double scale = std::sqrt(2.0 / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const double u = (i == 0) ? 1.0 / std::sqrt(2.0) : 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double arg = static_cast<double>(i) * (2.0 * static_cast<double>(j) + 1.0) *
                               std::numbers::pi / (2.0 * static_cast<double>(n));
            c(i, j) = scale * u * std::cos(arg);
        }
    }
    return c;
}

/// A low-complexity kernel T together with its row-normalizing diagonal S and
/// the resulting unit-row transform C_hat = S * T.
struct Approximation {
    DyadicMatrix kernel;   // T
    RealMatrix scaling;    // S, diagonal with positive entries
    RealMatrix c_hat;      // S * T, unit Euclidean row norms
    std::string label;
};

/// Build the approximation associated with a low-complexity kernel:
/// S = sqrt(diag(T T^t))^-1, C_hat = S T. Rejects kernels with a zero row.
inline Approximation orthogonalize(const DyadicMatrix& t, std::string label = "") {
    const std::size_t n = t.rows();
    RealMatrix tr = t.to_real();
    RealMatrix s(n, n);
    RealMatrix c_hat(n, t.cols());
    for (std::size_t i = 0; i < n; ++i) {
        double sq = 0.0;
        for (std::size_t j = 0; j < t.cols(); ++j) sq += tr(i, j) * tr(i, j);
        if (sq == 0.0)
            throw std::invalid_argument("orthogonalize: zero row " + std::to_string(i) +
                                        " has no normalization");
        const double d = 1.0 / std::sqrt(sq);
        s(i, i) = d;
        for (std::size_t j = 0; j < t.cols(); ++j) c_hat(i, j) = d * tr(i, j);
    }
    return Approximation{t, std::move(s), std::move(c_hat), std::move(label)};
}

/// Deviation from diagonality of a square matrix, as the share of squared
/// Frobenius mass off the diagonal: 1 - ||diag(A)||_F^2 / ||A||_F^2.
/// Invoked on Gram matrices C_hat * C_hat^t it measures deviation from
/// orthogonality; it is 0 exactly when A is diagonal.
inline double deviation_from_orthogonality(const RealMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("deviation_from_orthogonality: matrix not square");
    double diag = 0.0, all = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double v = a(i, j) * a(i, j);
            all += v;
            if (i == j) diag += v;
        }
    if (all == 0.0)
        throw std::invalid_argument("deviation_from_orthogonality: zero matrix");
    return 1.0 - diag / all;
}

/// Entry-wise signum as an exact dyadic matrix.
inline DyadicMatrix signum(const RealMatrix& m) {
    DyadicMatrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const double v = m(i, j);
            s(i, j) = Dyadic(v > 0.0 ? 1 : (v < 0.0 ? -1 : 0));
        }
    return s;
}

/// The signed-DCT baseline: normalized signum of the exact DCT.
inline Approximation sdct(std::size_t n) {
    return orthogonalize(signum(exact_dct(n)), "SDCT" + std::to_string(n));
}

}  // namespace lcdct
