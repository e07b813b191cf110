#pragma once

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lcdct/dct.hpp"
#include "lcdct/matrix.hpp"

namespace lcdct {

/// Covariance matrix of a unit-variance first-order Markov process:
/// R[i][j] = rho^|i-j|.
inline RealMatrix markov_covariance(std::size_t n, double rho) {
    if (!(std::abs(rho) < 1.0))
        throw std::invalid_argument("markov_covariance: |rho| must be below 1");
    RealMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r(i, j) = std::pow(rho, std::abs(static_cast<double>(i) - static_cast<double>(j)));
    return r;
}

struct MarkovModel {
    std::size_t n;
    double rho;
    RealMatrix covariance;

    MarkovModel(std::size_t n_, double rho_)
        : n(n_), rho(rho_), covariance(markov_covariance(n_, rho_)) {}
};

/// Total energy error: pi * ||C - C_hat||_F^2.
inline double total_energy_error(const RealMatrix& c, const RealMatrix& c_hat) {
    return std::numbers::pi * frobenius_norm_sq(c - c_hat);
}

/// Mean square error under the Markov model:
/// (1/N) * trace[(C - C_hat) R (C - C_hat)^t].
inline double mse(const RealMatrix& c, const RealMatrix& c_hat, const MarkovModel& model) {
    if (c.rows() != model.n || c_hat.rows() != model.n)
        throw std::invalid_argument("mse: dimensions do not match the model");
    const RealMatrix e = c - c_hat;
    const RealMatrix er = e * model.covariance;
    double tr = 0.0;
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j) tr += er(i, j) * e(i, j);
    return tr / static_cast<double>(model.n);
}

/// Unified coding gain in dB. Per transform-domain channel k:
/// A_k = h_k R h_k^t with h_k the analysis row k of C_hat, and
/// B_k = ||row k of C_hat^-1||^2 for the synthesis side.
/// Returns 10 log10 prod (A_k B_k)^(-1/N). Matches the classical form when
/// C_hat is orthogonal with unit rows (all B_k = 1).
inline double coding_gain(const RealMatrix& c_hat, const MarkovModel& model) {
    if (c_hat.rows() != model.n)
        throw std::invalid_argument("coding_gain: dimensions do not match the model");
    const std::size_t n = model.n;
    const RealMatrix inv = inverse(c_hat);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double a = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double ri = 0.0;
            for (std::size_t j = 0; j < n; ++j) ri += model.covariance(i, j) * c_hat(k, j);
            a += c_hat(k, i) * ri;
        }
        double b = 0.0;
        for (std::size_t j = 0; j < n; ++j) b += inv(k, j) * inv(k, j);
        acc += std::log10(a * b);
    }
    return -10.0 / static_cast<double>(n) * acc;
}

/// Transform efficiency in percent: with R_Y = C_hat R C_hat^t, the share of
/// absolute covariance mass on the diagonal, 100 * sum|diag| / sum|all|.
inline double transform_efficiency(const RealMatrix& c_hat, const MarkovModel& model) {
    if (c_hat.rows() != model.n)
        throw std::invalid_argument("transform_efficiency: dimensions do not match the model");
    const RealMatrix ry = c_hat * model.covariance * c_hat.transpose();
    double diag = 0.0, all = 0.0;
    for (std::size_t i = 0; i < ry.rows(); ++i)
        for (std::size_t j = 0; j < ry.cols(); ++j) {
            all += std::abs(ry(i, j));
            if (i == j) diag += std::abs(ry(i, j));
        }
    return 100.0 * diag / all;
}

/// Figure-of-merit bundle for one transform under one Markov model.
struct MeritReport {
    std::string label;
    double epsilon = 0.0;         // total energy error
    double mse = 0.0;             // Markov-weighted mean square error
    double coding_gain_db = 0.0;  // unified coding gain
    double efficiency_pct = 0.0;  // transform efficiency
    double delta_orth = 0.0;      // deviation from orthogonality of the Gram matrix
};

inline const char* merit_csv_header() { return "label,epsilon,mse,cg_db,eta_pct,delta"; }

inline std::string to_csv_row(const MeritReport& r) {
    std::ostringstream os;
    os.precision(10);
    os << r.label << ',' << r.epsilon << ',' << r.mse << ',' << r.coding_gain_db << ','
       << r.efficiency_pct << ',' << r.delta_orth;
    return os.str();
}

/// Assess an arbitrary transform matrix against the exact DCT of the same size.
inline MeritReport assess(const RealMatrix& c_hat, const MarkovModel& model,
                          std::string label = "") {
    if (c_hat.rows() != model.n || c_hat.cols() != model.n)
        throw std::invalid_argument("assess: transform size does not match the model");
    const RealMatrix c = exact_dct(model.n);
    MeritReport r;
    r.label = std::move(label);
    r.epsilon = total_energy_error(c, c_hat);
    r.mse = mse(c, c_hat, model);
    r.coding_gain_db = coding_gain(c_hat, model);
    r.efficiency_pct = transform_efficiency(c_hat, model);
    r.delta_orth = deviation_from_orthogonality(c_hat * c_hat.transpose());
    return r;
}

inline MeritReport assess(const Approximation& approx, const MarkovModel& model) {
    return assess(approx.c_hat, model, approx.label);
}

}  // namespace lcdct
