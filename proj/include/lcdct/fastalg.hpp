#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcdct/catalog_data.hpp"
#include "lcdct/dyadic.hpp"
#include "lcdct/scaling.hpp"

namespace lcdct {

struct ArithmeticCost {
    long additions = 0;
    long bit_shifts = 0;

    friend bool operator==(const ArithmeticCost&, const ArithmeticCost&) = default;
};

/// An ordered product of sparse dyadic factors, applied right to left to
/// column vectors, with its declared multiplier set and post-factorization
/// arithmetic cost.
struct FactorizedTransform {
    std::string name;
    std::vector<DyadicMatrix> factors;
    std::string multiplier_set_name;  // set containing every composed entry
    ArithmeticCost declared_cost;     // additions/bit-shifts after factorization
};

/// Adds: one fewer than the nonzero count of each row. Bit-shifts: one per
/// entry whose magnitude is not 0 or 1. Negation and permutation are free.
inline ArithmeticCost cost(const DyadicMatrix& m) {
    ArithmeticCost c;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        long nnz = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Dyadic& d = m(i, j);
            if (d.is_zero()) continue;
            ++nnz;
            if (!(d.abs() == Dyadic(1))) ++c.bit_shifts;
        }
        if (nnz > 1) c.additions += nnz - 1;
    }
    return c;
}

inline ArithmeticCost cost_factorized(const FactorizedTransform& f) {
    ArithmeticCost total;
    for (const DyadicMatrix& m : f.factors) {
        const ArithmeticCost c = cost(m);
        total.additions += c.additions;
        total.bit_shifts += c.bit_shifts;
    }
    return total;
}

/// Exact product of the factor chain.
inline DyadicMatrix compose(const FactorizedTransform& f) {
    if (f.factors.empty()) throw std::invalid_argument("compose: empty factor list");
    DyadicMatrix m = f.factors.front();
    for (std::size_t i = 1; i < f.factors.size(); ++i) {
        if (m.cols() != f.factors[i].rows())
            throw std::invalid_argument("compose: factor " + std::to_string(i - 1) + " (" +
                                        std::to_string(m.cols()) + " cols) does not chain with factor " +
                                        std::to_string(i) + " (" +
                                        std::to_string(f.factors[i].rows()) + " rows)");
        m = m * f.factors[i];
    }
    return m;
}

/// Apply the factor chain to a vector using only sign changes, additions and
/// power-of-two scalings (every catalog entry has mantissa +-1).
inline std::vector<double> apply(const FactorizedTransform& f, std::span<const double> x) {
    if (f.factors.empty() || f.factors.back().cols() != x.size())
        throw std::invalid_argument("apply: input length does not match the transform");
    std::vector<double> cur(x.begin(), x.end());
    std::vector<double> next;
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
        const DyadicMatrix& m = *it;
        next.assign(m.rows(), 0.0);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const Dyadic& d = m(i, j);
                if (d.is_zero()) continue;
                const double scaled = std::ldexp(cur[j], d.exponent());
                if (d.mantissa() == 1) acc += scaled;
                else if (d.mantissa() == -1) acc -= scaled;
                else acc += static_cast<double>(d.mantissa()) * scaled;
            }
            next[i] = acc;
        }
        cur.swap(next);
    }
    return cur;
}

namespace detail {

template <std::size_t N>
DyadicMatrix from_quarters(const int (&q)[N][N]) {
    DyadicMatrix m(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = Dyadic(q[i][j], -2);
    return m;
}

inline std::vector<std::vector<int>> decode_cycles(const int* enc) {
    std::vector<std::vector<int>> cycles(enc[0]);
    const int* p = enc + 1;
    for (auto& c : cycles) {
        const int len = *p++;
        c.assign(p, p + len);
        p += len;
    }
    return cycles;
}

inline DyadicMatrix z3_block() {
    DyadicMatrix z(32, 32);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) {
            z(i, j) = Dyadic(kQ1[i][j], -2);
            z(i, 16 + j) = Dyadic(kQ2[i][j], -2);
            z(16 + i, j) = Dyadic(kQ3[i][j], -2);
            z(16 + i, 16 + j) = Dyadic(kQ4[i][j], -2);
        }
    return z;
}

inline std::vector<DyadicMatrix> butterfly_cascade(std::size_t n) {
    std::vector<DyadicMatrix> out;
    for (std::size_t b = 2; b <= n; b *= 2) {
        if (b == n) out.push_back(butterfly(n));
        else out.push_back(block_diag({butterfly(b), DyadicMatrix::identity(n - b)}));
    }
    return out;
}

/// Wrap a factor chain for an N-point kernel into the chain for its doubled
/// kernel: interleave stage, duplicated base factors, folding stage.
inline std::vector<DyadicMatrix> doubled_factors(const std::vector<DyadicMatrix>& base,
                                                 std::size_t n) {
    std::vector<DyadicMatrix> out;
    out.push_back(jam_interleave_stage(n));
    for (const DyadicMatrix& f : base) out.push_back(block_diag({f, f}));
    out.push_back(jam_fold_stage(n));
    return out;
}

}  // namespace detail

/// The factorization catalog. Base entries transcribe the published sparse
/// factors; the ^1/^2 entries assemble the blocklength-doubled chains.
inline FactorizedTransform catalog(const std::string& name) {
    using namespace detail;
    if (name == "T16.5") {
        std::vector<DyadicMatrix> f;
        f.push_back(permutation_from_cycles(decode_cycles(kCyclesP16), 16));
        f.push_back(from_quarters(kM16));
        auto casc = butterfly_cascade(16);
        f.insert(f.end(), casc.begin(), casc.end());
        return FactorizedTransform{name, std::move(f), "d6", {100, 62}};
    }
    if (name == "T32.2") {
        std::vector<DyadicMatrix> f;
        f.push_back(permutation_from_cycles(decode_cycles(kCyclesP32), 32));
        f.push_back(block_diag({from_quarters(kL1), from_quarters(kL2)}));
        auto casc = butterfly_cascade(32);
        f.insert(f.end(), casc.begin(), casc.end());
        return FactorizedTransform{name, std::move(f), "d2", {328, 110}};
    }
    if (name == "T64.1") {
        std::vector<DyadicMatrix> f;
        f.push_back(permutation_from_cycles(decode_cycles(kCyclesP64), 64));
        f.push_back(block_diag({from_quarters(kZ1), from_quarters(kZ2), z3_block()}));
        auto casc = butterfly_cascade(64);
        f.insert(f.end(), casc.begin(), casc.end());
        return FactorizedTransform{name, std::move(f), "d1", {1087, 0}};
    }
    if (name == "T16.5^1")
        return FactorizedTransform{name, detail::doubled_factors(catalog("T16.5").factors, 16),
                                   "d6", {232, 124}};
    if (name == "T16.5^2")
        return FactorizedTransform{name, detail::doubled_factors(catalog("T16.5^1").factors, 32),
                                   "d6", {528, 248}};
    if (name == "T32.2^1")
        return FactorizedTransform{name, detail::doubled_factors(catalog("T32.2").factors, 32),
                                   "d2", {720, 220}};
    throw std::invalid_argument("catalog: unknown transform '" + name +
                                "' (known: T16.5, T32.2, T64.1, T16.5^1, T16.5^2, T32.2^1)");
}

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"T16.5", "T32.2", "T64.1",
                                                "T16.5^1", "T16.5^2", "T32.2^1"};
    return names;
}

}  // namespace lcdct
