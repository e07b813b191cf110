#pragma once

#include <cstddef>
#include <string>

#include "lcdct/dct.hpp"
#include "lcdct/dyadic.hpp"

namespace lcdct {

/// Interleaving stage of the blocklength doubling: a signed permutation that
/// sends input i to output 2i and input N+i to output 2i+1 with sign (-1)^i.
/// The sign pattern keeps every doubled row positively aligned with its DCT
/// counterpart (calibrated against the published merit figures).
inline DyadicMatrix jam_interleave_stage(std::size_t n) {
    DyadicMatrix p(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        p(2 * i, i) = Dyadic(1);
        p(2 * i + 1, n + i) = Dyadic(i % 2 == 0 ? 1 : -1);
    }
    return p;
}

/// Folding stage [[I, J],[J, -I]] with J the counter-identity: sums mirrored
/// input pairs for the even half and differences them for the odd half.
inline DyadicMatrix jam_fold_stage(std::size_t n) {
    DyadicMatrix f(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        f(i, i) = Dyadic(1);
        f(i, 2 * n - 1 - i) = Dyadic(1);
        f(n + i, n - 1 - i) = Dyadic(1);
        f(n + i, n + i) = Dyadic(-1);
    }
    return f;
}

/// One blocklength doubling of a low-complexity kernel: even output rows are
/// (t_i | reverse t_i), odd rows (-1)^i (reverse t_i | -t_i).
inline DyadicMatrix jam_scale(const DyadicMatrix& t) {
    if (t.rows() != t.cols()) throw std::invalid_argument("jam_scale: kernel must be square");
    const std::size_t n = t.rows();
    return jam_interleave_stage(n) * block_diag({t, t}) * jam_fold_stage(n);
}

/// A kernel scaled j times together with its normalized transform.
struct ScaledTransform {
    DyadicMatrix base;
    std::size_t doublings = 0;
    DyadicMatrix t_big;
    Approximation approx;
};

/// Apply the doubling j times and normalize. The normalization absorbs the
/// 1/sqrt(2) factor that each doubling would otherwise carry, so rows of the
/// resulting transform have unit norm for every j.
inline ScaledTransform iterate_scale(const DyadicMatrix& t, std::size_t j,
                                     std::string label = "") {
    DyadicMatrix big = t;
    for (std::size_t i = 0; i < j; ++i) big = jam_scale(big);
    Approximation a = orthogonalize(big, std::move(label));
    return ScaledTransform{t, j, std::move(big), std::move(a)};
}

}  // namespace lcdct
