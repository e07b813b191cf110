#pragma once

// 16-point example pair: two row-rescaled kernels that normalize to the
// same transform. Entries are numerators over 4.

namespace lcdct::testdata {

inline constexpr int kExamplePairA[16][16] = {
    {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4},
    {4, 4, 4, 4, 4, 4, 0, 0, 0, 0, -4, -4, -4, -4, -4, -4},
    {4, 4, 4, 0, 0, -4, -4, -4, -4, -4, -4, 0, 0, 4, 4, 4},
    {4, 4, 0, -4, -4, -4, -4, 0, 0, 4, 4, 4, 4, 0, -4, -4},
    {4, 0, 0, -4, -4, 0, 0, 4, 4, 0, 0, -4, -4, 0, 0, 4},
    {4, 0, -4, -4, 0, 4, 4, 4, -4, -4, -4, 0, 4, 4, 0, -4},
    {4, 0, -4, -4, 4, 4, 0, -4, -4, 0, 4, 4, -4, -4, 0, 4},
    {4, -4, -4, 0, 4, 0, -4, -4, 4, 4, 0, -4, 0, 4, 4, -4},
    {4, -4, -4, 4, 4, -4, -4, 4, 4, -4, -4, 4, 4, -4, -4, 4},
    {4, -4, 0, 4, 0, -4, 4, 4, -4, -4, 4, 0, -4, 0, 4, -4},
    {4, -4, 0, 4, -4, 0, 4, -4, -4, 4, 0, -4, 4, 0, -4, 4},
    {4, -4, 4, 0, -4, 4, 0, -4, 4, 0, -4, 4, 0, -4, 4, -4},
    {0, -4, 4, 0, 0, 4, -4, 0, 0, -4, 4, 0, 0, 4, -4, 0},
    {0, -4, 4, -4, 4, 0, -4, 4, -4, 4, 0, -4, 4, -4, 4, 0},
    {0, -4, 4, -4, 4, -4, 4, 0, 0, 4, -4, 4, -4, 4, -4, 0},
    {0, 0, 4, -4, 4, -4, 4, -4, 4, -4, 4, -4, 4, -4, 0, 0},
};

inline constexpr int kExamplePairB[16][16] = {
    {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4},
    {8, 8, 8, 8, 8, 8, 0, 0, 0, 0, -8, -8, -8, -8, -8, -8},
    {4, 4, 4, 0, 0, -4, -4, -4, -4, -4, -4, 0, 0, 4, 4, 4},
    {8, 8, 0, -8, -8, -8, -8, 0, 0, 8, 8, 8, 8, 0, -8, -8},
    {8, 0, 0, -8, -8, 0, 0, 8, 8, 0, 0, -8, -8, 0, 0, 8},
    {8, 0, -8, -8, 0, 8, 8, 8, -8, -8, -8, 0, 8, 8, 0, -8},
    {8, 0, -8, -8, 8, 8, 0, -8, -8, 0, 8, 8, -8, -8, 0, 8},
    {4, -4, -4, 0, 4, 0, -4, -4, 4, 4, 0, -4, 0, 4, 4, -4},
    {2, -2, -2, 2, 2, -2, -2, 2, 2, -2, -2, 2, 2, -2, -2, 2},
    {8, -8, 0, 8, 0, -8, 8, 8, -8, -8, 8, 0, -8, 0, 8, -8},
    {8, -8, 0, 8, -8, 0, 8, -8, -8, 8, 0, -8, 8, 0, -8, 8},
    {8, -8, 8, 0, -8, 8, 0, -8, 8, 0, -8, 8, 0, -8, 8, -8},
    {0, -8, 8, 0, 0, 8, -8, 0, 0, -8, 8, 0, 0, 8, -8, 0},
    {0, -2, 2, -2, 2, 0, -2, 2, -2, 2, 0, -2, 2, -2, 2, 0},
    {0, -8, 8, -8, 8, -8, 8, 0, 0, 8, -8, 8, -8, 8, -8, 0},
    {0, 0, 8, -8, 8, -8, 8, -8, 8, -8, 8, -8, 8, -8, 0, 0},
};

}  // namespace lcdct::testdata
