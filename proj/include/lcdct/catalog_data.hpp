#pragma once

// Sparse factor blocks and permutation cycles for the factorized transform
// catalog. Entries are stored as integer numerators over a fixed denominator
// of 4; cycle arrays are encoded as {count, len0, e00, e01, ..., len1, ...}.

namespace lcdct::detail {

inline constexpr int kFactorDenominator = 4;

inline constexpr int kM16[16][16] = {
    {4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, -4, -8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 8, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, -2, -4, -8, -8, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 4, 8, 2, -8, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, -8, -2, 8, -4, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 8, -8, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, -1, -2, -4, -4, -8, -8, -8, -8},
    {0, 0, 0, 0, 0, 0, 0, 0, 2, 8, 8, 8, 4, -1, -4, -8},
    {0, 0, 0, 0, 0, 0, 0, 0, -4, -8, -4, 2, 8, 8, -1, -8},
    {0, 0, 0, 0, 0, 0, 0, 0, 4, 8, -2, -8, -1, 8, 4, -8},
    {0, 0, 0, 0, 0, 0, 0, 0, -8, -4, 8, 1, -8, 2, 8, -4},
    {0, 0, 0, 0, 0, 0, 0, 0, 8, -1, -8, 8, -2, -4, 8, -4},
    {0, 0, 0, 0, 0, 0, 0, 0, -8, 4, -1, -4, 8, -8, 8, -2},
    {0, 0, 0, 0, 0, 0, 0, 0, 8, -8, 8, -8, 4, -4, 2, -1},
};

inline constexpr int kL1[16][16] = {
    {4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, -2, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 2, 4, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, -4, 0, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 4, -4, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, -2, -4, -4, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 4, 4, 2, 0, -2, -4},
    {0, 0, 0, 0, 0, 0, 0, 0, -2, -4, -2, 2, 4, 4, 0, -4},
    {0, 0, 0, 0, 0, 0, 0, 0, 2, 4, -2, -4, 0, 4, 2, -4},
    {0, 0, 0, 0, 0, 0, 0, 0, -4, -2, 4, 0, -4, 2, 4, -2},
    {0, 0, 0, 0, 0, 0, 0, 0, 4, 0, -4, 4, -2, -2, 4, -2},
    {0, 0, 0, 0, 0, 0, 0, 0, -4, 2, 0, -2, 4, -4, 4, -2},
    {0, 0, 0, 0, 0, 0, 0, 0, 4, -4, 4, -4, 2, -2, 2, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, -2, -4, -4, -4, -4},
};

inline constexpr int kL2[16][16] = {
    {-2, -4, -4, -4, -4, -2, 0, 2, 4, 4, 4, 2, 0, -2, -4, -4},
    {2, 4, 4, 4, 0, -2, -4, -4, -2, 2, 4, 4, 4, 0, -2, -4},
    {-2, -4, -4, 0, 4, 4, 2, -2, -4, -4, 0, 4, 4, 2, -2, -4},
    {2, 4, 2, -2, -4, -2, 4, 4, 2, -4, -4, 0, 4, 4, 0, -4},
    {-2, -4, 0, 4, 2, -4, -4, 0, 4, 2, -4, -4, 2, 4, 2, -4},
    {4, 4, -2, -4, 2, 4, 0, -4, 0, 4, 2, -4, -2, 4, 2, -4},
    {-4, -2, 4, 2, -4, -2, 4, 0, -4, 0, 4, -2, -4, 2, 4, -4},
    {4, 2, -4, 2, 4, -4, -2, 4, 0, -4, 4, 2, -4, 0, 4, -2},
    {-4, 0, 4, -4, 0, 4, -4, -2, 4, -4, -2, 4, -2, -2, 4, -2},
    {4, -2, -2, 4, -4, 0, 4, -4, 2, 2, -4, 4, 0, -4, 4, -2},
    {-4, 2, 0, -4, 4, -4, 2, 2, -4, 4, -2, 0, 4, -4, 4, -2},
    {4, -4, 2, 0, -2, 4, -4, 4, -2, 0, 2, -4, 4, -4, 4, -2},
    {-4, 4, -4, 2, -2, 0, 2, -2, 4, -4, 4, -4, 4, -4, 2, 0},
    {4, -4, 4, -4, 4, -4, 4, -4, 4, -2, 2, -2, 2, -2, 0, 0},
    {0, 0, -2, -2, -2, -2, -2, -4, -4, -4, -4, -4, -4, -4, -4, -4},
    {0, 2, 4, 4, 4, 4, 4, 4, 2, 2, 0, -2, -2, -4, -4, -4},
};

inline constexpr int kZ1[16][16] = {
    {4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, -4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 4, 4, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, -4, 0, 4, -4, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 4, -4, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, -4, -4, -4, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, -4, -4, -4, 0, 4, 4, 0, -4},
    {0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 0, -4, 0, 4, 4, -4},
    {0, 0, 0, 0, 0, 0, 0, 0, -4, -4, 4, 0, -4, 0, 4, -4},
    {0, 0, 0, 0, 0, 0, 0, 0, 4, 0, -4, 4, 0, -4, 4, -4},
    {0, 0, 0, 0, 0, 0, 0, 0, -4, 4, 0, -4, 4, -4, 4, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 4, -4, 4, -4, 4, -4, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -4, -4, -4, -4, -4, -4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 4, 4, 0, -4, -4},
};

inline constexpr int kZ2[16][16] = {
    {-4, -4, -4, 0, 4, 4, 4, 0, -4, -4, 0, 4, 4, 4, 0, -4},
    {4, 4, 4, -4, -4, 0, 4, 4, 0, -4, -4, 0, 4, 4, 0, -4},
    {-4, -4, 0, 4, 4, -4, -4, 0, 4, 4, -4, -4, 0, 4, 0, -4},
    {4, 4, -4, -4, 0, 4, 0, -4, 0, 4, 0, -4, -4, 4, 4, -4},
    {-4, -4, 4, 4, -4, 0, 4, 0, -4, 0, 4, 0, -4, 4, 4, -4},
    {4, 0, -4, 0, 4, -4, -4, 4, 0, -4, 4, 4, -4, 0, 4, -4},
    {-4, 0, 4, -4, 0, 4, -4, 0, 4, -4, 0, 4, -4, -4, 4, -4},
    {4, 0, -4, 4, -4, 0, 4, -4, 0, 4, -4, 4, 0, -4, 4, -4},
    {-4, 4, 0, -4, 4, -4, 0, 4, -4, 4, -4, 0, 4, -4, 4, 0},
    {4, -4, 0, 0, -4, 4, -4, 4, -4, 0, 4, -4, 4, -4, 4, 0},
    {-4, 4, -4, 4, 0, 0, 0, -4, 4, -4, 4, -4, 4, -4, 4, 0},
    {4, -4, 4, -4, 4, -4, 4, -4, 4, -4, 4, -4, 0, 0, 0, 0},
    {0, 0, 0, 0, -4, -4, -4, -4, -4, -4, -4, -4, -4, -4, -4, -4},
    {0, 4, 4, 4, 4, 4, 4, 4, 4, 0, 0, 0, -4, -4, -4, -4},
    {0, 4, 4, 4, 0, -4, -4, -4, -4, 0, 4, 4, 4, 0, -4, -4},
    {0, -4, -4, -4, -4, -4, 0, 4, 4, 4, 4, 4, 0, 0, -4, -4},
};

inline constexpr int kQ1[16][16] = {
    {-4, -4, -4, 0, 4, 4, 4, 0, -4, -4, -4, 0, 4, 4, 4, 0},
    {4, 4, 4, 0, -4, -4, 0, 4, 4, 4, 0, -4, -4, 0, 4, 4},
    {-4, -4, -4, 4, 4, 4, -4, -4, -4, 0, 4, 4, 0, -4, -4, 0},
    {4, 4, 0, -4, -4, 0, 4, 4, 0, -4, -4, 4, 4, 4, -4, -4},
    {-4, -4, 0, 4, 4, -4, -4, 0, 4, 4, 0, -4, 0, 4, 4, 0},
    {4, 4, 0, -4, 0, 4, 4, -4, -4, 0, 4, 4, -4, -4, 0, 4},
    {-4, -4, 4, 4, 0, -4, 0, 4, 4, -4, -4, 4, 4, 0, -4, 0},
    {4, 4, -4, -4, 4, 4, -4, -4, 0, 4, 0, -4, 0, 4, 0, -4},
    {-4, -4, 4, 4, -4, -4, 4, 4, -4, 0, 4, 0, -4, 0, 4, 0},
    {4, 4, -4, 0, 4, 0, -4, 0, 4, -4, -4, 4, 4, -4, 0, 4},
    {-4, -4, 4, 0, -4, 4, 4, -4, 0, 4, 0, -4, 4, 4, -4, 0},
    {4, 0, -4, 4, 4, -4, 0, 4, -4, -4, 4, 0, -4, 4, 4, -4},
    {-4, 0, 4, -4, 0, 4, -4, -4, 4, 0, -4, 4, 0, -4, 4, 0},
    {4, 0, -4, 4, 0, -4, 4, 0, -4, 4, 0, -4, 4, 0, -4, 4},
    {-4, 0, 4, -4, 4, 4, -4, 4, 0, -4, 4, 0, -4, 4, -4, 0},
    {4, 0, -4, 4, -4, 0, 4, -4, 4, 0, -4, 4, -4, 0, 4, -4},
};

inline constexpr int kQ2[16][16] = {
    {-4, -4, 0, 4, 4, 4, 0, -4, -4, -4, 0, 4, 4, 4, 0, -4},
    {0, -4, -4, -4, 0, 4, 4, 0, -4, -4, -4, 4, 4, 4, 0, -4},
    {4, 4, 0, -4, -4, 0, 4, 4, 0, -4, -4, 0, 4, 4, 0, -4},
    {0, 4, 4, 0, -4, -4, 0, 4, 4, -4, -4, 0, 4, 4, 0, -4},
    {-4, -4, 4, 4, 0, -4, -4, 4, 4, 0, -4, -4, 4, 4, 0, -4},
    {0, -4, -4, 4, 4, 0, -4, 0, 4, 4, -4, -4, 0, 4, 4, -4},
    {4, 0, -4, -4, 4, 4, -4, -4, 0, 4, 0, -4, 0, 4, 4, -4},
    {0, 4, 0, -4, 0, 4, 0, -4, -4, 4, 4, -4, -4, 4, 4, -4},
    {-4, 0, 4, 0, -4, 0, 4, 0, -4, 4, 4, -4, -4, 4, 4, -4},
    {0, -4, 0, 4, -4, -4, 4, 4, -4, 0, 4, 0, -4, 4, 4, -4},
    {4, 0, -4, 4, 4, -4, 0, 4, -4, -4, 4, 0, -4, 0, 4, -4},
    {0, 4, -4, 0, 4, 0, -4, 4, 0, -4, 4, 4, -4, 0, 4, -4},
    {-4, 4, 4, -4, 4, 4, -4, 0, 4, -4, 0, 4, -4, 0, 4, -4},
    {0, -4, 4, 0, -4, 4, 0, -4, 4, -4, -4, 4, -4, -4, 4, -4},
    {4, -4, 0, 4, -4, 0, 4, -4, 4, 0, -4, 4, 0, -4, 4, -4},
    {0, 4, -4, 4, 0, -4, 4, -4, 0, 4, -4, 4, 0, -4, 4, -4},
};

inline constexpr int kQ3[16][16] = {
    {-4, 4, 0, -4, 4, -4, 0, 4, -4, 4, 0, -4, 4, -4, 0, 4},
    {4, -4, 0, 4, -4, 4, -4, 0, 4, -4, 4, -4, 0, 4, -4, 4},
    {-4, 4, 0, 0, 4, -4, 4, -4, 0, 4, -4, 4, -4, 4, 0, -4},
    {4, -4, 4, 0, -4, 4, -4, 4, -4, 4, 0, 0, 4, -4, 4, -4},
    {-4, 4, -4, 0, 0, 0, 4, -4, 4, -4, 4, -4, 4, 0, 0, 4},
    {4, -4, 4, -4, 4, 0, 0, 0, -4, 4, -4, 4, -4, 4, -4, 4},
    {-4, 4, -4, 4, -4, 4, -4, 4, 0, 0, 0, 0, 0, -4, 4, -4},
    {4, -4, 4, -4, 4, -4, 4, -4, 4, -4, 4, -4, 4, -4, 4, -4},
    {0, 0, 0, 0, 0, 0, 0, 0, -4, -4, -4, -4, -4, -4, -4, -4},
    {0, 0, 0, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4},
    {0, 4, 4, 4, 4, 4, 4, 4, 0, 0, -4, -4, -4, -4, -4, -4},
    {0, -4, -4, -4, -4, -4, 0, 0, 4, 4, 4, 4, 4, 0, 0, -4},
    {0, 4, 4, 4, 4, 0, 0, -4, -4, -4, -4, 0, 4, 4, 4, 4},
    {0, 4, 4, 4, 0, -4, -4, -4, 0, 4, 4, 4, 0, -4, -4, -4},
    {0, 0, -4, -4, -4, -4, -4, -4, -4, -4, -4, 0, 0, 0, 4, 4},
    {0, -4, -4, -4, 0, 0, 4, 4, 4, 0, -4, -4, -4, -4, 0, 4},
};

inline constexpr int kQ4[16][16] = {
    {-4, 4, -4, 0, 4, -4, 4, 0, -4, 4, -4, 0, 4, -4, 4, 0},
    {-4, 0, 4, -4, 4, -4, 0, 4, -4, 4, 0, 0, 4, -4, 4, 0},
    {4, -4, 4, -4, 0, 4, -4, 4, -4, 0, 0, -4, 4, -4, 4, 0},
    {4, 0, 0, 4, -4, 4, -4, 4, 0, 0, 4, -4, 4, -4, 4, 0},
    {-4, 4, -4, 4, -4, 4, 0, 0, 4, -4, 4, -4, 4, -4, 4, 0},
    {-4, 4, 0, 0, 0, -4, 4, -4, 4, -4, 4, -4, 4, -4, 0, 0},
    {4, -4, 4, -4, 4, -4, 4, -4, 4, -4, 4, -4, 4, 0, 0, 0},
    {4, -4, 4, -4, 4, -4, 4, -4, 0, 0, 0, 0, 0, 0, 0, 0},
    {-4, -4, -4, -4, -4, -4, -4, -4, -4, -4, -4, -4, -4, -4, -4, -4},
    {4, 4, 4, 0, 0, 0, 0, 0, -4, -4, -4, -4, -4, -4, -4, -4},
    {-4, 0, 0, 4, 4, 4, 4, 4, 4, 4, 0, 0, 0, -4, -4, -4},
    {-4, -4, -4, -4, 0, 0, 4, 4, 4, 4, 4, 4, 0, -4, -4, -4},
    {4, 0, -4, -4, -4, -4, -4, 0, 4, 4, 4, 4, 0, 0, -4, -4},
    {-4, 0, 4, 4, 4, 0, -4, -4, -4, 0, 4, 4, 4, 0, -4, -4},
    {4, 4, 4, 4, 4, 4, 4, 4, 0, 0, 0, -4, -4, -4, -4, -4},
    {4, 4, 4, 0, -4, -4, -4, -4, 0, 4, 4, 4, 4, 0, -4, -4},
};

inline constexpr int kCyclesP16[] = {5, 2, 1, 8, 2, 2, 4, 3, 3, 12, 9, 3, 5, 6, 10, 4, 7, 14, 13, 11};
inline constexpr int kCyclesP32[] = {3, 15, 1, 16, 5, 20, 13, 26, 25, 23, 19, 11, 18, 9, 10, 14, 30, 10, 2, 8, 6, 28, 29, 31, 3, 24, 21, 15, 5, 4, 12, 22, 17, 7};
inline constexpr int kCyclesP64[] = {2, 35, 1, 32, 17, 22, 42, 37, 27, 62, 5, 40, 33, 19, 30, 14, 4, 24, 50, 53, 59, 9, 28, 2, 16, 18, 26, 58, 7, 8, 20, 34, 21, 38, 29, 6, 56, 27, 3, 48, 49, 51, 55, 63, 13, 60, 11, 44, 41, 35, 23, 46, 45, 43, 39, 31, 10, 36, 25, 54, 61, 15, 12, 52, 57};

}  // namespace lcdct::detail
