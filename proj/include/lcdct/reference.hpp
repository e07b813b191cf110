#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lcdct {

// Published figures transcribed from the literature for comparison output.
// These are reference data only: none of the competitor transforms (JAM, BAS,
// BCEM, SOBCM, OCBSML) are rebuilt here. The SDCT is the one baseline that is
// constructed in-repo; its rows below double as calibration targets.

struct ReferenceMerit {
    const char* label;
    std::size_t n;
    double epsilon;
    double mse;
    double coding_gain_db;
    double efficiency_pct;
    double delta_orth;
    bool proposed;  // true for the transforms this toolkit rebuilds
};

inline const std::vector<ReferenceMerit>& reference_merits() {
    static const std::vector<ReferenceMerit> rows{
        {"C16", 16, 0.0, 0.0, 9.4555, 88.4518, 0.0, true},
        {"C16.1", 16, 3.7043, 0.0172, 7.7474, 70.5034, 0.0828, false},
        {"C16.2", 16, 3.7043, 0.0172, 8.2190, 70.6902, 0.0270, false},
        {"C16.3", 16, 1.0227, 0.0054, 8.9653, 78.4016, 0.0472, false},
        {"C16.4", 16, 0.6337, 0.0035, 9.0922, 80.1145, 0.0234, false},
        {"C16.5", 16, 0.5748, 0.0031, 9.1268, 80.4401, 0.0118, true},
        {"SDCT16", 16, 8.2537, 0.0429, 6.0297, 64.9653, 0.2, true},
        {"JAM16", 16, 14.7402, 0.0506, 8.4285, 72.2296, 0.0, false},
        {"BAS16", 16, 16.4071, 0.0564, 8.5208, 73.6345, 0.0, false},
        {"BCEM16", 16, 8.0806, 0.0465, 7.8401, 65.2789, 0.0, false},
        {"SOBCM16", 16, 40.9996, 0.0947, 7.8573, 67.6078, 0.0, false},
        {"OCBSML16", 16, 13.7032, 0.0474, 8.8787, 76.8108, 0.0, false},
        {"C32", 32, 0.0, 0.0, 9.7736, 81.6962, 0.0, true},
        {"C32.1", 32, 7.6403, 0.0287, 7.4624, 52.5455, 0.1138, false},
        {"C32.2", 32, 2.3525, 0.0100, 9.0983, 64.9265, 0.0376, true},
        {"C16.5^1", 32, 30.0539, 0.0829, 9.1939, 64.9983, 0.0118, true},
        {"SDCT32", 32, 18.2386, 0.0748, 5.5623, 41.6653, 0.2727, true},
        {"JAM32", 32, 48.0956, 0.1124, 8.5010, 56.9700, 0.0, false},
        {"BAS32", 32, 57.1260, 0.1171, 8.4971, 58.1727, 0.0, false},
        {"OCBSML32", 32, 46.2658, 0.1104, 8.9505, 61.0272, 0.0, false},
        {"C64", 64, 0.0, 0.0, 9.9366, 75.554, 0.0, true},
        {"C64.1", 64, 15.5707, 0.0434, 7.2436, 36.4275, 0.1152, true},
        {"C16.5^2", 64, 103.2435, 0.1833, 9.2144, 51.6925, 0.0118, true},
        {"C32.2^1", 64, 66.8310, 0.1355, 9.1164, 51.2582, 0.0376, true},
        {"SDCT64", 64, 38.2630, 0.1141, 5.2192, 27.9725, 0.2809, true},
        {"OCBSML64", 64, 125.2247, 0.2015, 8.9748, 48.4443, 0.0, false},
    };
    return rows;
}

struct ReferenceImageQuality {
    const char* label;
    std::size_t n;
    std::size_t r;
    double mse;
    double psnr_db;
    double mssim;
    bool proposed;
};

/// Peppers 512x512 compression figures at the published retention levels.
inline const std::vector<ReferenceImageQuality>& reference_peppers_quality() {
    static const std::vector<ReferenceImageQuality> rows{
        {"C16", 16, 50, 32.3449, 33.0328, 0.9416, true},
        {"C16.1", 16, 50, 75.0342, 29.3782, 0.9154, false},
        {"C16.2", 16, 50, 70.1802, 29.6687, 0.9184, false},
        {"C16.3", 16, 50, 43.2034, 31.7756, 0.9355, false},
        {"C16.4", 16, 50, 39.0721, 32.2121, 0.9378, false},
        {"C16.5", 16, 50, 38.8975, 32.2316, 0.9378, true},
        {"SDCT16", 16, 50, 135.8288, 26.8009, 0.8905, true},
        {"JAM16", 16, 50, 59.6891, 30.3718, 0.9242, false},
        {"BAS16", 16, 50, 58.1761, 30.4834, 0.9248, false},
        {"BCEM16", 16, 50, 93.1786, 28.4376, 0.9064, false},
        {"SOBCM16", 16, 50, 115.2820, 27.5132, 0.8897, false},
        {"OCBSML16", 16, 50, 49.3669, 31.1964, 0.9303, false},
        {"C32", 32, 205, 29.2562, 33.4686, 0.9690, true},
        {"C32.1", 32, 205, 87.8409, 28.6938, 0.9443, false},
        {"C32.2", 32, 205, 43.5848, 31.7375, 0.9634, true},
        {"C16.5^1", 32, 205, 37.8366, 32.3517, 0.9652, true},
        {"SDCT32", 32, 205, 189.2796, 25.3598, 0.9122, true},
        {"JAM32", 32, 205, 58.4496, 30.4630, 0.9554, false},
        {"BAS32", 32, 205, 61.6647, 30.2304, 0.9524, false},
        {"OCBSML32", 32, 205, 47.9872, 31.3196, 0.9591, false},
        {"C64", 64, 820, 28.1330, 33.6386, 0.9880, true},
        {"C64.1", 64, 820, 118.8871, 27.3795, 0.9641, true},
        {"C16.5^2", 64, 820, 37.3748, 32.4050, 0.9851, true},
        {"C32.2^1", 64, 820, 42.8390, 31.8124, 0.9836, true},
        {"SDCT64", 64, 820, 273.3575, 23.7635, 0.9294, true},
        {"OCBSML64", 64, 820, 54.2638, 30.7857, 0.9794, false},
    };
    return rows;
}

}  // namespace lcdct
