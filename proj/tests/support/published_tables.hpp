#pragma once

// Values transcribed from the published yearly tables for 2005-2020
// (15 core Indian physics and astronomy journals, observed in 2021).

#include <array>

namespace citeswing::testdata {

inline constexpr int kFirstYear = 2005;
inline constexpr int kYears = 16;

// Yearly citation totals.
inline constexpr std::array<long, 16> kTotal{6910, 6157, 6002, 7224, 7697, 8428, 7705, 7471,
                                             7842, 6814, 4869, 4318, 3807, 2499, 1925, 1577};
inline constexpr std::array<long, 16> kCore{1156, 1024, 1024, 1296, 1296, 1156, 961, 841,
                                            1089, 625,  484,  361,  400,  256,  196, 196};
inline constexpr std::array<long, 16> kExcess{5754, 5133, 4978, 5928, 6401, 7272, 6744, 6630,
                                              6753, 6189, 4385, 3957, 3407, 2243, 1729, 1381};
inline constexpr std::array<double, 16> kFet{0.91, 0.91, 0.91, 0.91, 0.91, 0.93, 0.94, 0.94,
                                             0.93, 0.95, 0.95, 0.96, 0.95, 0.95, 0.95, 0.94};
inline constexpr std::array<double, 16> kFhe{0.45, 0.45, 0.45, 0.47, 0.45, 0.40, 0.38, 0.36,
                                             0.40, 0.32, 0.33, 0.30, 0.34, 0.34, 0.34, 0.38};

// Interval values, listed under the interval's end year (2006..2020).
inline constexpr std::array<double, 15> kCsfObserved{-2.939, -2.930, -2.898, -2.903, -3.023,
                                                     -3.181, -3.295, -3.229, -3.343, -3.577,
                                                     -3.642, -3.600, -3.464, -3.485, -3.357};
inline constexpr std::array<double, 15> kCsfExpected{-2.936, -2.941, -2.919, -2.877, -2.930,
                                                     -3.129, -3.235, -3.359, -3.116, -3.635,
                                                     -3.522, -3.774, -3.447, -3.481, -3.489};
inline constexpr std::array<double, 15> kPctError{0.09, 0.38, 0.73, 0.90, 3.15, 1.64, 1.85, 3.85,
                                                  7.28, 1.60, 3.40, 4.62, 0.49, 0.12, 3.80};
inline constexpr double kMeanPctError = 2.26;

inline constexpr std::array<long, 16> kPublished{947,  935,  903,  1072, 974,  1041, 1148, 1144,
                                                 1065, 1319, 1185, 1224, 1164, 1120, 1414, 1702};
inline constexpr std::array<long, 16> kCited{754, 685, 660, 803, 791, 852, 866, 894,
                                             897, 993, 870, 903, 831, 702, 700, 556};
inline constexpr std::array<double, 16> kTc{0.078, 0.091, 0.098, 0.103, 0.103, 0.111, 0.133, 0.142,
                                            0.148, 0.19,  0.227, 0.271, 0.35,  0.532, 1.01,  3.061};
inline constexpr std::array<double, 16> kCu{0.244, 0.183, 0.194, 0.230, 0.360, 0.410, 0.307, 0.397,
                                            0.667, 0.435, 0.460, 0.563, 0.624, 0.560, 0.490, 0.485};
inline constexpr std::array<double, 16> kTu{0.307, 0.249, 0.265, 0.307, 0.444, 0.501, 0.407, 0.508,
                                            0.792, 0.578, 0.627, 0.763, 0.874, 0.893, 0.990, 1.485};

// Summary statistics: mean, median, range, SD, CV, kurtosis.
struct SummaryRow {
    const char* name;
    std::array<double, 6> values;
};
inline constexpr std::array<SummaryRow, 5> kSummary{{
    {"CSF(O)", {3.26, 3.29, 0.74, 0.27, 0.08, -1.47}},
    {"CSF(E)", {3.25, 3.24, 0.90, 0.3, 0.09, -1.36}},
    {"TC", {0.42, 0.15, 2.98, 0.74, 1.76, 12.25}},
    {"CU", {0.41, 0.42, 0.48, 0.15, 0.37, -0.99}},
    {"TU", {0.62, 0.54, 1.24, 0.33, 0.53, 1.61}},
}};

inline constexpr double kCorrTcCu = 0.26;
inline constexpr double kCorrCuTu = 0.74;
inline constexpr double kCorrTcTu = 0.84;

// CU on TU and TC on TU: intercept, slope, R^2, standard error.
inline constexpr std::array<double, 4> kRegressionCuOnTu{0.201, 0.34, 0.55, 0.11};
inline constexpr std::array<double, 4> kRegressionTcOnTu{-0.76, 1.88, 0.70, 0.42};

inline constexpr std::array<double, 3> kHarrisTcParams{-5.789, 6.114, 0.242};
inline constexpr std::array<double, 4> kRationalTuParams{7.55e-13, 4.346e10, 2.404e10, 7.068e10};

}  // namespace citeswing::testdata
