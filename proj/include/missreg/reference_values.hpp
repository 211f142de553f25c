#pragma once

#include <array>
#include <string_view>

namespace missreg::reference {

/// Published Frobenius errors of stage I and stage III coefficient estimates
/// (mean and standard error over 100 replications, p = 100 or n = 400, s_max = 5).
struct ErrorRow
{
    std::string_view scenario; // "S3A" varies n (p = 100), "S3B" varies p (n = 400)
    int q;
    int size;                  // n for S3A, p for S3B
    double rho_eps;
    double rho_w;
    double b1, b1_se, b2, b2_se;
};

inline constexpr std::array<ErrorRow, 192> error_rows{{
    ErrorRow{"S3A", 20, 200, 0, 0.05, 2.558, 0.018, 2.288, 0.011},
    ErrorRow{"S3A", 20, 200, 0.3, 0.05, 2.577, 0.02, 2.287, 0.012},
    ErrorRow{"S3A", 20, 200, 0.7, 0.05, 2.546, 0.018, 1.863, 0.014},
    ErrorRow{"S3A", 20, 200, 0.9, 0.05, 2.546, 0.021, 1.514, 0.013},
    ErrorRow{"S3A", 20, 400, 0, 0.05, 1.858, 0.011, 1.653, 0.011},
    ErrorRow{"S3A", 20, 400, 0.3, 0.05, 1.853, 0.011, 1.624, 0.011},
    ErrorRow{"S3A", 20, 400, 0.7, 0.05, 1.877, 0.009, 1.262, 0.009},
    ErrorRow{"S3A", 20, 400, 0.9, 0.05, 1.841, 0.013, 0.982, 0.007},
    ErrorRow{"S3A", 20, 800, 0, 0.05, 1.274, 0.009, 1.138, 0.007},
    ErrorRow{"S3A", 20, 800, 0.3, 0.05, 1.275, 0.009, 1.094, 0.008},
    ErrorRow{"S3A", 20, 800, 0.7, 0.05, 1.288, 0.01, 0.859, 0.006},
    ErrorRow{"S3A", 20, 800, 0.9, 0.05, 1.277, 0.01, 0.629, 0.004},
    ErrorRow{"S3A", 20, 1600, 0, 0.05, 0.952, 0.004, 0.828, 0.004},
    ErrorRow{"S3A", 20, 1600, 0.3, 0.05, 0.952, 0.005, 0.774, 0.004},
    ErrorRow{"S3A", 20, 1600, 0.7, 0.05, 0.952, 0.004, 0.599, 0.005},
    ErrorRow{"S3A", 20, 1600, 0.9, 0.05, 0.955, 0.005, 0.435, 0.003},
    ErrorRow{"S3A", 20, 3200, 0, 0.05, 0.675, 0.006, 0.606, 0.004},
    ErrorRow{"S3A", 20, 3200, 0.3, 0.05, 0.668, 0.006, 0.569, 0.003},
    ErrorRow{"S3A", 20, 3200, 0.7, 0.05, 0.665, 0.006, 0.421, 0.003},
    ErrorRow{"S3A", 20, 3200, 0.9, 0.05, 0.667, 0.006, 0.304, 0.002},
    ErrorRow{"S3A", 20, 6400, 0, 0.05, 0.491, 0.002, 0.418, 0.002},
    ErrorRow{"S3A", 20, 6400, 0.3, 0.05, 0.491, 0.002, 0.4, 0.004},
    ErrorRow{"S3A", 20, 6400, 0.7, 0.05, 0.489, 0.002, 0.298, 0.002},
    ErrorRow{"S3A", 20, 6400, 0.9, 0.05, 0.487, 0.002, 0.214, 0.002},
    ErrorRow{"S3A", 20, 12800, 0, 0.05, 0.359, 0.003, 0.313, 0.002},
    ErrorRow{"S3A", 20, 12800, 0.3, 0.05, 0.356, 0.003, 0.285, 0.001},
    ErrorRow{"S3A", 20, 12800, 0.7, 0.05, 0.357, 0.003, 0.219, 0.001},
    ErrorRow{"S3A", 20, 12800, 0.9, 0.05, 0.351, 0.004, 0.149, 0.001},
    ErrorRow{"S3A", 20, 200, 0.7, 0.005, 2.465, 0.015, 1.718, 0.011},
    ErrorRow{"S3A", 20, 200, 0.7, 0.1, 2.644, 0.02, 2.032, 0.013},
    ErrorRow{"S3A", 20, 200, 0.7, 0.2, 2.886, 0.017, 2.71, 0.035},
    ErrorRow{"S3A", 20, 200, 0.7, 0.3, 3.048, 0.011, 4.132, 0.044},
    ErrorRow{"S3A", 20, 400, 0.7, 0.005, 1.794, 0.015, 1.125, 0.007},
    ErrorRow{"S3A", 20, 400, 0.7, 0.1, 1.928, 0.007, 1.397, 0.01},
    ErrorRow{"S3A", 20, 400, 0.7, 0.2, 2.012, 0.011, 1.869, 0.017},
    ErrorRow{"S3A", 20, 400, 0.7, 0.3, 2.28, 0.018, 2.621, 0.018},
    ErrorRow{"S3A", 20, 800, 0.7, 0.005, 1.236, 0.007, 0.761, 0.006},
    ErrorRow{"S3A", 20, 800, 0.7, 0.1, 1.343, 0.011, 0.949, 0.007},
    ErrorRow{"S3A", 20, 800, 0.7, 0.2, 1.516, 0.009, 1.173, 0.008},
    ErrorRow{"S3A", 20, 800, 0.7, 0.3, 1.599, 0.006, 1.677, 0.012},
    ErrorRow{"S3A", 20, 1600, 0.7, 0.005, 0.922, 0.006, 0.516, 0.003},
    ErrorRow{"S3A", 20, 1600, 0.7, 0.1, 0.973, 0.004, 0.667, 0.004},
    ErrorRow{"S3A", 20, 1600, 0.7, 0.2, 1.034, 0.007, 0.79, 0.004},
    ErrorRow{"S3A", 20, 1600, 0.7, 0.3, 1.188, 0.008, 1.084, 0.007},
    ErrorRow{"S3A", 20, 3200, 0.7, 0.005, 0.639, 0.005, 0.369, 0.002},
    ErrorRow{"S3A", 20, 3200, 0.7, 0.1, 0.724, 0.006, 0.466, 0.003},
    ErrorRow{"S3A", 20, 3200, 0.7, 0.2, 0.784, 0.003, 0.553, 0.003},
    ErrorRow{"S3A", 20, 3200, 0.7, 0.3, 0.825, 0.004, 0.729, 0.004},
    ErrorRow{"S3A", 20, 6400, 0.7, 0.005, 0.478, 0.003, 0.271, 0.001},
    ErrorRow{"S3A", 20, 6400, 0.7, 0.1, 0.499, 0.002, 0.327, 0.002},
    ErrorRow{"S3A", 20, 6400, 0.7, 0.2, 0.551, 0.005, 0.392, 0.002},
    ErrorRow{"S3A", 20, 6400, 0.7, 0.3, 0.613, 0.005, 0.495, 0.003},
    ErrorRow{"S3A", 20, 12800, 0.7, 0.005, 0.336, 0.003, 0.195, 0.002},
    ErrorRow{"S3A", 20, 12800, 0.7, 0.1, 0.377, 0.003, 0.238, 0.001},
    ErrorRow{"S3A", 20, 12800, 0.7, 0.2, 0.399, 0.002, 0.28, 0.001},
    ErrorRow{"S3A", 20, 12800, 0.7, 0.3, 0.419, 0.002, 0.343, 0.002},
    ErrorRow{"S3A", 10, 200, 0, 0.05, 1.736, 0.015, 1.508, 0.011},
    ErrorRow{"S3A", 10, 200, 0.3, 0.05, 1.736, 0.015, 1.499, 0.012},
    ErrorRow{"S3A", 10, 200, 0.7, 0.05, 1.741, 0.016, 1.239, 0.011},
    ErrorRow{"S3A", 10, 200, 0.9, 0.05, 1.767, 0.017, 1.021, 0.009},
    ErrorRow{"S3A", 10, 400, 0, 0.05, 1.23, 0.008, 1.07, 0.008},
    ErrorRow{"S3A", 10, 400, 0.3, 0.05, 1.222, 0.01, 1.022, 0.008},
    ErrorRow{"S3A", 10, 400, 0.7, 0.05, 1.219, 0.009, 0.805, 0.007},
    ErrorRow{"S3A", 10, 400, 0.9, 0.05, 1.215, 0.01, 0.641, 0.006},
    ErrorRow{"S3A", 10, 800, 0, 0.05, 0.875, 0.007, 0.739, 0.006},
    ErrorRow{"S3A", 10, 800, 0.3, 0.05, 0.854, 0.007, 0.715, 0.006},
    ErrorRow{"S3A", 10, 800, 0.7, 0.05, 0.865, 0.008, 0.562, 0.004},
    ErrorRow{"S3A", 10, 800, 0.9, 0.05, 0.852, 0.008, 0.43, 0.004},
    ErrorRow{"S3A", 10, 1600, 0, 0.05, 0.623, 0.004, 0.541, 0.004},
    ErrorRow{"S3A", 10, 1600, 0.3, 0.05, 0.629, 0.005, 0.507, 0.004},
    ErrorRow{"S3A", 10, 1600, 0.7, 0.05, 0.626, 0.004, 0.4, 0.003},
    ErrorRow{"S3A", 10, 1600, 0.9, 0.05, 0.625, 0.005, 0.295, 0.003},
    ErrorRow{"S3A", 10, 3200, 0, 0.05, 0.447, 0.004, 0.392, 0.003},
    ErrorRow{"S3A", 10, 3200, 0.3, 0.05, 0.441, 0.004, 0.365, 0.003},
    ErrorRow{"S3A", 10, 3200, 0.7, 0.05, 0.448, 0.005, 0.284, 0.002},
    ErrorRow{"S3A", 10, 3200, 0.9, 0.05, 0.434, 0.004, 0.209, 0.001},
    ErrorRow{"S3A", 10, 6400, 0, 0.05, 0.323, 0.002, 0.281, 0.002},
    ErrorRow{"S3A", 10, 6400, 0.3, 0.05, 0.322, 0.002, 0.266, 0.002},
    ErrorRow{"S3A", 10, 6400, 0.7, 0.05, 0.321, 0.002, 0.202, 0.001},
    ErrorRow{"S3A", 10, 6400, 0.9, 0.05, 0.323, 0.003, 0.148, 0.001},
    ErrorRow{"S3A", 10, 12800, 0, 0.05, 0.234, 0.002, 0.203, 0.001},
    ErrorRow{"S3A", 10, 12800, 0.3, 0.05, 0.235, 0.002, 0.19, 0.001},
    ErrorRow{"S3A", 10, 12800, 0.7, 0.05, 0.236, 0.002, 0.146, 0.001},
    ErrorRow{"S3A", 10, 12800, 0.9, 0.05, 0.233, 0.002, 0.105, 0.001},
    ErrorRow{"S3A", 10, 200, 0.7, 0.005, 1.673, 0.014, 1.109, 0.009},
    ErrorRow{"S3A", 10, 200, 0.7, 0.1, 1.813, 0.018, 1.348, 0.011},
    ErrorRow{"S3A", 10, 200, 0.7, 0.2, 1.967, 0.015, 1.681, 0.022},
    ErrorRow{"S3A", 10, 200, 0.7, 0.3, 2.084, 0.016, 2.491, 0.05},
    ErrorRow{"S3A", 10, 400, 0.7, 0.005, 1.174, 0.011, 0.729, 0.007},
    ErrorRow{"S3A", 10, 400, 0.7, 0.1, 1.258, 0.008, 0.904, 0.007},
    ErrorRow{"S3A", 10, 400, 0.7, 0.2, 1.363, 0.012, 1.134, 0.012},
    ErrorRow{"S3A", 10, 400, 0.7, 0.3, 1.484, 0.013, 1.587, 0.026},
    ErrorRow{"S3A", 10, 800, 0.7, 0.005, 0.829, 0.007, 0.501, 0.004},
    ErrorRow{"S3A", 10, 800, 0.7, 0.1, 0.915, 0.008, 0.627, 0.005},
    ErrorRow{"S3A", 10, 800, 0.7, 0.2, 0.999, 0.008, 0.773, 0.006},
    ErrorRow{"S3A", 10, 800, 0.7, 0.3, 1.062, 0.007, 1.058, 0.015},
    ErrorRow{"S3A", 10, 1600, 0.7, 0.005, 0.606, 0.005, 0.356, 0.003},
    ErrorRow{"S3A", 10, 1600, 0.7, 0.1, 0.652, 0.005, 0.442, 0.003},
    ErrorRow{"S3A", 10, 1600, 0.7, 0.2, 0.706, 0.007, 0.55, 0.004},
    ErrorRow{"S3A", 10, 1600, 0.7, 0.3, 0.775, 0.007, 0.715, 0.006},
    ErrorRow{"S3A", 10, 3200, 0.7, 0.005, 0.427, 0.004, 0.247, 0.002},
    ErrorRow{"S3A", 10, 3200, 0.7, 0.1, 0.468, 0.005, 0.317, 0.002},
    ErrorRow{"S3A", 10, 3200, 0.7, 0.2, 0.51, 0.003, 0.38, 0.003},
    ErrorRow{"S3A", 10, 3200, 0.7, 0.3, 0.557, 0.005, 0.498, 0.004},
    ErrorRow{"S3A", 10, 6400, 0.7, 0.005, 0.312, 0.002, 0.18, 0.001},
    ErrorRow{"S3A", 10, 6400, 0.7, 0.1, 0.33, 0.002, 0.227, 0.002},
    ErrorRow{"S3A", 10, 6400, 0.7, 0.2, 0.369, 0.004, 0.272, 0.002},
    ErrorRow{"S3A", 10, 6400, 0.7, 0.3, 0.406, 0.003, 0.344, 0.003},
    ErrorRow{"S3A", 10, 12800, 0.7, 0.005, 0.22, 0.002, 0.129, 0.001},
    ErrorRow{"S3A", 10, 12800, 0.7, 0.1, 0.243, 0.002, 0.161, 0.001},
    ErrorRow{"S3A", 10, 12800, 0.7, 0.2, 0.261, 0.002, 0.192, 0.002},
    ErrorRow{"S3A", 10, 12800, 0.7, 0.3, 0.284, 0.003, 0.236, 0.002},
    ErrorRow{"S3B", 20, 50, 0, 0.05, 1.81, 0.012, 1.534, 0.01},
    ErrorRow{"S3B", 20, 50, 0.3, 0.05, 1.815, 0.012, 1.525, 0.01},
    ErrorRow{"S3B", 20, 50, 0.7, 0.05, 1.795, 0.012, 1.314, 0.01},
    ErrorRow{"S3B", 20, 50, 0.9, 0.05, 1.83, 0.015, 1.056, 0.009},
    ErrorRow{"S3B", 20, 100, 0, 0.05, 1.858, 0.011, 1.653, 0.011},
    ErrorRow{"S3B", 20, 100, 0.3, 0.05, 1.853, 0.011, 1.624, 0.011},
    ErrorRow{"S3B", 20, 100, 0.7, 0.05, 1.877, 0.009, 1.262, 0.009},
    ErrorRow{"S3B", 20, 100, 0.9, 0.05, 1.841, 0.013, 0.982, 0.007},
    ErrorRow{"S3B", 20, 200, 0, 0.05, 1.879, 0.006, 1.665, 0.007},
    ErrorRow{"S3B", 20, 200, 0.3, 0.05, 1.892, 0.01, 1.626, 0.007},
    ErrorRow{"S3B", 20, 200, 0.7, 0.05, 1.872, 0.005, 1.297, 0.006},
    ErrorRow{"S3B", 20, 200, 0.9, 0.05, 1.881, 0.01, 0.986, 0.007},
    ErrorRow{"S3B", 20, 400, 0, 0.05, 1.887, 0.016, 1.78, 0.008},
    ErrorRow{"S3B", 20, 400, 0.3, 0.05, 1.874, 0.014, 1.736, 0.008},
    ErrorRow{"S3B", 20, 400, 0.7, 0.05, 1.884, 0.016, 1.379, 0.008},
    ErrorRow{"S3B", 20, 400, 0.9, 0.05, 1.915, 0.017, 1.072, 0.007},
    ErrorRow{"S3B", 20, 800, 0, 0.05, 2.148, 0.004, 1.857, 0.006},
    ErrorRow{"S3B", 20, 800, 0.3, 0.05, 2.147, 0.004, 1.822, 0.006},
    ErrorRow{"S3B", 20, 800, 0.7, 0.05, 2.144, 0.005, 1.415, 0.01},
    ErrorRow{"S3B", 20, 800, 0.9, 0.05, 2.144, 0.005, 1.147, 0.008},
    ErrorRow{"S3B", 20, 50, 0.7, 0.005, 1.745, 0.008, 1.199, 0.01},
    ErrorRow{"S3B", 20, 50, 0.7, 0.1, 1.871, 0.015, 1.404, 0.012},
    ErrorRow{"S3B", 20, 50, 0.7, 0.2, 2.01, 0.015, 1.842, 0.013},
    ErrorRow{"S3B", 20, 50, 0.7, 0.3, 2.193, 0.012, 2.432, 0.02},
    ErrorRow{"S3B", 20, 100, 0.7, 0.005, 1.794, 0.015, 1.125, 0.007},
    ErrorRow{"S3B", 20, 100, 0.7, 0.1, 1.928, 0.007, 1.397, 0.01},
    ErrorRow{"S3B", 20, 100, 0.7, 0.2, 2.012, 0.011, 1.869, 0.017},
    ErrorRow{"S3B", 20, 100, 0.7, 0.3, 2.28, 0.018, 2.621, 0.018},
    ErrorRow{"S3B", 20, 200, 0.7, 0.005, 1.853, 0.005, 1.181, 0.009},
    ErrorRow{"S3B", 20, 200, 0.7, 0.1, 1.932, 0.012, 1.406, 0.009},
    ErrorRow{"S3B", 20, 200, 0.7, 0.2, 2.261, 0.014, 1.794, 0.019},
    ErrorRow{"S3B", 20, 200, 0.7, 0.3, 2.363, 0.009, 2.934, 0.03},
    ErrorRow{"S3B", 20, 400, 0.7, 0.005, 1.798, 0.006, 1.156, 0.006},
    ErrorRow{"S3B", 20, 400, 0.7, 0.1, 2.093, 0.017, 1.527, 0.01},
    ErrorRow{"S3B", 20, 400, 0.7, 0.2, 2.244, 0.007, 1.985, 0.023},
    ErrorRow{"S3B", 20, 400, 0.7, 0.3, 2.355, 0.014, 3.641, 0.061},
    ErrorRow{"S3B", 20, 800, 0.7, 0.005, 2.083, 0.013, 1.244, 0.006},
    ErrorRow{"S3B", 20, 800, 0.7, 0.1, 2.162, 0.005, 1.586, 0.007},
    ErrorRow{"S3B", 20, 800, 0.7, 0.2, 2.241, 0.01, 2.005, 0.019},
    ErrorRow{"S3B", 20, 800, 0.7, 0.3, 2.664, 0.01, 2.969, 0.033},
    ErrorRow{"S3B", 10, 50, 0, 0.05, 1.295, 0.011, 1.114, 0.009},
    ErrorRow{"S3B", 10, 50, 0.3, 0.05, 1.315, 0.011, 1.088, 0.009},
    ErrorRow{"S3B", 10, 50, 0.7, 0.05, 1.307, 0.012, 0.864, 0.008},
    ErrorRow{"S3B", 10, 50, 0.9, 0.05, 1.298, 0.012, 0.669, 0.007},
    ErrorRow{"S3B", 10, 100, 0, 0.05, 1.23, 0.008, 1.07, 0.008},
    ErrorRow{"S3B", 10, 100, 0.3, 0.05, 1.222, 0.01, 1.022, 0.008},
    ErrorRow{"S3B", 10, 100, 0.7, 0.05, 1.219, 0.009, 0.805, 0.007},
    ErrorRow{"S3B", 10, 100, 0.9, 0.05, 1.215, 0.01, 0.641, 0.006},
    ErrorRow{"S3B", 10, 200, 0, 0.05, 1.333, 0.009, 1.189, 0.007},
    ErrorRow{"S3B", 10, 200, 0.3, 0.05, 1.35, 0.011, 1.168, 0.007},
    ErrorRow{"S3B", 10, 200, 0.7, 0.05, 1.333, 0.01, 0.938, 0.006},
    ErrorRow{"S3B", 10, 200, 0.9, 0.05, 1.344, 0.011, 0.733, 0.006},
    ErrorRow{"S3B", 10, 400, 0, 0.05, 1.362, 0.012, 1.259, 0.01},
    ErrorRow{"S3B", 10, 400, 0.3, 0.05, 1.367, 0.013, 1.226, 0.009},
    ErrorRow{"S3B", 10, 400, 0.7, 0.05, 1.351, 0.012, 0.935, 0.006},
    ErrorRow{"S3B", 10, 400, 0.9, 0.05, 1.362, 0.014, 0.721, 0.006},
    ErrorRow{"S3B", 10, 800, 0, 0.05, 1.53, 0.004, 1.34, 0.006},
    ErrorRow{"S3B", 10, 800, 0.3, 0.05, 1.523, 0.006, 1.297, 0.006},
    ErrorRow{"S3B", 10, 800, 0.7, 0.05, 1.521, 0.007, 1.047, 0.007},
    ErrorRow{"S3B", 10, 800, 0.9, 0.05, 1.526, 0.007, 0.819, 0.006},
    ErrorRow{"S3B", 10, 50, 0.7, 0.005, 1.263, 0.01, 0.786, 0.007},
    ErrorRow{"S3B", 10, 50, 0.7, 0.1, 1.31, 0.011, 0.922, 0.009},
    ErrorRow{"S3B", 10, 50, 0.7, 0.2, 1.418, 0.014, 1.109, 0.01},
    ErrorRow{"S3B", 10, 50, 0.7, 0.3, 1.543, 0.012, 1.471, 0.014},
    ErrorRow{"S3B", 10, 100, 0.7, 0.005, 1.174, 0.011, 0.729, 0.007},
    ErrorRow{"S3B", 10, 100, 0.7, 0.1, 1.258, 0.008, 0.904, 0.007},
    ErrorRow{"S3B", 10, 100, 0.7, 0.2, 1.363, 0.012, 1.134, 0.012},
    ErrorRow{"S3B", 10, 100, 0.7, 0.3, 1.484, 0.013, 1.587, 0.026},
    ErrorRow{"S3B", 10, 200, 0.7, 0.005, 1.306, 0.007, 0.874, 0.007},
    ErrorRow{"S3B", 10, 200, 0.7, 0.1, 1.373, 0.013, 1.012, 0.008},
    ErrorRow{"S3B", 10, 200, 0.7, 0.2, 1.58, 0.012, 1.234, 0.01},
    ErrorRow{"S3B", 10, 200, 0.7, 0.3, 1.65, 0.009, 1.592, 0.024},
    ErrorRow{"S3B", 10, 400, 0.7, 0.005, 1.279, 0.007, 0.804, 0.005},
    ErrorRow{"S3B", 10, 400, 0.7, 0.1, 1.459, 0.014, 1.04, 0.007},
    ErrorRow{"S3B", 10, 400, 0.7, 0.2, 1.586, 0.007, 1.259, 0.01},
    ErrorRow{"S3B", 10, 400, 0.7, 0.3, 1.683, 0.013, 1.852, 0.084},
    ErrorRow{"S3B", 10, 800, 0.7, 0.005, 1.466, 0.011, 0.901, 0.005},
    ErrorRow{"S3B", 10, 800, 0.7, 0.1, 1.545, 0.006, 1.127, 0.006},
    ErrorRow{"S3B", 10, 800, 0.7, 0.2, 1.621, 0.01, 1.405, 0.011},
    ErrorRow{"S3B", 10, 800, 0.7, 0.3, 1.877, 0.011, 1.794, 0.028},
}};

/// Published model-comparison metrics for the three-stage estimator
/// (mean and standard error over 100 replications).
struct ModelRow
{
    int model;
    double missing;
    std::string_view rule;
    // pe, tpr_b, tnr_b, mcc_b, kll, tpr_theta, tnr_theta, mcc_theta
    std::array<double, 8> mean;
    std::array<double, 8> se;
};

inline constexpr std::array<ModelRow, 36> model_rows{{
    ModelRow{1, 0.01, "cv.min", {0.187, 1, 0.885, 0.486, 0.665, 1, 0.775, 0.443}, {0.004, 0, 0.003, 0.006, 0.038, 0, 0.014, 0.014}},
    ModelRow{1, 0.01, "cv.1se", {0.68, 1, 0.988, 0.87, 0.732, 1, 0.758, 0.416}, {0.02, 0, 0.001, 0.005, 0.036, 0, 0.016, 0.015}},
    ModelRow{1, 0.01, "bic", {0.351, 1, 0.971, 0.757, 0.533, 1, 0.804, 0.465}, {0.009, 0, 0.001, 0.005, 0.009, 0, 0.002, 0.003}},
    ModelRow{1, 0.10, "cv.min", {0.245, 1, 0.888, 0.49, 0.643, 1, 0.833, 0.499}, {0.004, 0, 0.003, 0.005, 0.032, 0, 0.009, 0.013}},
    ModelRow{1, 0.10, "cv.1se", {0.806, 1, 0.987, 0.87, 0.75, 1, 0.826, 0.489}, {0.023, 0, 0.001, 0.005, 0.035, 0, 0.009, 0.013}},
    ModelRow{1, 0.10, "bic", {0.406, 1, 0.962, 0.708, 0.773, 1, 0.798, 0.457}, {0.01, 0, 0.001, 0.005, 0.011, 0, 0.003, 0.003}},
    ModelRow{1, 0.20, "cv.min", {0.318, 1, 0.888, 0.49, 0.752, 1, 0.878, 0.572}, {0.006, 0, 0.003, 0.005, 0.027, 0, 0.005, 0.008}},
    ModelRow{1, 0.20, "cv.1se", {0.888, 1, 0.984, 0.852, 0.854, 1, 0.871, 0.559}, {0.025, 0, 0.001, 0.006, 0.033, 0, 0.005, 0.009}},
    ModelRow{1, 0.20, "bic", {0.522, 1, 0.958, 0.687, 1.204, 1, 0.79, 0.453}, {0.015, 0, 0.001, 0.005, 0.021, 0, 0.003, 0.003}},
    ModelRow{2, 0.01, "cv.min", {0.463, 1, 0.965, 0.468, 4.572, 1, 0.822, 0.365}, {0.007, 0, 0.001, 0.006, 0.208, 0, 0.009, 0.01}},
    ModelRow{2, 0.01, "cv.1se", {1.409, 0.988, 0.998, 0.925, 4.835, 1, 0.807, 0.35}, {0.038, 0.002, 0, 0.004, 0.199, 0, 0.01, 0.01}},
    ModelRow{2, 0.01, "bic", {0.832, 1, 0.995, 0.822, 2.248, 1, 0.92, 0.526}, {0.015, 0, 0, 0.005, 0.035, 0, 0.001, 0.003}},
    ModelRow{2, 0.10, "cv.min", {0.615, 1, 0.965, 0.466, 4.823, 1, 0.869, 0.426}, {0.009, 0, 0.001, 0.005, 0.21, 0, 0.006, 0.009}},
    ModelRow{2, 0.10, "cv.1se", {1.643, 0.99, 0.998, 0.904, 5.237, 1, 0.858, 0.409}, {0.045, 0.002, 0, 0.005, 0.22, 0, 0.007, 0.009}},
    ModelRow{2, 0.10, "bic", {1.052, 1, 0.994, 0.792, 3.205, 1, 0.917, 0.519}, {0.022, 0, 0, 0.006, 0.049, 0, 0.001, 0.003}},
    ModelRow{2, 0.20, "cv.min", {0.798, 1, 0.964, 0.457, 4.748, 1, 0.91, 0.503}, {0.012, 0, 0.001, 0.005, 0.153, 0, 0.003, 0.007}},
    ModelRow{2, 0.20, "cv.1se", {1.979, 0.986, 0.998, 0.899, 5.273, 1, 0.902, 0.485}, {0.051, 0.002, 0, 0.006, 0.173, 0, 0.004, 0.007}},
    ModelRow{2, 0.20, "bic", {1.246, 1, 0.992, 0.747, 4.347, 1, 0.918, 0.522}, {0.023, 0, 0, 0.006, 0.082, 0, 0.001, 0.003}},
    ModelRow{3, 0.01, "cv.min", {0.678, 1, 0.893, 0.499, 1.475, 1, 0.825, 0.489}, {0.011, 0, 0.002, 0.005, 0.064, 0, 0.013, 0.018}},
    ModelRow{3, 0.01, "cv.1se", {1.289, 0.971, 0.974, 0.762, 1.498, 1, 0.809, 0.468}, {0.024, 0.004, 0.001, 0.006, 0.059, 0, 0.013, 0.017}},
    ModelRow{3, 0.01, "bic", {1.225, 0.969, 0.976, 0.769, 0.659, 1, 0.976, 0.852}, {0.023, 0.004, 0.001, 0.005, 0.015, 0, 0.001, 0.005}},
    ModelRow{3, 0.10, "cv.min", {0.777, 1, 0.894, 0.504, 1.501, 1, 0.879, 0.572}, {0.013, 0, 0.002, 0.004, 0.057, 0, 0.008, 0.017}},
    ModelRow{3, 0.10, "cv.1se", {1.421, 0.964, 0.972, 0.748, 1.514, 1, 0.862, 0.542}, {0.027, 0.004, 0.001, 0.007, 0.051, 0, 0.009, 0.016}},
    ModelRow{3, 0.10, "bic", {1.351, 0.967, 0.974, 0.755, 0.833, 1, 0.971, 0.828}, {0.028, 0.004, 0.001, 0.005, 0.019, 0, 0.002, 0.007}},
    ModelRow{3, 0.20, "cv.min", {0.941, 1, 0.898, 0.511, 1.778, 1, 0.896, 0.605}, {0.015, 0, 0.002, 0.005, 0.069, 0, 0.009, 0.017}},
    ModelRow{3, 0.20, "cv.1se", {1.567, 0.958, 0.969, 0.728, 1.797, 1, 0.882, 0.576}, {0.03, 0.004, 0.001, 0.007, 0.068, 0, 0.009, 0.017}},
    ModelRow{3, 0.20, "bic", {1.503, 0.961, 0.969, 0.728, 1.054, 0.982, 0.971, 0.808}, {0.032, 0.004, 0.001, 0.005, 0.021, 0.003, 0.002, 0.006}},
    ModelRow{4, 0.01, "cv.min", {0.468, 1, 0.884, 0.484, 1.331, 0.96, 0.904, 0.799}, {0.008, 0, 0.002, 0.005, 0.046, 0.002, 0.009, 0.015}},
    ModelRow{4, 0.01, "cv.1se", {1.377, 0.968, 0.984, 0.826, 1.428, 0.952, 0.887, 0.765}, {0.039, 0.004, 0.001, 0.007, 0.048, 0.002, 0.01, 0.016}},
    ModelRow{4, 0.01, "bic", {0.909, 0.985, 0.973, 0.755, 1.183, 0.961, 0.913, 0.813}, {0.022, 0.002, 0.001, 0.006, 0.018, 0.002, 0.003, 0.005}},
    ModelRow{4, 0.10, "cv.min", {0.583, 1, 0.885, 0.486, 1.725, 0.936, 0.932, 0.828}, {0.01, 0, 0.002, 0.004, 0.05, 0.003, 0.007, 0.014}},
    ModelRow{4, 0.10, "cv.1se", {1.538, 0.962, 0.98, 0.8, 1.69, 0.927, 0.92, 0.801}, {0.042, 0.004, 0.001, 0.007, 0.043, 0.003, 0.007, 0.014}},
    ModelRow{4, 0.10, "bic", {1.042, 0.985, 0.965, 0.71, 1.678, 0.928, 0.899, 0.768}, {0.024, 0.002, 0.001, 0.006, 0.025, 0.003, 0.003, 0.006}},
    ModelRow{4, 0.20, "cv.min", {0.723, 1, 0.892, 0.499, 2.558, 0.903, 0.95, 0.831}, {0.012, 0, 0.002, 0.004, 0.068, 0.003, 0.005, 0.01}},
    ModelRow{4, 0.20, "cv.1se", {1.708, 0.958, 0.978, 0.768, 2.378, 0.893, 0.939, 0.807}, {0.044, 0.004, 0.001, 0.006, 0.06, 0.003, 0.006, 0.011}},
    ModelRow{4, 0.20, "bic", {1.187, 0.974, 0.957, 0.671, 2.769, 0.884, 0.882, 0.708}, {0.026, 0.003, 0.001, 0.005, 0.066, 0.003, 0.004, 0.007}},
}};

} // namespace missreg::reference
