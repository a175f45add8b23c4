#pragma once

#include <optional>
#include <vector>

namespace folbench::metrics {

/// Pearson correlation with population moments; nullopt if either side is
/// constant. Throws std::invalid_argument on length mismatch or n < 2.
std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y);

/// r_pb = (M1 - M0) / s_n · sqrt(n1·n0 / n²), s_n the population standard
/// deviation of `continuous`. nullopt when one class is empty or s_n = 0.
std::optional<double> point_biserial(const std::vector<int>& binary, const std::vector<double>& continuous);

}  // namespace folbench::metrics
