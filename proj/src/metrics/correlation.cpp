#include "folbench/metrics/correlation.hpp"

#include <cmath>
#include <stdexcept>

namespace folbench::metrics {

namespace {

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("vectors differ in length");
  if (a < 2) throw std::invalid_argument("need at least two observations");
}

}  // namespace

std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
  check_lengths(x.size(), y.size());
  const auto n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

std::optional<double> point_biserial(const std::vector<int>& binary, const std::vector<double>& continuous) {
  check_lengths(binary.size(), continuous.size());
  double sum1 = 0, sum0 = 0, mean = 0;
  std::size_t n1 = 0, n0 = 0;
  for (std::size_t i = 0; i < binary.size(); ++i) {
    if (binary[i] != 0 && binary[i] != 1) throw std::invalid_argument("binary vector must hold 0/1");
    if (binary[i]) {
      sum1 += continuous[i];
      ++n1;
    } else {
      sum0 += continuous[i];
      ++n0;
    }
    mean += continuous[i];
  }
  if (n1 == 0 || n0 == 0) return std::nullopt;
  const auto n = static_cast<double>(binary.size());
  mean /= n;
  double ss = 0;
  for (double v : continuous) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / n);
  if (sd == 0) return std::nullopt;
  const double m1 = sum1 / static_cast<double>(n1), m0 = sum0 / static_cast<double>(n0);
  return (m1 - m0) / sd * std::sqrt(static_cast<double>(n1) * static_cast<double>(n0) / (n * n));
}

}  // namespace folbench::metrics
