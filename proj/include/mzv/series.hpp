#pragma once

#include <cstddef>
#include <vector>

namespace mzv {

/// Truncated power series c_0 + c_1 y + ... + c_M y^M with real coefficients.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<double> coeffs) : c_(std::move(coeffs)) {}
  static PowerSeries one(int order);

  /// Highest stored power M.
  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  double operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0.0; }
  double& operator[](std::size_t i) { return c_[i]; }
  const std::vector<double>& coeffs() const noexcept { return c_; }

  PowerSeries truncated(int order) const;

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

 private:
  std::vector<double> c_;
};

/// exp of a series with zero constant term, through the order of the input.
PowerSeries exp_series(const PowerSeries& log_series);
/// 1/a for a_0 != 0.
PowerSeries reciprocal(const PowerSeries& a);

}  // namespace mzv
