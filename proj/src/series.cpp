#include "mzv/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzv {

PowerSeries PowerSeries::one(int order) {
  std::vector<double> c(static_cast<std::size_t>(order + 1), 0.0);
  c[0] = 1.0;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncated(int order) const {
  std::vector<double> c(static_cast<std::size_t>(order + 1), 0.0);
  for (std::size_t i = 0; i < c.size() && i < c_.size(); ++i) c[i] = c_[i];
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  if (order < 0) return PowerSeries();
  std::vector<double> c(static_cast<std::size_t>(order + 1), 0.0);
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) c[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
  }
  return PowerSeries(std::move(c));
}

PowerSeries exp_series(const PowerSeries& g) {
  if (g.order() < 0) return PowerSeries();
  if (g[0] != 0.0) throw std::invalid_argument("exp_series needs a zero constant term");
  // f = exp(g) solves f' = g' f: n f_n = sum_{k=1}^n k g_k f_{n-k}.
  const int order = g.order();
  std::vector<double> f(static_cast<std::size_t>(order + 1), 0.0);
  f[0] = 1.0;
  for (int n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += k * g[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(n - k)];
    f[static_cast<std::size_t>(n)] = acc / n;
  }
  return PowerSeries(std::move(f));
}

PowerSeries reciprocal(const PowerSeries& a) {
  if (a.order() < 0 || a[0] == 0.0) throw std::invalid_argument("reciprocal needs a unit series");
  const int order = a.order();
  std::vector<double> b(static_cast<std::size_t>(order + 1), 0.0);
  b[0] = 1.0 / a[0];
  for (int n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
    b[static_cast<std::size_t>(n)] = -acc / a[0];
  }
  return PowerSeries(std::move(b));
}

}  // namespace mzv
