#include <cmath>

#include "mzv/error.hpp"
#include "mzv/numerics.hpp"

namespace mzv {

namespace {

void require_order(int M) {
  if (M < 0) throw Error(ErrorKind::ArgumentOutOfRange, "series order must be >= 0");
}

double single_zeta(int n, const EvalConfig& cfg) { return zeta_value(Index({n}), cfg); }

double euler_plus_digamma(double x) { return x == 0.0 ? 0.0 : kEulerGamma + digamma_1px(x); }

}  // namespace

PowerSeries a_series(int M, const EvalConfig& cfg) {
  require_order(M);
  std::vector<double> log(static_cast<std::size_t>(M + 1), 0.0);
  for (int n = 2; n <= M; ++n) log[static_cast<std::size_t>(n)] = (n % 2 == 0 ? 1.0 : -1.0) * single_zeta(n, cfg) / n;
  return exp_series(PowerSeries(std::move(log)));
}

// log Gamma(1+y) - log Gamma(1+x+y) + log Gamma(1+x) expanded around y = 0:
// the polygamma values at 1+x are Hurwitz single zetas.
PowerSeries gamma_ratio_series(double x, int M, const EvalConfig& cfg) {
  require_order(M);
  std::vector<double> log(static_cast<std::size_t>(M + 1), 0.0);
  if (M >= 1) log[1] = -euler_plus_digamma(x);
  for (int n = 2; n <= M; ++n) {
    const double diff = single_zeta(n, cfg) - hurwitz_zeta_value(Index({n}), x, cfg);
    log[static_cast<std::size_t>(n)] = (n % 2 == 0 ? 1.0 : -1.0) * diff / n;
  }
  return exp_series(PowerSeries(std::move(log)));
}

PowerSeries hurwitz_genfun_series(double x, int M, const EvalConfig& cfg) {
  require_order(M);
  std::vector<double> log(static_cast<std::size_t>(M + 1), 0.0);
  for (int n = 2; n <= M; ++n)
    log[static_cast<std::size_t>(n)] = (n % 2 == 0 ? -1.0 : 1.0) * hurwitz_zeta_value(Index({n}), x, cfg) / n;
  return exp_series(PowerSeries(std::move(log)));
}

TPolynomial z_classical(const Index& k, const EvalConfig& cfg) {
  return evaluate_coefficients(stuffle_reduce(k), [&cfg](const FormalSum& s) { return zeta_value(s, cfg); });
}

TPolynomial z_hurwitz(const Index& k, double x, const EvalConfig& cfg) {
  return evaluate_coefficients(stuffle_reduce(k), [&cfg, x](const FormalSum& s) { return hurwitz_zeta_value(s, x, cfg); });
}

TPolynomial z_star_classical(const Index& k, const EvalConfig& cfg) {
  return evaluate_coefficients(z_star_star(k), [&cfg](const FormalSum& s) { return zeta_value(s, cfg); });
}

PowerSeries core_series(const Index& c, double x, int M, const EvalConfig& cfg) {
  require_order(M);
  if (c.empty()) throw Error(ErrorKind::EmptyIndex, "core_series needs a non-empty index");
  std::vector<double> out(static_cast<std::size_t>(M + 1), 0.0);
  for (int j = 0; j <= M; ++j) {
    const FormalSum expanded = circled_ast(FormalSum(c), star_expand(Index::ones(j + 1)));
    out[static_cast<std::size_t>(j)] = (j % 2 == 0 ? 1.0 : -1.0) * hurwitz_zeta_value(expanded, x, cfg);
  }
  return PowerSeries(std::move(out));
}

TPolynomial p_hurwitz(const Index& k, double x, const EvalConfig& cfg) {
  if (!(x > -1.0)) throw Error(ErrorKind::ArgumentOutOfRange, "Hurwitz shift must be > -1");
  if (k.empty()) return TPolynomial::constant(1.0);
  const auto [core, m] = strip_trailing_ones(k);
  const PowerSeries gamma = gamma_ratio_series(x, m, cfg);
  const PowerSeries s = core.empty() ? PowerSeries::one(m) : core_series(minus_last(core), x, m, cfg);
  const PowerSeries product = s * gamma;
  // [y^m] of S(y) G(y) e^{Ty}: the T^j/j! coefficient is [y^{m-j}](S G).
  std::vector<double> coeffs(static_cast<std::size_t>(m + 1));
  for (int j = 0; j <= m; ++j) coeffs[static_cast<std::size_t>(j)] = product[static_cast<std::size_t>(m - j)];
  return TPolynomial(std::move(coeffs));
}

}  // namespace mzv
