#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "mzv/error.hpp"
#include "mzv/numerics.hpp"

namespace mzv {

namespace {

void require_taylor_domain(double x) {
  if (!(std::abs(x) <= 0.6)) throw Error(ErrorKind::ArgumentOutOfRange, "Taylor routines need |x| <= 0.6");
}

// Geometric tail bound from the last five term magnitudes: the largest
// consecutive ratio stands in for the decay rate.
double tail_estimate(const std::vector<double>& mags) {
  const std::size_t n = mags.size();
  if (n < 5) return std::numeric_limits<double>::infinity();
  if (mags[n - 1] == 0.0 && mags[n - 2] == 0.0) return 0.0;
  double rho = 0.0;
  for (std::size_t i = n - 4; i < n; ++i) {
    if (mags[i - 1] == 0.0) return std::numeric_limits<double>::infinity();
    rho = std::max(rho, mags[i] / mags[i - 1]);
  }
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  return mags[n - 1] * rho / (1.0 - rho);
}

// sum_{m>=1} (-1)^{m-1} c_m x^m, stopping once the tail estimate is below
// tol/10 or at the cap.
template <class Coefficient>
Estimate alternating_x_series(double x, const EvalConfig& cfg, Coefficient coeff) {
  double sum = 0.0;
  double power = 1.0;
  double error = std::numeric_limits<double>::infinity();
  std::vector<double> mags;
  for (int m = 1; m <= cfg.taylor_M; ++m) {
    power *= -x;
    const double term = -coeff(m) * power;
    sum += term;
    mags.push_back(std::abs(term));
    error = tail_estimate(mags);
    if (error < cfg.tol / 10) break;
  }
  if (!(error <= cfg.tol))
    throw Error(ErrorKind::TruncationError,
                "x-series not converged after " + std::to_string(cfg.taylor_M) + " terms (tail " + std::to_string(error) + ")");
  return {sum, error};
}

class CoefficientMemo {
 public:
  double get(const Index& k, int m, const EvalConfig& cfg) {
    const auto key = std::make_pair(k, m);
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    const FormalSum expanded = circled_ast(FormalSum(Index::ones(m)), star_expand(hoffman_dual(k)));
    const double value = zeta_value(expanded, cfg);
    std::unique_lock lock(mutex_);
    values_.emplace(key, value);
    return value;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<Index, int>, double> values_;
};

CoefficientMemo& coefficient_memo() {
  static CoefficientMemo memo;
  return memo;
}

}  // namespace

Estimate f_ones(int l, double x, const EvalConfig& cfg) {
  if (l < 0) throw Error(ErrorKind::ArgumentOutOfRange, "f_ones needs l >= 0");
  if (l == 0) return {1.0, 0.0};
  require_taylor_domain(x);
  return alternating_x_series(x, cfg, [&](int n) { return zeta_value(Index::ones(l - 1).appended(n + 1), cfg); });
}

double kawashima_coefficient(const Index& k, int m, const EvalConfig& cfg) {
  if (k.empty()) throw Error(ErrorKind::EmptyIndex, "Kawashima function needs a non-empty index");
  if (m < 1) throw Error(ErrorKind::ArgumentOutOfRange, "Taylor coefficient order must be >= 1");
  return coefficient_memo().get(k, m, cfg);
}

Estimate f_taylor(const Index& k, double x, const EvalConfig& cfg) {
  if (k.empty()) throw Error(ErrorKind::EmptyIndex, "Kawashima function needs a non-empty index");
  require_taylor_domain(x);
  return alternating_x_series(x, cfg, [&](int m) { return kawashima_coefficient(k, m, cfg); });
}

double f_via_theorem(const Index& k, double x, double T, const EvalConfig& cfg) {
  if (k.empty()) throw Error(ErrorKind::EmptyIndex, "Kawashima function needs a non-empty index");
  if (!(x > -1.0)) throw Error(ErrorKind::ArgumentOutOfRange, "Hurwitz shift must be > -1");
  const std::size_t r = static_cast<std::size_t>(k.depth());
  const double shifted = T - kEulerGamma - digamma_1px(x);
  double total = 0.0;
  for (std::size_t j = 0; j <= r; ++j) {
    const double star = evaluate(z_star_classical(k.slice(0, j), cfg), T);
    const double hurwitz = evaluate(z_hurwitz(reverse(k.slice(j, r)), x, cfg), shifted);
    total += ((r - j) % 2 == 0 ? 1.0 : -1.0) * star * hurwitz;
  }
  return total;
}

double f_partial_oracle(const Index& k, double x, long N) {
  if (k.empty()) throw Error(ErrorKind::EmptyIndex, "Kawashima function needs a non-empty index");
  const std::size_t r = static_cast<std::size_t>(k.depth());
  long double total = 0.0L;
  for (std::size_t j = 0; j <= r; ++j) {
    const long double star = zeta_star_partial_real(k.slice(0, j), N);
    const long double hurwitz = zeta_partial_real(reverse(k.slice(j, r)), x, N);
    total += ((r - j) % 2 == 0 ? 1.0L : -1.0L) * star * hurwitz;
  }
  return static_cast<double>(total);
}

Rational f_partial_oracle(const Index& k, const Rational& x, long N) {
  if (k.empty()) throw Error(ErrorKind::EmptyIndex, "Kawashima function needs a non-empty index");
  const std::size_t r = static_cast<std::size_t>(k.depth());
  Rational total(0);
  for (std::size_t j = 0; j <= r; ++j) {
    Rational term = zeta_star_partial(k.slice(0, j), N) * hurwitz_partial(reverse(k.slice(j, r)), x, N);
    if ((r - j) % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

Estimate f_t(const Index& k, double x, double t, const EvalConfig& cfg) {
  if (k.empty()) throw Error(ErrorKind::EmptyIndex, "Kawashima function needs a non-empty index");
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::ArgumentOutOfRange, "f_t needs 0 <= t <= 1");
  require_taylor_domain(x);
  if (t == 1.0) return {0.0, 0.0};
  const Index dual = hoffman_dual(k);
  double hat_error = 0.0;
  EvalConfig inner = cfg;
  inner.tol = cfg.tol / 10;
  Estimate out = alternating_x_series(x, cfg, [&](int m) {
    const Estimate h = hatzeta(Index::ones(m), dual, 1.0 - t, inner);
    hat_error += h.error * std::pow(std::abs(x), m);
    return h.value;
  });
  out.error += hat_error;
  return out;
}

TaylorCoefficients taylor_hurwitz_coeffs(const Index& k, int M, const EvalConfig& cfg) {
  if (k.empty()) throw Error(ErrorKind::EmptyIndex, "Taylor coefficients need a non-empty index");
  if (!k.admissible()) throw Error(ErrorKind::NotAdmissible, "divergent index " + k.str());
  if (M < 0) throw Error(ErrorKind::ArgumentOutOfRange, "Taylor order must be >= 0");

  const Index dagger = duality_dual(k);
  const Word word = word_of_index(dagger);
  const FormalSum inner(minus_last(dagger));

  TaylorCoefficients out;
  out.values.resize(static_cast<std::size_t>(M + 1));
  const int checked = std::min(M, cfg.cross_check_order);
  for (int m = 0; m <= M; ++m) {
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    if (m <= checked) {
      // (a) constant term of the shuffle regularization of word(k^dagger) B^m.
      Word extended = word;
      for (int i = 0; i < m; ++i) extended = extended.appended('B');
      const double a = word_value(shuffle_reduce(extended).coeff(0));
      // (b) series form through the circled-ast product.
      const double b = sign * zeta_value(circled_ast(inner, star_expand(Index::ones(m + 1))), cfg);
      out.shuffle_route.push_back(a);
      out.series_route.push_back(b);
      out.max_disagreement = std::max(out.max_disagreement, std::abs(a - b));
      out.values[static_cast<std::size_t>(m)] = b;
    } else {
      out.values[static_cast<std::size_t>(m)] = word_value(shuffle_regularized_constant(word, m));
    }
  }
  if (out.max_disagreement > cfg.tol)
    throw Error(ErrorKind::CrossCheckFailure, "Taylor coefficient routes disagree by " + std::to_string(out.max_disagreement));
  return out;
}

}  // namespace mzv
