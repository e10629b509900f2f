#pragma once

#include <vector>

#include "mzv/config.hpp"
#include "mzv/constant_cache.hpp"
#include "mzv/regularization.hpp"

namespace mzv {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// ---------------------------------------------------------------------------
// Partial sums over 0 < m_1 < ... < m_r < N (star: 0 < n_1 <= ... <= n_r < N).
// Exact versions use rational arithmetic; the empty index gives 1.

Rational zeta_partial(const Index& k, long N);
Rational zeta_star_partial(const Index& k, long N);
Rational hurwitz_partial(const Index& k, const Rational& x, long N);
Rational zeta_partial(const FormalSum& s, long N);
Rational zeta_star_partial(const FormalSum& s, long N);
Rational hurwitz_partial(const FormalSum& s, const Rational& x, long N);

double zeta_partial_real(const Index& k, double x, long N);
double zeta_star_partial_real(const Index& k, long N);

// ---------------------------------------------------------------------------
// Convergent values.

/// I(0; w; 1) where w starts with B and ends with A, the first B carrying
/// the factor u^x. This is zeta^{(x)} of the index encoded by w.
double word_integral(const Word& w, double x = 0.0);

/// zeta(k) for admissible indices, extended linearly; the empty index is 1.
double zeta_value(const FormalSum& s, const EvalConfig& cfg = {});
double zeta_value(const Index& k, const EvalConfig& cfg = {});
/// Hurwitz value sum over 0<m_1<...<m_r of prod (m_i + x)^{-k_i}, x > -1.
double hurwitz_zeta_value(const FormalSum& s, double x, const EvalConfig& cfg = {});
double hurwitz_zeta_value(const Index& k, double x, const EvalConfig& cfg = {});
double zeta_star_value(const Index& k, const EvalConfig& cfg = {});
/// Classical values of the words in s.
double word_value(const WordSum& s);

/// psi(1 + x) for x > -1.
double digamma_1px(double x);

/// Li_k(t) and Li_k^{(x)}(t) for 0 <= t <= 0.95.
Estimate li(const Index& k, double t, const EvalConfig& cfg = {});
Estimate li_hurwitz(const Index& k, double x, double t, const EvalConfig& cfg = {});
/// Same series without the domain guard; stops at max_terms.
Estimate li_series(const Index& k, double x, double t, double tol, long max_terms);

/// hat-zeta(k; l; t) with the power of t on the innermost n_1, 0 <= t <= 1.
Estimate hatzeta(const Index& k, const Index& l, double t, const EvalConfig& cfg = {});

// ---------------------------------------------------------------------------
// Generating series and regularized polynomials.

/// A(y) = exp(sum_{n>=2} (-1)^n zeta(n) y^n / n) through y^M.
PowerSeries a_series(int M, const EvalConfig& cfg = {});
/// Gamma(1+x) Gamma(1+y) / Gamma(1+x+y) through y^M.
PowerSeries gamma_ratio_series(double x, int M, const EvalConfig& cfg = {});
/// Gamma(1+x) e^{psi(1+x) y} / Gamma(1+x+y) through y^M.
PowerSeries hurwitz_genfun_series(double x, int M, const EvalConfig& cfg = {});

/// Numeric Z_*(k;T) / Z_*^{(x)}(k;T): symbolic polynomial with classical
/// or Hurwitz coefficient values.
TPolynomial z_classical(const Index& k, const EvalConfig& cfg = {});
TPolynomial z_hurwitz(const Index& k, double x, const EvalConfig& cfg = {});
TPolynomial z_star_classical(const Index& k, const EvalConfig& cfg = {});

/// P^{(x)}(k;T) from the generating series in y.
TPolynomial p_hurwitz(const Index& k, double x, const EvalConfig& cfg = {});

/// sum_j (-1)^j zeta^{(x)}(c ⊛ (1^{j+1})^star) y^j through y^M.
PowerSeries core_series(const Index& c, double x, int M, const EvalConfig& cfg = {});

// ---------------------------------------------------------------------------
// Kawashima function.

/// F(1^l; x) = sum_n (-1)^{n-1} zeta(1^{l-1}, n+1) x^n, and 1 for l = 0.
Estimate f_ones(int l, double x, const EvalConfig& cfg = {});
/// Taylor coefficient zeta((1^m) ⊛ (k^vee)^star) of F(k;x), m >= 1.
double kawashima_coefficient(const Index& k, int m, const EvalConfig& cfg = {});
/// F(k;x) from its Taylor series.
Estimate f_taylor(const Index& k, double x, const EvalConfig& cfg = {});
/// F(k;x) from the regularized-polynomial formula at a chosen T.
double f_via_theorem(const Index& k, double x, double T, const EvalConfig& cfg = {});
/// Finite alternating sum of star and Hurwitz partial sums at cutoff N.
double f_partial_oracle(const Index& k, double x, long N);
Rational f_partial_oracle(const Index& k, const Rational& x, long N);
/// F(k;x;t) = sum_m (-1)^{m-1} hatzeta((1^m); k^vee; 1-t) x^m.
Estimate f_t(const Index& k, double x, double t, const EvalConfig& cfg = {});

struct TaylorCoefficients {
  /// zeta^{(x)}(k) = sum_m values[m] x^m.
  std::vector<double> values;
  /// Route (a), shuffle regularization, and route (b), the circled-ast
  /// series, for m <= cross_check_order.
  std::vector<double> shuffle_route;
  std::vector<double> series_route;
  double max_disagreement = 0.0;
};

/// Coefficients m = 0..M of the x-expansion of zeta^{(x)}(k). Throws
/// CrossCheckFailure if the two routes disagree by more than cfg.tol.
TaylorCoefficients taylor_hurwitz_coeffs(const Index& k, int M, const EvalConfig& cfg = {});

}  // namespace mzv
