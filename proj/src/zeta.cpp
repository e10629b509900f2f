#include <array>
#include <cmath>

#include "mzv/error.hpp"
#include "mzv/numerics.hpp"

namespace mzv {

namespace {

// Terms of the power series kept when evaluating at t = 1/2. Coefficients of
// the prefix series stay bounded, so the tail is below 2^{-kTerms} times a
// small constant.
constexpr int kTerms = 110;

// Power series sum_{m>=1} c_m t^{m+shift} of I(0; letters; t), built one letter
// at a time; the first letter must be B and carries u^shift.
class PrefixSeries {
 public:
  explicit PrefixSeries(double shift) : shift_(shift) {}

  void push(char letter) {
    if (!started_) {
      for (int m = 1; m <= kTerms; ++m) c_[m] = 1.0 / (m + shift_);
      started_ = true;
      return;
    }
    if (letter == 'A') {
      for (int m = 1; m <= kTerms; ++m) c_[m] /= (m + shift_);
    } else {
      double run = 0.0;
      for (int m = 1; m <= kTerms; ++m) {
        const double old = c_[m];
        c_[m] = run / (m + shift_);
        run += old;
      }
    }
  }

  double at_half() const {
    double acc = 0.0;
    double power = 1.0;
    for (int m = 1; m <= kTerms; ++m) {
      power *= 0.5;
      acc += c_[m] * power;
    }
    return shift_ == 0.0 ? acc : acc * std::exp2(-shift_);
  }

  const std::array<double, kTerms + 1>& coeffs() const { return c_; }

 private:
  double shift_;
  bool started_ = false;
  std::array<double, kTerms + 1> c_{};
};

double precision_tag(double value) {
  const double err = 1e-14 * std::max(1.0, std::abs(value));
  return std::pow(10.0, std::ceil(std::log10(err)));
}

void require_admissible(const Index& k) {
  if (!k.admissible()) throw Error(ErrorKind::NotAdmissible, "divergent index " + k.str());
}

ConstantCache& cache_of(const EvalConfig& cfg) { return cfg.cache ? *cfg.cache : default_cache(); }

}  // namespace

double word_integral(const Word& w, double x) {
  const std::size_t n = w.size();
  if (n < 2 || w[0] != 'B' || w.back() != 'A')
    throw Error(ErrorKind::NotAdmissible, "word integral needs B...A, got \"" + w.str() + "\"");
  if (!(x > -1.0)) throw Error(ErrorKind::ArgumentOutOfRange, "Hurwitz shift must be > -1");

  // Split the path at 1/2: I(0;w;1) = sum_j I(0;w_1..w_j;1/2) I(1/2;w_{j+1}..w_n;1).
  // The upper pieces are reflected by u -> 1-u, which reverses the word and
  // swaps the letters; the Hurwitz form u^x du/(1-u) becomes (1-v)^x dv/v.
  std::vector<double> lower(n + 1, 1.0);
  PrefixSeries prefix(x);
  for (std::size_t j = 1; j <= n; ++j) {
    prefix.push(w[j - 1]);
    lower[j] = prefix.at_half();
  }

  const Word reflected = dual_word(w);
  std::vector<double> upper(n + 1, 1.0);
  PrefixSeries suffix(0.0);
  for (std::size_t i = 1; i < n; ++i) {
    suffix.push(reflected[i - 1]);
    upper[i] = suffix.at_half();
  }

  // Whole word on [1/2, 1]: integrate (1-v)^x G(v) dv / v over [0, 1/2].
  const auto& g = suffix.coeffs();
  std::array<double, kTerms + 1> binom{};
  binom[0] = 1.0;
  for (int i = 1; i <= kTerms; ++i) binom[i] = binom[i - 1] * (i - 1 - x) / i;
  double whole = 0.0;
  double power = 1.0;
  for (int N = 1; N <= kTerms; ++N) {
    power *= 0.5;
    double h = 0.0;
    for (int i = 0; i < N; ++i) h += binom[i] * g[N - i];
    whole += h * power / N;
  }

  double total = whole;
  for (std::size_t j = 1; j <= n; ++j) total += lower[j] * upper[n - j];
  return total;
}

double zeta_value(const Index& k, const EvalConfig& cfg) {
  if (k.empty()) return 1.0;
  require_admissible(k);
  auto& cache = cache_of(cfg);
  const std::string context = ConstantCache::classical_context();
  if (auto hit = cache.lookup(k, context, std::max(cfg.tol, 1e-13))) return *hit;
  const double value = word_integral(word_of_index(k), 0.0);
  cache.store(k, context, precision_tag(value), value);
  return value;
}

double zeta_value(const FormalSum& s, const EvalConfig& cfg) {
  double acc = 0.0;
  for (const auto& [k, c] : s) acc += to_double(c) * zeta_value(k, cfg);
  return acc;
}

double hurwitz_zeta_value(const Index& k, double x, const EvalConfig& cfg) {
  if (x == 0.0) return zeta_value(k, cfg);
  if (!(x > -1.0)) throw Error(ErrorKind::ArgumentOutOfRange, "Hurwitz shift must be > -1");
  if (k.empty()) return 1.0;
  require_admissible(k);
  auto& cache = cache_of(cfg);
  const std::string context = ConstantCache::hurwitz_context(x);
  if (auto hit = cache.lookup(k, context, std::max(cfg.tol, 1e-13))) return *hit;
  const double value = word_integral(word_of_index(k), x);
  cache.store(k, context, precision_tag(value), value);
  return value;
}

double hurwitz_zeta_value(const FormalSum& s, double x, const EvalConfig& cfg) {
  double acc = 0.0;
  for (const auto& [k, c] : s) acc += to_double(c) * hurwitz_zeta_value(k, x, cfg);
  return acc;
}

double zeta_star_value(const Index& k, const EvalConfig& cfg) {
  if (k.empty()) return 1.0;
  return zeta_value(star_expand(k), cfg);
}

double word_value(const WordSum& s) {
  double acc = 0.0;
  for (const auto& [w, c] : s) acc += to_double(c) * (w.empty() ? 1.0 : word_integral(w, 0.0));
  return acc;
}

double digamma_1px(double x) {
  if (!(x > -1.0)) throw Error(ErrorKind::ArgumentOutOfRange, "digamma_1px needs x > -1");
  long double z = 1.0L + x;
  long double acc = 0.0L;
  while (z < 16.0L) {
    acc -= 1.0L / z;
    z += 1.0L;
  }
  const long double inv2 = 1.0L / (z * z);
  // Asymptotic series with Bernoulli numbers B_2..B_12.
  long double tail = inv2 * (1.0L / 12 - inv2 * (1.0L / 120 - inv2 * (1.0L / 252 - inv2 * (1.0L / 240 - inv2 * (1.0L / 132 - inv2 * 691.0L / 32760)))));
  acc += std::log(z) - 0.5L / z - tail;
  return static_cast<double>(acc);
}

Estimate li_series(const Index& k, double x, double t, double tol, long max_terms) {
  if (k.empty()) return {1.0, 0.0};
  if (t == 0.0) return {0.0, 0.0};
  const int r = k.depth();
  std::vector<long double> acc(static_cast<std::size_t>(r), 0.0L);
  acc[0] = 1.0L;
  long double sum = 0.0L;
  long double power = std::pow(static_cast<long double>(t), 1.0L + x);  // t^{n+x}
  double error = 0.0;
  for (long n = 1;; ++n) {
    const long double base = static_cast<long double>(n) + x;
    const long double term = acc[static_cast<std::size_t>(r - 1)] * std::pow(base, -k.back()) * power;
    sum += term;
    for (int i = r - 1; i >= 1; --i) acc[static_cast<std::size_t>(i)] += acc[static_cast<std::size_t>(i - 1)] * std::pow(base, -k[static_cast<std::size_t>(i - 1)]);
    // Terms decay like t^n up to slowly varying factors.
    error = static_cast<double>(2.0L * std::abs(term) * t / (1.0L - t));
    if (n >= 8 && error < tol / 10) break;
    if (n >= max_terms) break;
    power *= t;
  }
  return {static_cast<double>(sum), error};
}

Estimate li(const Index& k, double t, const EvalConfig& cfg) { return li_hurwitz(k, 0.0, t, cfg); }

Estimate li_hurwitz(const Index& k, double x, double t, const EvalConfig& cfg) {
  if (!(t >= 0.0 && t <= 0.95)) throw Error(ErrorKind::ArgumentOutOfRange, "polylog argument must lie in [0, 0.95]");
  if (!(x > -1.0)) throw Error(ErrorKind::ArgumentOutOfRange, "Hurwitz shift must be > -1");
  return li_series(k, x, t, cfg.tol, 1'000'000);
}

Estimate hatzeta(const Index& k, const Index& l, double t, const EvalConfig& cfg) {
  if (k.empty() || l.empty()) throw Error(ErrorKind::EmptyIndex, "hatzeta needs non-empty k and l");
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::ArgumentOutOfRange, "hatzeta needs 0 <= t <= 1");
  if (t == 0.0) return {0.0, 0.0};
  if (t == 1.0) {
    const double v = zeta_value(circled_ast(FormalSum(k), star_expand(l)), cfg);
    return {v, precision_tag(v)};
  }

  const int r = k.depth();
  const int s = l.depth();
  const double bound = std::max(1.0, zeta_value(circled_ast(FormalSum(k), star_expand(l)), cfg));
  const double wanted = cfg.tol * (1.0 - t) / (10.0 * bound);
  long M = static_cast<long>(std::ceil(std::log(wanted) / std::log(t))) + 16;
  M = std::max(M, 32L);
  if (M > 5'000'000) throw Error(ErrorKind::TruncationError, "hatzeta argument too close to 1 for series evaluation");

  // Coefficients of t^n, innermost level first: the single-part tail l_s is
  // Li_{k_1..k_r + l_s}; each further part l_i turns the coefficients into
  // n^{-l_i} times the tail sum of the previous level.
  std::vector<double> h(static_cast<std::size_t>(M + 1), 0.0);
  {
    std::vector<long double> acc(static_cast<std::size_t>(r), 0.0L);
    acc[0] = 1.0L;
    const int outer = k.back() + l.back();
    for (long n = 1; n <= M; ++n) {
      const long double base = static_cast<long double>(n);
      h[static_cast<std::size_t>(n)] = static_cast<double>(acc[static_cast<std::size_t>(r - 1)] * std::pow(base, -outer));
      for (int i = r - 1; i >= 1; --i) acc[static_cast<std::size_t>(i)] += acc[static_cast<std::size_t>(i - 1)] * std::pow(base, -k[static_cast<std::size_t>(i - 1)]);
    }
  }
  for (int i = s - 2; i >= 0; --i) {
    const Index rest = l.slice(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(s));
    const long double total = zeta_value(circled_ast(FormalSum(k), star_expand(rest)), cfg);
    long double partial = 0.0L;
    for (long n = 1; n <= M; ++n) {
      const long double previous = h[static_cast<std::size_t>(n)];
      h[static_cast<std::size_t>(n)] = static_cast<double>((total - partial) * std::pow(static_cast<long double>(n), -l[static_cast<std::size_t>(i)]));
      partial += previous;
    }
  }

  long double sum = 0.0L;
  long double power = 1.0L;
  for (long n = 1; n <= M; ++n) {
    power *= t;
    sum += h[static_cast<std::size_t>(n)] * power;
  }
  const double error = std::abs(h[static_cast<std::size_t>(M)]) * static_cast<double>(power) * t / (1.0 - t) + 1e-15;
  return {static_cast<double>(sum), error};
}

}  // namespace mzv
