#include "mzv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "mzv/error.hpp"
#include "mzv/numerics.hpp"

namespace mzv::verify {

namespace {

struct SuiteInfo {
  std::string name;
  std::string anchor;
  SuiteSpec defaults;
};

const std::vector<SuiteInfo>& registry() {
  static const std::vector<SuiteInfo> suites = {
      {"stuffle-exact", "truncated sums obey the stuffle product: zeta_N(k) zeta_N(l) = zeta_N(k*l), star values with bar-stuffle, Hurwitz sums at x=1/3",
       {"stuffle-exact", 5, {}, {}, 0.0, 50, 0}},
      {"reduce", "regularized polynomials round-trip: T -> [1] under stuffle, T -> [B] under shuffle",
       {"reduce", 6, {}, {}, 0.0, 0, 0}},
      {"constants", "numeric constants: zeta(2) = pi^2/6, zeta(1,2) = zeta(3), duality zeta(k) = zeta(k^dagger), stuffle at infinity, Hurwitz partial-sum asymptotics",
       {"constants", 6, {0.0, 0.3}, {}, 1e-6, 10000, 0}},
      {"regfund", "P^(x)(k;T) = rho(Z_*^(x)(k;T - gamma - psi(1+x)))",
       {"regfund", 4, {0.0, 0.25, -0.3}, {}, 1e-5, 0, 0}},
      {"genfun", "generating series over trailing ones: sum_m Z_*^(x)(k_+,1^m;T) y^m and sum_m P^(x)(k_+,1^m;T) y^m",
       {"genfun", 3, {0.3}, {0.99, 0.999, 0.9999}, 1e-5, 0, 5}},
      {"aomoto", "sum_l (-1)^l F(1^l;x) y^l = Gamma(1+x) Gamma(1+y) / Gamma(1+x+y)",
       {"aomoto", 0, {0.2, 0.5}, {}, 1e-6, 0, 5}},
      {"kawbyreg", "F(k;x) = sum_j (-1)^(r-j) Z_*^star(k_1..k_j;T) Z_*^(x)(k_r..k_(j+1);T - gamma - psi(1+x))",
       {"kawbyreg", 4, {0.3, -0.2}, {}, 1e-4, 10000, 0}},
      {"kawashima", "Kawashima relation: sum_(p+q=m) zeta((1^p) o* (k^v)^star) zeta((1^q) o* (l^v)^star) = -zeta((1^m) o* ((k bar* l)^v)^star)",
       {"kawashima", 2, {}, {}, 1e-4, 0, 4}},
      {"kawstuf", "F(k;x) F(l;x) = F(k bar* l;x)",
       {"kawstuf", 2, {0.3}, {}, 1e-4, 0, 0}},
      {"xecu", "Li_k^(x)(t) + (-1)^r F(k_r..k_1;x;t) = sum_j (-1)^j F(k_j..k_1;x) Li_(k_(j+1)..k_r)(t)",
       {"xecu", 3, {0.3}, {0.5}, 1e-5, 0, 0}},
      {"zstarbyf", "Z_*^(x)(k;T - gamma - psi(1+x)) = sum_j (-1)^j F(k_j..k_1;x) Z_*(k_(j+1)..k_r;T)",
       {"zstarbyf", 3, {0.3, -0.2}, {}, 1e-6, 0, 0}},
      {"remark1", "F formula specialized at T = 0 and T = gamma + psi(1+x); no regularization when every part exceeds 1",
       {"remark1", 4, {0.3, -0.2}, {}, 1e-7, 0, 0}},
      {"oracle-f", "F(k;x) as the limit of sum_j (-1)^(r-j) zeta_N^star(k_1..k_j) zeta_N^(x)(k_r..k_(j+1))",
       {"oracle-f", 4, {0.3}, {}, 1e-3, 12, 0}},
      {"taylor", "zeta^(x)(k) = sum_m zeta_sh(k^dagger,1^m) x^m and zeta_sh(k^dagger,1^m) = (-1)^m zeta((k^dagger)_- o* (1^(m+1))^star)",
       {"taylor", 4, {0.2}, {}, 1e-5, 0, 40}},
      {"andipode", "sum_j (-1)^(r-j) Z_*^star(k_1..k_j;T) Z_*(k_r..k_(j+1);T) = delta_(r,0)",
       {"andipode", 5, {}, {}, 1e-8, 0, 0}},
      {"deriv", "t-derivatives of F(k;x;t) and of hat-zeta(k;l;t)",
       {"deriv", 3, {0.3}, {0.5}, 1e-4, 0, 0}},
  };
  return suites;
}

const SuiteInfo& info(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  throw Error(ErrorKind::UsageError, "unknown suite \"" + name + "\"");
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double sign_of(std::size_t n) { return n % 2 == 0 ? 1.0 : -1.0; }

// Collects checks in call order, which is the canonical report order.
class Recorder {
 public:
  explicit Recorder(CheckReport& report) : report_(report) {}

  void compare(std::string id, Json inputs, double lhs, double rhs, double tol) {
    Check c;
    c.id = std::move(id);
    c.inputs = std::move(inputs);
    c.lhs = lhs;
    c.rhs = rhs;
    c.abs_diff = std::abs(lhs - rhs);
    c.tol = tol;
    c.pass = std::isfinite(c.abs_diff) && c.abs_diff <= tol;
    report_.checks.push_back(std::move(c));
  }

  void exact(std::string id, Json inputs, const Rational& lhs, const Rational& rhs) {
    Check c;
    c.id = std::move(id);
    c.inputs = std::move(inputs);
    c.lhs = to_double(lhs);
    c.rhs = to_double(rhs);
    const Rational diff = lhs - rhs;
    c.abs_diff = std::abs(to_double(diff));
    c.tol = 0.0;
    c.pass = diff == 0;
    if (!c.pass) c.note = "exact difference " + format_rational(diff);
    report_.checks.push_back(std::move(c));
  }

  /// Coefficientwise comparison in T.
  void polynomial(const std::string& id, const Json& inputs, const TPolynomial& lhs, const TPolynomial& rhs, double tol) {
    const int top = std::max({lhs.degree(), rhs.degree(), 0});
    for (int j = 0; j <= top; ++j) compare(id + "/T^" + std::to_string(j), inputs, lhs.coeff(j), rhs.coeff(j), tol);
  }

  /// Errors must shrink along the sequence (or sit below floor). Reports the
  /// last two errors as lhs and rhs.
  void decreasing(std::string id, Json inputs, const std::vector<double>& errors, double floor) {
    bool ok = true;
    std::string trail;
    for (std::size_t i = 0; i < errors.size(); ++i) {
      trail += (i ? ", " : "") + fmt_double(errors[i]);
      if (i > 0 && !(errors[i] < errors[i - 1] || errors[i] <= floor)) ok = false;
      if (!std::isfinite(errors[i])) ok = false;
    }
    Check c;
    c.id = std::move(id);
    c.inputs = std::move(inputs);
    c.lhs = errors.empty() ? 0.0 : errors.back();
    c.rhs = errors.size() < 2 ? 0.0 : errors[errors.size() - 2];
    c.abs_diff = c.lhs;
    c.tol = floor;
    c.pass = ok;
    c.note = "errors along the sequence: " + trail;
    report_.checks.push_back(std::move(c));
  }

  void failure(std::string id, Json inputs, const std::string& what, double tol) {
    Check c;
    c.id = std::move(id);
    c.inputs = std::move(inputs);
    c.lhs = std::nan("");
    c.rhs = std::nan("");
    c.abs_diff = std::nan("");
    c.tol = tol;
    c.pass = false;
    c.note = what;
    report_.checks.push_back(std::move(c));
  }

  template <class Body>
  void guard(const std::string& id, const Json& inputs, double tol, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      failure(id, inputs, e.what(), tol);
    }
  }

 private:
  CheckReport& report_;
};

Json with_x(const Index& k, double x) { return Json{{"k", k.str()}, {"x", x}}; }

// F(k_j..k_1;x) for the reversed prefix of length j; F of the empty index is 1.
double f_reversed_prefix(const Index& k, std::size_t j, double x, const EvalConfig& cfg) {
  if (j == 0) return 1.0;
  return f_taylor(reverse(k.slice(0, j)), x, cfg).value;
}

double euler_plus_digamma(double x) { return kEulerGamma + digamma_1px(x); }

TPolynomial from_series(const PowerSeries& s, int m) {
  // [y^m] of s(y) e^{Ty}: coefficient of T^j/j! is s_{m-j}.
  std::vector<double> c(static_cast<std::size_t>(m + 1));
  for (int j = 0; j <= m; ++j) c[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(m - j)];
  return TPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------

void suite_stuffle_exact(const SuiteSpec& spec, const EvalConfig&, Recorder& rec) {
  const long N = spec.cutoff;
  const Rational third(1, 3);
  std::map<Index, Rational> plain, star, hurwitz;
  auto memo = [](std::map<Index, Rational>& table, const Index& k, auto compute) -> const Rational& {
    auto it = table.find(k);
    if (it == table.end()) it = table.emplace(k, compute(k)).first;
    return it->second;
  };
  auto zN = [&](const Index& k) -> const Rational& { return memo(plain, k, [N](const Index& i) { return zeta_partial(i, N); }); };
  auto zsN = [&](const Index& k) -> const Rational& { return memo(star, k, [N](const Index& i) { return zeta_star_partial(i, N); }); };
  auto zhN = [&](const Index& k) -> const Rational& {
    return memo(hurwitz, k, [N, &third](const Index& i) { return hurwitz_partial(i, third, N); });
  };
  auto linear = [](const FormalSum& s, auto&& value) {
    Rational out(0);
    for (const auto& [k, c] : s) out += c * value(k);
    return out;
  };

  const auto idx = indices_up_to(spec.max_weight);
  for (const auto& k : idx) {
    for (const auto& l : idx) {
      const Json in{{"k", k.str()}, {"l", l.str()}, {"N", N}};
      const std::string pair = k.str() + "*" + l.str();
      const FormalSum st = stuffle_monomials(k, l, 1);
      rec.exact("stuffle/" + pair, in, zN(k) * zN(l), linear(st, zN));
      rec.exact("bar-stuffle/" + pair, in, zsN(k) * zsN(l), linear(stuffle_monomials(k, l, -1), zsN));
      Json hin = in;
      hin["x"] = "1/3";
      rec.exact("hurwitz-stuffle/" + pair, hin, zhN(k) * zhN(l), linear(st, zhN));
    }
  }
}

template <class Sum>
double max_coefficient(const Sum& s) {
  double m = 0.0;
  for (const auto& [key, c] : s) m = std::max(m, std::abs(to_double(c)));
  return m;
}

// Exact round-trip: the expansion must reproduce the single input term.
// lhs and rhs are term counts; abs_diff is the largest residual coefficient.
template <class Sum>
void round_trip(Recorder& rec, const std::string& id, const Json& inputs, const Sum& back, const Sum& target) {
  const Sum diff = back - target;
  rec.compare(id, inputs, static_cast<double>(back.size()), static_cast<double>(target.size()), 0.0);
  if (!diff.zero()) rec.compare(id + "/residual", inputs, max_coefficient(diff), 0.0, 0.0);
}

void suite_reduce(const SuiteSpec& spec, const EvalConfig&, Recorder& rec) {
  for (const auto& k : indices_up_to(spec.max_weight)) {
    const Json in{{"k", k.str()}};
    rec.guard("stuffle/" + k.str(), in, 0.0,
              [&] { round_trip(rec, "stuffle/" + k.str(), in, expand_stuffle(stuffle_reduce(k)), FormalSum(k)); });
  }
  for (const auto& k : indices_up_to(spec.max_weight)) {
    const Word w = word_of_index(k);
    const Json in{{"word", w.str()}};
    rec.guard("shuffle/" + w.str(), in, 0.0,
              [&] { round_trip(rec, "shuffle/" + w.str(), in, expand_shuffle(shuffle_reduce(w)), WordSum(w)); });
  }
}

void suite_constants(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  const double pi = std::acos(-1.0);
  rec.compare("zeta(2)=pi^2/6", Json{{"k", "(2)"}}, zeta_value(Index{2}, cfg), pi * pi / 6, 1e-8);
  rec.compare("zeta(1,2)=zeta(3)", Json{{"k", "(1,2)"}}, zeta_value(Index{1, 2}, cfg), zeta_value(Index{3}, cfg), 1e-8);
  for (const auto& k : admissible_up_to(spec.max_weight)) {
    const Index d = duality_dual(k);
    rec.compare("duality/" + k.str(), Json{{"k", k.str()}, {"dual", d.str()}}, zeta_value(k, cfg), zeta_value(d, cfg), spec.tol);
  }
  const auto small = admissible_up_to(std::min(spec.max_weight, 4));
  for (const auto& k : small) {
    for (const auto& l : small) {
      rec.compare("stuffle-at-infinity/" + k.str() + "*" + l.str(), Json{{"k", k.str()}, {"l", l.str()}},
                  zeta_value(k, cfg) * zeta_value(l, cfg), zeta_value(stuffle_monomials(k, l, 1), cfg), 3e-10);
    }
  }
  // Partial sums approach the regularized polynomial at T = log N - psi(1+x).
  for (double x : spec.xs) {
    for (const auto& k : indices_up_to(std::min(spec.max_weight, 3))) {
      const std::string id = "hurwitz-asymptotics/" + k.str() + "/x=" + fmt_double(x);
      rec.guard(id, with_x(k, x), 0.0, [&] {
        const TPolynomial z = z_hurwitz(k, x, cfg);
        std::vector<double> errors;
        for (long N = 100; N <= spec.cutoff; N *= 10)
          errors.push_back(std::abs(zeta_partial_real(k, x, N) - evaluate(z, std::log(static_cast<double>(N)) - digamma_1px(x))));
        rec.decreasing(id, with_x(k, x), errors, 1e-12);
      });
    }
  }
}

void suite_regfund(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  std::vector<Index> ks{Index{}};
  for (const auto& k : indices_up_to(spec.max_weight)) ks.push_back(k);
  for (double x : spec.xs) {
    for (const auto& k : ks) {
      const std::string id = "rho/" + k.str() + "/x=" + fmt_double(x);
      rec.guard(id, with_x(k, x), spec.tol, [&] {
        const TPolynomial p = p_hurwitz(k, x, cfg);
        const TPolynomial z = t_substitute(z_hurwitz(k, x, cfg), -euler_plus_digamma(x));
        const TPolynomial rhs = rho_transform(z, a_series(std::max(z.degree(), 0), cfg), false);
        rec.polynomial(id, with_x(k, x), p, rhs, spec.tol);
      });
    }
  }
  // At x = 0 the polynomial P is the shuffle-regularized polynomial.
  for (const auto& k : ks) {
    const std::string id = "shuffle-regularized/" + k.str();
    rec.guard(id, with_x(k, 0.0), spec.tol, [&] {
      const WordRegPolynomial sh = shuffle_reduce(word_of_index(k));
      std::vector<double> coeffs;
      for (int j = 0; j <= sh.degree(); ++j) coeffs.push_back(word_value(sh.coeff(j)));
      rec.polynomial(id, with_x(k, 0.0), p_hurwitz(k, 0.0, cfg), TPolynomial(std::move(coeffs)), spec.tol);
    });
  }
}

void suite_genfun(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  const int M = spec.order;
  std::vector<Index> cores = indices_up_to(spec.max_weight);
  for (double x : spec.xs) {
    const PowerSeries H = hurwitz_genfun_series(x, M, cfg);
    const PowerSeries G = gamma_ratio_series(x, M, cfg);
    std::vector<double> f_ones_values;
    for (int l = 0; l <= M; ++l) f_ones_values.push_back(f_ones(l, x, cfg).value);

    for (int m = 0; m <= M; ++m) {
      const Index k = Index::ones(m);
      const Json in{{"k", k.str()}, {"x", x}, {"m", m}};
      rec.guard("Z-ones/" + k.str(), in, spec.tol, [&] {
        rec.polynomial("Z-ones/" + k.str() + "/x=" + fmt_double(x), in, z_hurwitz(k, x, cfg), from_series(H, m), spec.tol);
      });
      rec.guard("P-ones/" + k.str(), in, spec.tol, [&] {
        std::vector<double> lhs(static_cast<std::size_t>(m + 1));
        for (int j = 0; j <= m; ++j) lhs[static_cast<std::size_t>(j)] = sign_of(static_cast<std::size_t>(m - j)) * f_ones_values[static_cast<std::size_t>(m - j)];
        rec.polynomial("P-ones/" + k.str() + "/x=" + fmt_double(x), in, TPolynomial(std::move(lhs)), from_series(G, m), spec.tol);
      });
    }

    for (const auto& c : cores) {
      const PowerSeries S = core_series(c, x, M, cfg);
      const PowerSeries SH = S * H;
      const PowerSeries SG = S * G;
      for (int m = 0; m <= M; ++m) {
        const Index k = k_plus(c).concat(Index::ones(m));
        const Json in{{"core", c.str()}, {"k", k.str()}, {"x", x}, {"m", m}};
        const std::string tag = k.str() + "/x=" + fmt_double(x);
        rec.guard("Z-core/" + tag, in, spec.tol, [&] {
          rec.polynomial("Z-core/" + tag, in, z_hurwitz(k, x, cfg), from_series(SH, m), spec.tol);
        });
        // Left side assembled term by term from the integral decomposition
        // I(l) = sum_i zeta^(x)(c o* (1^(l+1-i))^star) F(1^i;x).
        rec.guard("P-core/" + tag, in, spec.tol, [&] {
          std::vector<double> lhs(static_cast<std::size_t>(m + 1));
          for (int j = 0; j <= m; ++j) {
            const int l = m - j;
            double integral = 0.0;
            for (int i = 0; i <= l; ++i) {
              const FormalSum e = circled_ast(FormalSum(c), star_expand(Index::ones(l + 1 - i)));
              integral += hurwitz_zeta_value(e, x, cfg) * f_ones_values[static_cast<std::size_t>(i)];
            }
            lhs[static_cast<std::size_t>(j)] = sign_of(static_cast<std::size_t>(l)) * integral;
          }
          rec.polynomial("P-core/" + tag, in, TPolynomial(std::move(lhs)), from_series(SG, m), spec.tol);
        });
      }
    }

    // P describes Li^(x)_k(t) as t -> 1; the gap must shrink along the t grid.
    std::vector<Index> probes{Index{1}, Index{1, 1}, Index{1, 1, 1}};
    for (const auto& c : indices_up_to(std::min(spec.max_weight, 2))) {
      probes.push_back(k_plus(c));
      probes.push_back(k_plus(c).appended(1));
    }
    for (const auto& k : probes) {
      const std::string id = "P-asymptotics/" + k.str() + "/x=" + fmt_double(x);
      rec.guard(id, with_x(k, x), 0.0, [&] {
        const TPolynomial p = p_hurwitz(k, x, cfg);
        std::vector<double> errors;
        for (double t : spec.ts) {
          const Estimate li_value = li_series(k, x, t, 1e-12, 50'000'000);
          errors.push_back(std::abs(li_value.value - evaluate(p, -std::log1p(-t))));
        }
        rec.decreasing(id, Json{{"k", k.str()}, {"x", x}, {"t", spec.ts}}, errors, 1e-9);
      });
    }
  }
}

void suite_aomoto(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  for (double x : spec.xs) {
    const PowerSeries G = gamma_ratio_series(x, spec.order, cfg);
    for (int l = 0; l <= spec.order; ++l) {
      const Json in{{"l", l}, {"x", x}};
      const std::string id = "F-ones/l=" + std::to_string(l) + "/x=" + fmt_double(x);
      rec.guard(id, in, spec.tol, [&] {
        rec.compare(id, in, sign_of(static_cast<std::size_t>(l)) * f_ones(l, x, cfg).value, G[static_cast<std::size_t>(l)], spec.tol);
      });
    }
    const PowerSeries unit = G * reciprocal(G);
    for (int l = 0; l <= spec.order; ++l)
      rec.compare("series-inverse/l=" + std::to_string(l) + "/x=" + fmt_double(x), Json{{"l", l}, {"x", x}}, unit[static_cast<std::size_t>(l)], l == 0 ? 1.0 : 0.0, 1e-12);
  }
}

void suite_kawbyreg(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  for (double x : spec.xs) {
    for (const auto& k : indices_up_to(spec.max_weight)) {
      const std::string tag = k.str() + "/x=" + fmt_double(x);
      const Json in = with_x(k, x);
      rec.guard("taylor-vs-theorem/" + tag, in, spec.tol, [&] {
        const double taylor = f_taylor(k, x, cfg).value;
        const double at0 = f_via_theorem(k, x, 0.0, cfg);
        const double at1 = f_via_theorem(k, x, 1.0, cfg);
        rec.compare("taylor-vs-theorem/" + tag, in, taylor, at0, spec.tol);
        rec.compare("T-independence/" + tag, in, at0, at1, 1e-6);
        if (k.weight() <= 3) {
          Json oin = in;
          oin["N"] = spec.cutoff;
          rec.compare("partial-oracle/" + tag, oin, f_partial_oracle(k, x, spec.cutoff), taylor, 1e-3);
        }
      });
    }
  }
}

// Non-empty indices of weight at most w.
std::vector<Index> nonempty(int w) { return indices_up_to(w); }

void suite_kawashima(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  const auto ks = nonempty(spec.max_weight);
  for (const auto& k : ks) {
    for (const auto& l : ks) {
      const FormalSum product = stuffle_monomials(k, l, -1);
      for (int m = 1; m <= spec.order; ++m) {
        const Json in{{"k", k.str()}, {"l", l.str()}, {"m", m}};
        const std::string id = k.str() + "," + l.str() + "/m=" + std::to_string(m);
        rec.guard(id, in, spec.tol, [&] {
          double lhs = 0.0;
          for (int p = 1; p < m; ++p) lhs += kawashima_coefficient(k, p, cfg) * kawashima_coefficient(l, m - p, cfg);
          double rhs = 0.0;
          for (const auto& [n, c] : product) rhs -= to_double(c) * kawashima_coefficient(n, m, cfg);
          rec.compare(id, in, lhs, rhs, spec.tol);
        });
      }
    }
  }
}

void suite_kawstuf(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  const auto ks = nonempty(spec.max_weight);
  for (double x : spec.xs) {
    for (const auto& k : ks) {
      for (const auto& l : ks) {
        const Json in{{"k", k.str()}, {"l", l.str()}, {"x", x}};
        const std::string id = k.str() + "," + l.str() + "/x=" + fmt_double(x);
        rec.guard(id, in, spec.tol, [&] {
          double rhs = 0.0;
          for (const auto& [n, c] : stuffle_monomials(k, l, -1)) rhs += to_double(c) * f_taylor(n, x, cfg).value;
          rec.compare(id, in, f_taylor(k, x, cfg).value * f_taylor(l, x, cfg).value, rhs, spec.tol);
        });
      }
    }
  }
}

void suite_xecu(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  for (double x : spec.xs) {
    for (const auto& k : nonempty(spec.max_weight)) {
      const std::size_t r = static_cast<std::size_t>(k.depth());
      for (double t : spec.ts) {
        const Json in{{"k", k.str()}, {"x", x}, {"t", t}};
        const std::string id = k.str() + "/x=" + fmt_double(x) + "/t=" + fmt_double(t);
        rec.guard(id, in, spec.tol, [&] {
          const double lhs = li_hurwitz(k, x, t, cfg).value + sign_of(r) * f_t(reverse(k), x, t, cfg).value;
          double rhs = 0.0;
          for (std::size_t j = 0; j <= r; ++j)
            rhs += sign_of(j) * f_reversed_prefix(k, j, x, cfg) * li(k.slice(j, r), t, cfg).value;
          rec.compare(id, in, lhs, rhs, spec.tol);
        });
      }
      const Json in0{{"k", k.str()}, {"x", x}, {"t", 0.0}};
      const std::string id0 = "t=0/" + k.str() + "/x=" + fmt_double(x);
      rec.guard(id0, in0, spec.tol, [&] {
        rec.compare(id0, in0, f_t(reverse(k), x, 0.0, cfg).value, f_taylor(reverse(k), x, cfg).value, spec.tol);
      });
    }
  }
}

void suite_zstarbyf(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  for (double x : spec.xs) {
    for (const auto& k : nonempty(spec.max_weight)) {
      const std::size_t r = static_cast<std::size_t>(k.depth());
      const std::string id = k.str() + "/x=" + fmt_double(x);
      rec.guard(id, with_x(k, x), spec.tol, [&] {
        const TPolynomial lhs = t_substitute(z_hurwitz(k, x, cfg), -euler_plus_digamma(x));
        TPolynomial rhs;
        for (std::size_t j = 0; j <= r; ++j) {
          TPolynomial term = z_classical(k.slice(j, r), cfg);
          term.scale(sign_of(j) * f_reversed_prefix(k, j, x, cfg));
          rhs += term;
        }
        rec.polynomial(id, with_x(k, x), lhs, rhs, spec.tol);
      });
    }
  }
}

void suite_remark1(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  for (double x : spec.xs) {
    const double shift = euler_plus_digamma(x);
    for (const auto& k : nonempty(spec.max_weight)) {
      const std::size_t r = static_cast<std::size_t>(k.depth());
      const std::string tag = k.str() + "/x=" + fmt_double(x);
      const Json in = with_x(k, x);
      rec.guard("T=0/" + tag, in, spec.tol, [&] {
        const double f = f_taylor(k, x, cfg).value;
        double at_zero = 0.0;
        double at_shift = 0.0;
        double hurwitz_side = 0.0;
        for (std::size_t j = 0; j <= r; ++j) {
          const Index prefix = k.slice(0, j);
          const Index rev_suffix = reverse(k.slice(j, r));
          const TPolynomial star = z_star_classical(prefix, cfg);
          const TPolynomial hur = z_hurwitz(rev_suffix, x, cfg);
          at_zero += sign_of(r - j) * evaluate(star, 0.0) * evaluate(hur, -shift);
          at_shift += sign_of(r - j) * evaluate(star, shift) * evaluate(hur, 0.0);
          hurwitz_side += sign_of(j) * f_reversed_prefix(k, j, x, cfg) * evaluate(z_classical(k.slice(j, r), cfg), shift);
        }
        rec.compare("T=0/" + tag, in, f, at_zero, spec.tol);
        rec.compare("T=gamma+psi/" + tag, in, f, at_shift, spec.tol);
        rec.compare("zeta-x-by-F/" + tag, in, evaluate(z_hurwitz(k, x, cfg), 0.0), hurwitz_side, spec.tol);
      });
      bool all_large = true;
      for (int p : k.parts()) all_large = all_large && p > 1;
      if (!all_large) continue;
      rec.guard("no-regularization/" + tag, in, spec.tol, [&] {
        double zeta_side = 0.0;
        double f_side = 0.0;
        for (std::size_t j = 0; j <= r; ++j) {
          zeta_side += sign_of(j) * f_reversed_prefix(k, j, x, cfg) * zeta_value(k.slice(j, r), cfg);
          f_side += sign_of(r - j) * zeta_star_value(k.slice(0, j), cfg) * hurwitz_zeta_value(reverse(k.slice(j, r)), x, cfg);
        }
        rec.compare("no-regularization/zeta/" + tag, in, hurwitz_zeta_value(k, x, cfg), zeta_side, spec.tol);
        rec.compare("no-regularization/F/" + tag, in, f_taylor(k, x, cfg).value, f_side, spec.tol);
      });
    }
  }
}

// The partial-fraction sum with the difference placed on n_j, computed
// literally: sum over j of star chains n_1 <= ... <= n_j < N and strict
// Hurwitz chains n_j > n_(j+1) > ... > n_r > 0.
Rational partial_fraction_sum(const Index& k, const Rational& x, long N) {
  const std::size_t r = static_cast<std::size_t>(k.depth());
  Rational total(0);
  for (std::size_t j = 1; j <= r; ++j) {
    const Index head = k.slice(0, j - 1);
    const Index tail = reverse(k.slice(j, r));
    const int e = k[j - 1];
    Rational sum(0);
    for (long n = 1; n < N; ++n) {
      Rational plain(1), shifted(1);
      for (int i = 0; i < e; ++i) {
        plain /= Rational(n);
        shifted /= Rational(n) + x;
      }
      sum += zeta_star_partial(head, n + 1) * (plain - shifted) * hurwitz_partial(tail, x, n);
    }
    if ((r - j) % 2 == 1) sum = -sum;
    total += sum;
  }
  return total;
}

void suite_oracle_f(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  const Rational third(1, 3);
  for (const auto& k : nonempty(spec.max_weight)) {
    const Json in{{"k", k.str()}, {"x", "1/3"}, {"N", spec.cutoff}};
    rec.exact("finite-form/" + k.str(), in, partial_fraction_sum(k, third, spec.cutoff), f_partial_oracle(k, third, spec.cutoff));
  }
  {
    Rational direct(0);
    for (long n = 1; n < spec.cutoff; ++n) direct += Rational(1, n * n) - 1 / ((Rational(n) + third) * (Rational(n) + third));
    rec.exact("finite-form/(2)/direct", Json{{"k", "(2)"}, {"x", "1/3"}, {"N", spec.cutoff}}, direct, f_partial_oracle(Index{2}, third, spec.cutoff));
  }
  for (double x : spec.xs) {
    for (const auto& k : nonempty(std::min(spec.max_weight, 3))) {
      const std::string id = "convergence/" + k.str() + "/x=" + fmt_double(x);
      rec.guard(id, with_x(k, x), spec.tol, [&] {
        const double f = f_taylor(k, x, cfg).value;
        std::vector<double> errors;
        for (long N : {100L, 1000L, 10000L}) errors.push_back(std::abs(f_partial_oracle(k, x, N) - f));
        rec.decreasing(id, Json{{"k", k.str()}, {"x", x}, {"N", {100, 1000, 10000}}}, errors, 1e-9);
        rec.compare("limit/" + k.str() + "/x=" + fmt_double(x), Json{{"k", k.str()}, {"x", x}, {"N", 10000}}, f_partial_oracle(k, x, 10000), f, spec.tol);
      });
    }
  }
}

void suite_taylor(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  EvalConfig loose = cfg;
  loose.tol = 1e-6;
  for (const auto& k : admissible_up_to(spec.max_weight)) {
    const std::string id = "routes/" + k.str();
    rec.guard(id, Json{{"k", k.str()}}, 1e-6, [&] {
      const TaylorCoefficients tc = taylor_hurwitz_coeffs(k, spec.order, loose);
      for (std::size_t m = 0; m < tc.shuffle_route.size(); ++m)
        rec.compare("routes/" + k.str() + "/m=" + std::to_string(m), Json{{"k", k.str()}, {"m", m}}, tc.shuffle_route[m], tc.series_route[m], 1e-6);
      for (double x : spec.xs) {
        double sum = 0.0;
        double power = 1.0;
        for (double c : tc.values) {
          sum += c * power;
          power *= x;
        }
        rec.compare("series/" + k.str() + "/x=" + fmt_double(x), Json{{"k", k.str()}, {"x", x}, {"M", spec.order}}, sum, hurwitz_zeta_value(k, x, cfg), spec.tol);
      }
    });
  }
}

void suite_andipode(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  auto value = [&cfg](const FormalSum& s) { return zeta_value(s, cfg); };
  for (const auto& k : nonempty(spec.max_weight)) {
    const Json in{{"k", k.str()}};
    rec.guard(k.str(), in, spec.tol, [&] { rec.polynomial(k.str(), in, andipode_check(k, value), TPolynomial(), spec.tol); });
    // The same cancellation holds before regularization, in the stuffle algebra.
    const std::size_t r = static_cast<std::size_t>(k.depth());
    FormalSum total;
    for (std::size_t j = 0; j <= r; ++j) {
      const Index prefix = k.slice(0, j);
      FormalSum term = stuffle(prefix.empty() ? FormalSum(prefix) : star_expand(prefix), FormalSum(reverse(k.slice(j, r))));
      if ((r - j) % 2 == 1) term *= Rational(-1);
      total += term;
    }
    rec.exact("algebra/" + k.str(), in, Rational(static_cast<long>(total.size())), Rational(0));
  }
}

void suite_deriv(const SuiteSpec& spec, const EvalConfig& cfg, Recorder& rec) {
  const double h = 1e-4;
  for (double x : spec.xs) {
    for (double t : spec.ts) {
      for (const auto& q : nonempty(spec.max_weight)) {
        const Json in{{"k", q.str()}, {"x", x}, {"t", t}, {"step", h}};
        const std::string id = "F/" + q.str() + "/x=" + fmt_double(x) + "/t=" + fmt_double(t);
        rec.guard(id, in, spec.tol, [&] {
          const double fd = (f_t(q, x, t + h, cfg).value - f_t(q, x, t - h, cfg).value) / (2 * h);
          double formula = 0.0;
          const Index rest = q.slice(1, static_cast<std::size_t>(q.depth()));
          if (q.weight() == 1) {
            formula = (std::pow(t, x) - 1.0) / (1.0 - t);
          } else if (q[0] == 1) {
            formula = -f_t(rest, x, t, cfg).value / (1.0 - t);
          } else {
            std::vector<int> parts(q.parts().begin(), q.parts().end());
            parts[0] -= 1;
            const Index lowered(parts);
            formula = (f_t(lowered, x, t, cfg).value - f_taylor(lowered, x, cfg).value) / t;
          }
          rec.compare(id, in, fd, formula, spec.tol);
        });
      }
      // hat-zeta(k;l;t) with l of weight at least 2.
      for (const auto& k : nonempty(2)) {
        for (const auto& l : nonempty(3)) {
          if (l.weight() < 2) continue;
          const Json in{{"k", k.str()}, {"l", l.str()}, {"t", t}, {"step", h}};
          const std::string id = "hatzeta/" + k.str() + ";" + l.str() + "/t=" + fmt_double(t);
          rec.guard(id, in, spec.tol, [&] {
            const double fd = (hatzeta(k, l, t + h, cfg).value - hatzeta(k, l, t - h, cfg).value) / (2 * h);
            const Index rest = l.slice(1, static_cast<std::size_t>(l.depth()));
            double formula = 0.0;
            if (l[0] > 1) {
              std::vector<int> parts(l.parts().begin(), l.parts().end());
              parts[0] -= 1;
              formula = hatzeta(k, Index(parts), t, cfg).value / t;
            } else {
              // The boundary value is hat-zeta(k; rest; 1), which carries the star.
              formula = (zeta_value(circled_ast(FormalSum(k), star_expand(rest)), cfg) - hatzeta(k, rest, t, cfg).value) / (1.0 - t);
            }
            rec.compare(id, in, fd, formula, spec.tol);
          });
        }
      }
    }
  }
}

using SuiteFn = void (*)(const SuiteSpec&, const EvalConfig&, Recorder&);

SuiteFn suite_function(const std::string& name) {
  static const std::map<std::string, SuiteFn> table = {
      {"stuffle-exact", suite_stuffle_exact}, {"reduce", suite_reduce},   {"constants", suite_constants},
      {"regfund", suite_regfund},             {"genfun", suite_genfun},   {"aomoto", suite_aomoto},
      {"kawbyreg", suite_kawbyreg},           {"kawashima", suite_kawashima}, {"kawstuf", suite_kawstuf},
      {"xecu", suite_xecu},                   {"zstarbyf", suite_zstarbyf}, {"remark1", suite_remark1},
      {"oracle-f", suite_oracle_f},           {"taylor", suite_taylor},   {"andipode", suite_andipode},
      {"deriv", suite_deriv},
  };
  return table.at(name);
}

Json json_number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.push_back(s.name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

const std::string& suite_anchor(const std::string& name) { return info(name).anchor; }

SuiteSpec default_spec(const std::string& name) { return info(name).defaults; }

SuiteSpec merge_spec(const std::string& name, const SuiteSpec& overrides) {
  SuiteSpec spec = default_spec(name);
  if (overrides.max_weight > 0) spec.max_weight = overrides.max_weight;
  if (!overrides.xs.empty()) spec.xs = overrides.xs;
  if (!overrides.ts.empty()) spec.ts = overrides.ts;
  if (overrides.tol > 0.0) spec.tol = overrides.tol;
  if (overrides.cutoff > 0) spec.cutoff = overrides.cutoff;
  if (overrides.order > 0) spec.order = overrides.order;
  return spec;
}

CheckReport run_suite(const SuiteSpec& spec, const EvalConfig& base) {
  const SuiteInfo& suite = info(spec.name);
  CheckReport report;
  report.suite = spec.name;
  report.anchor = suite.anchor;

  EvalConfig cfg = base;
  if (spec.tol > 0.0) cfg.tol = std::min(base.tol, spec.tol * 1e-2);
  cfg.validate();
  report.config = Json{{"max_weight", spec.max_weight}, {"xs", spec.xs},       {"ts", spec.ts},           {"tol", spec.tol},
                       {"cutoff", spec.cutoff},         {"order", spec.order}, {"eval_tol", cfg.tol},     {"taylor_M", cfg.taylor_M},
                       {"cross_check_order", cfg.cross_check_order}};

  const auto start = std::chrono::steady_clock::now();
  Recorder rec(report);
  try {
    suite_function(spec.name)(spec, cfg, rec);
  } catch (const std::exception& e) {
    rec.failure("suite-aborted", Json::object(), e.what(), spec.tol);
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_jsonl(const CheckReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    Json line{{"suite", report.suite},        {"check_id", c.id},       {"anchor", report.anchor},
              {"inputs", c.inputs},           {"lhs", json_number(c.lhs)}, {"rhs", json_number(c.rhs)},
              {"abs_diff", json_number(c.abs_diff)}, {"tol", c.tol},    {"pass", c.pass}};
    if (!c.note.empty()) line["note"] = c.note;
    out += line.dump() + "\n";
  }
  Json summary{{"suite", report.suite},
               {"summary", Json{{"checks", report.checks.size()}, {"failures", report.failures()}, {"pass", report.passed()},
                                {"config", report.config}, {"wall_seconds", report.wall_seconds}}}};
  out += summary.dump() + "\n";
  return out;
}

std::string summary_table(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-14s %8s %8s %12s %9s  %s\n", "suite", "checks", "failed", "max|diff|", "seconds", "result");
  out << line;
  for (const auto& r : reports) {
    double worst = 0.0;
    for (const auto& c : r.checks)
      if (std::isfinite(c.abs_diff)) worst = std::max(worst, c.abs_diff);
    std::snprintf(line, sizeof line, "%-14s %8zu %8zu %12.3e %9.2f  %s\n", r.suite.c_str(), r.checks.size(), r.failures(), worst,
                  r.wall_seconds, r.passed() ? "PASS" : "FAIL");
    out << line;
  }
  return out.str();
}

std::string failure_details(const CheckReport& report, std::size_t limit) {
  std::ostringstream out;
  std::size_t shown = 0;
  for (const auto& c : report.checks) {
    if (c.pass) continue;
    if (shown++ == limit) {
      out << "  ... " << report.failures() - limit << " more failures in " << report.suite << "\n";
      break;
    }
    out << "  FAIL " << report.suite << " " << c.id << " [" << report.anchor << "] inputs=" << c.inputs.dump() << " lhs=" << fmt_double(c.lhs)
        << " rhs=" << fmt_double(c.rhs) << " |diff|=" << fmt_double(c.abs_diff) << " tol=" << fmt_double(c.tol);
    if (!c.note.empty()) out << " (" << c.note << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace mzv::verify
