// mzv: verification suites, evaluators and constant-cache management.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mzv/constant_cache.hpp"
#include "mzv/error.hpp"
#include "mzv/numerics.hpp"
#include "mzv/verify.hpp"

namespace {

using namespace mzv;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Flags {
  int max_weight = 0;
  std::vector<double> xs;
  std::vector<double> ts;
  double tol = 0.0;
  long cutoff = 0;
  int taylor_order = 0;
  std::string report;
  std::size_t details = 20;
};

std::string cache_env() {
  const char* p = std::getenv("MZV_CACHE");
  return p ? p : "";
}

void load_env_cache() {
  const std::string path = cache_env();
  if (path.empty()) return;
  if (!default_cache().load(path)) std::cerr << "warning: cache file " << path << " not found; starting empty\n";
}

void save_env_cache() {
  const std::string path = cache_env();
  if (!path.empty()) default_cache().save(path);
}

std::string fmt(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fmt_err(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

void print_value(const std::string& label, const Estimate& e) { std::cout << label << " = " << fmt(e.value) << " +- " << fmt_err(e.error) << "\n"; }

double tag_of(double v) { return 1e-14 * std::max(1.0, std::abs(v)); }

EvalConfig make_config(const Flags& f) {
  EvalConfig cfg;
  if (f.tol > 0) cfg.tol = f.tol;
  if (f.cutoff > 0) cfg.cutoff_N = f.cutoff;
  if (f.taylor_order > 0) cfg.taylor_M = f.taylor_order;
  if (!f.xs.empty()) cfg.x = f.xs.front();
  if (!f.ts.empty()) cfg.t = f.ts.front();
  cfg.validate();
  return cfg;
}

// ---------------------------------------------------------------------------
// suite

int run_suites(std::vector<std::string> names, const Flags& f) {
  if (names.size() == 1 && names.front() == "all") names = verify::suite_names();
  for (const auto& n : names)
    if (!verify::is_suite(n)) throw Error(ErrorKind::UsageError, "unknown suite \"" + n + "\"");

  std::ofstream report;
  if (!f.report.empty()) {
    report.open(f.report, std::ios::trunc);
    if (!report) throw Error(ErrorKind::IoError, "cannot write report " + f.report);
  }

  verify::SuiteSpec overrides;
  overrides.max_weight = f.max_weight;
  overrides.xs = f.xs;
  overrides.ts = f.ts;
  overrides.tol = f.tol;
  overrides.cutoff = f.cutoff;
  overrides.order = f.taylor_order;

  std::vector<verify::CheckReport> reports;
  for (const auto& name : names) {
    const auto spec = verify::merge_spec(name, overrides);
    reports.push_back(verify::run_suite(spec));
    if (report) report << verify::to_jsonl(reports.back());
  }
  if (report && !report.flush()) throw Error(ErrorKind::IoError, "write failed for " + f.report);

  std::cout << verify::summary_table(reports);
  bool ok = true;
  for (const auto& r : reports) {
    if (!r.passed()) {
      ok = false;
      std::cout << verify::failure_details(r, f.details);
    }
  }
  save_env_cache();
  return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// eval

int eval_f(const Index& k, const EvalConfig& cfg, const std::string& method, long cutoff) {
  struct Result {
    std::string name;
    Estimate e;
  };
  std::vector<Result> results;
  const bool all = method == "all";
  if (all || method == "taylor") results.push_back({"taylor", f_taylor(k, cfg.x, cfg)});
  if (all || method == "theorem") {
    const double a = f_via_theorem(k, cfg.x, 0.0, cfg);
    const double b = f_via_theorem(k, cfg.x, 1.0, cfg);
    results.push_back({"theorem", {a, std::abs(a - b) + tag_of(a) * 10}});
  }
  if (all || method == "oracle") {
    const double a = f_partial_oracle(k, cfg.x, cutoff);
    const double b = f_partial_oracle(k, cfg.x, std::max(1L, cutoff / 2));
    results.push_back({"oracle", {a, std::abs(a - b)}});
  }
  if (results.empty()) throw Error(ErrorKind::UsageError, "unknown method \"" + method + "\" (taylor|theorem|oracle|all)");
  for (const auto& r : results) print_value("F" + k.str() + " [" + r.name + ", x=" + fmt(cfg.x, 6) + "]", r.e);
  bool agree = true;
  for (std::size_t i = 1; i < results.size(); ++i) {
    const double gap = std::abs(results[i].e.value - results[0].e.value);
    if (gap > results[i].e.error + results[0].e.error + cfg.tol) {
      agree = false;
      std::cout << "disagreement: " << results[0].name << " vs " << results[i].name << " differ by " << fmt_err(gap) << "\n";
    }
  }
  return agree ? kExitPass : kExitFail;
}

int run_eval(const std::string& what, const std::string& text, const Flags& f, const std::string& method, bool explain) {
  const Index k = Index::parse(text);
  const EvalConfig cfg = make_config(f);
  int code = kExitPass;
  if (what == "zeta") {
    const double v = zeta_value(k, cfg);
    print_value("zeta" + k.str(), {v, tag_of(v)});
    if (explain) std::cout << "word " << word_of_index(k).str() << ", dual " << duality_dual(k).str() << "\n";
  } else if (what == "zetastar") {
    const double v = zeta_star_value(k, cfg);
    print_value("zeta*" + k.str(), {v, tag_of(v) * (1 << std::max(0, k.depth() - 1))});
    if (explain) std::cout << format(star_expand(k)) << "\n";
  } else if (what == "hzeta") {
    const double v = hurwitz_zeta_value(k, cfg.x, cfg);
    print_value("zeta^(x)" + k.str() + " [x=" + fmt(cfg.x, 6) + "]", {v, tag_of(v)});
  } else if (what == "li") {
    print_value("Li^(x)" + k.str() + " [x=" + fmt(cfg.x, 6) + ", t=" + fmt(cfg.t, 6) + "]", li_hurwitz(k, cfg.x, cfg.t, cfg));
  } else if (what == "F") {
    code = eval_f(k, cfg, method, f.cutoff > 0 ? f.cutoff : cfg.cutoff_N);
  } else if (what == "Zstar" || what == "Zstarstar") {
    const RegPolynomial p = what == "Zstar" ? stuffle_reduce(k) : z_star_star(k);
    std::cout << pretty(p) << "\n";
    if (explain) std::cout << debug_dump(p);
  } else if (what == "Zsh") {
    const WordRegPolynomial p = shuffle_reduce(word_of_index(k));
    std::cout << debug_dump(p);
  } else if (what == "P") {
    const TPolynomial p = p_hurwitz(k, cfg.x, cfg);
    for (int j = 0; j <= std::max(p.degree(), 0); ++j) std::cout << fmt(p.coeff(j)) << " T^" << j << "/" << j << "!\n";
  } else {
    throw Error(ErrorKind::UsageError, "unknown eval target \"" + what + "\"");
  }
  save_env_cache();
  return code;
}

// ---------------------------------------------------------------------------
// cache

std::string cache_path(const std::string& given) {
  if (!given.empty()) return given;
  const std::string env = cache_env();
  if (env.empty()) throw Error(ErrorKind::UsageError, "no cache path given and MZV_CACHE is unset");
  return env;
}

int run_cache(const std::string& action, const std::string& given, const Flags& f, double precision, bool check) {
  const std::string path = cache_path(given);
  ConstantCache cache;
  if (action == "load") {
    if (!cache.load(path)) {
      std::cerr << "warning: cache file " << path << " not found; cache is empty\n";
      std::cout << "entries 0\n";
      return kExitPass;
    }
    std::cout << "entries " << cache.size() << "\n";
    if (!check) return kExitPass;
    std::size_t bad = 0;
    for (const auto& e : cache.entries()) {
      const Index k = Index::parse(e.index);
      ConstantCache fresh;  // recompute, never read back the loaded value
      EvalConfig cfg;
      cfg.cache = &fresh;
      double v = 0.0;
      if (e.context == ConstantCache::classical_context()) {
        v = zeta_value(k, cfg);
      } else {
        v = hurwitz_zeta_value(k, std::stod(e.context.substr(std::string("hurwitz:x=").size())), cfg);
      }
      if (std::abs(v - e.value) > e.precision) {
        ++bad;
        std::cout << "mismatch " << e.index << " " << e.context << " cached " << fmt(e.value) << " recomputed " << fmt(v) << "\n";
      }
    }
    std::cout << "verified " << cache.size() - bad << "/" << cache.size() << "\n";
    return bad == 0 ? kExitPass : kExitFail;
  }
  if (action == "save") {
    cache.load(path);
    EvalConfig cfg;
    cfg.cache = &cache;
    const int w = f.max_weight > 0 ? f.max_weight : 6;
    for (const auto& k : admissible_up_to(w)) {
      zeta_value(k, cfg);
      for (double x : f.xs) hurwitz_zeta_value(k, x, cfg);
    }
    cache.save(path);
    std::cout << "saved " << cache.size() << " entries to " << path << "\n";
    return kExitPass;
  }
  if (action == "gc") {
    if (!cache.load(path)) {
      std::cerr << "warning: cache file " << path << " not found; nothing to collect\n";
      return kExitPass;
    }
    const std::size_t removed = cache.gc(precision);
    cache.save(path);
    std::cout << "removed " << removed << ", kept " << cache.size() << "\n";
    return kExitPass;
  }
  throw Error(ErrorKind::UsageError, "unknown cache action \"" + action + "\" (load|save|gc)");
}

void add_numeric_flags(CLI::App* app, Flags& f) {
  app->add_option("--max-weight", f.max_weight, "Largest index weight in the grid");
  app->add_option("--x", f.xs, "Hurwitz shift(s), comma-separated or repeated")->allow_extra_args(false)->delimiter(',');
  app->add_option("--t", f.ts, "Polylogarithm argument(s), comma-separated or repeated")->allow_extra_args(false)->delimiter(',');
  app->add_option("--tol", f.tol, "Tolerance");
  app->add_option("--cutoff", f.cutoff, "Partial-sum cutoff N");
  app->add_option("--taylor-order", f.taylor_order, "Series order");
}

}  // namespace

int main(int argc, char** argv) {
  // "mzv <suite-name> ..." is shorthand for "mzv suite <suite-name> ...".
  std::vector<std::string> args(argv, argv + argc);
  if (args.size() > 1 && (mzv::verify::is_suite(args[1]) || args[1] == "all")) args.insert(args.begin() + 1, "suite");
  std::vector<char*> cargs;
  for (auto& a : args) cargs.push_back(a.data());

  CLI::App app{"Multiple zeta values: regularization, Kawashima functions and identity checks"};
  app.require_subcommand(1);
  Flags flags;

  auto* suite = app.add_subcommand("suite", "Run verification suites (names or 'all')");
  std::vector<std::string> names;
  suite->add_option("names", names, "Suite names")->required();
  add_numeric_flags(suite, flags);
  suite->add_option("--report", flags.report, "Write line-delimited JSON to this path");
  suite->add_option("--details", flags.details, "Failed checks shown per suite");

  auto* eval = app.add_subcommand("eval", "Evaluate one quantity");
  std::string what, text, method = "taylor";
  bool explain = false;
  eval->add_option("what", what, "zeta|zetastar|hzeta|li|F|Zstar|Zstarstar|Zsh|P")->required();
  eval->add_option("index", text, "Index such as \"(1,2)\"")->required();
  eval->add_option("--method", method, "F method: taylor|theorem|oracle|all");
  eval->add_flag("--explain", explain, "Show the symbolic form used");
  add_numeric_flags(eval, flags);

  auto* cache = app.add_subcommand("cache", "Load, save or prune a constant cache file");
  std::string action, path;
  double precision = 1e-12;
  bool check = false;
  cache->add_option("action", action, "load|save|gc")->required();
  cache->add_option("path", path, "Cache file (default: $MZV_CACHE)");
  cache->add_option("--precision", precision, "gc: drop entries looser than this");
  cache->add_flag("--verify", check, "load: recompute every entry");
  add_numeric_flags(cache, flags);

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*suite) {
      load_env_cache();
      return run_suites(names, flags);
    }
    if (*eval) {
      load_env_cache();
      return run_eval(what, text, flags, method, explain);
    }
    return run_cache(action, path, flags, precision, check);
  } catch (const mzv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case mzv::ErrorKind::UsageError:
      case mzv::ErrorKind::ParseError:
      case mzv::ErrorKind::EmptyIndex:
      case mzv::ErrorKind::NotAdmissible:
      case mzv::ErrorKind::ArgumentOutOfRange:
      case mzv::ErrorKind::MalformedWord:
      case mzv::ErrorKind::LastPartTooSmall:
        return kExitUsage;
      case mzv::ErrorKind::IoError:
        return kExitIo;
      default:
        return kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
