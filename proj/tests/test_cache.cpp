#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mzv/constant_cache.hpp"
#include "mzv/error.hpp"
#include "mzv/numerics.hpp"

using namespace mzv;

namespace {
std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }
}  // namespace

TEST_CASE("lookup respects precision") {
  ConstantCache c;
  c.store(Index({2}), ConstantCache::classical_context(), 1e-12, 1.5);
  CHECK(c.lookup(Index({2}), "classical", 1e-10).value() == 1.5);
  CHECK_FALSE(c.lookup(Index({2}), "classical", 1e-14).has_value());
  CHECK_FALSE(c.lookup(Index({3}), "classical", 1e-10).has_value());
  c.store(Index({2}), "classical", 1e-6, 9.0);  // looser: ignored
  CHECK(c.lookup(Index({2}), "classical", 1e-10).value() == 1.5);
}

TEST_CASE("save and load round trip") {
  ConstantCache c;
  c.store(Index({1, 2}), "classical", 1e-14, 1.2020569031595942);
  c.store(Index({3}), ConstantCache::hurwitz_context(0.25), 1e-13, 0.123456789012345678);
  const std::string path = temp_path("mzv_cache_roundtrip.txt");
  c.save(path);
  ConstantCache d;
  CHECK(d.load(path));
  CHECK(d.entries() == c.entries());
  std::filesystem::remove(path);
}

TEST_CASE("missing and malformed files") {
  ConstantCache c;
  CHECK_FALSE(c.load(temp_path("mzv_cache_does_not_exist.txt")));
  CHECK(c.size() == 0);
  const std::string path = temp_path("mzv_cache_bad.txt");
  std::ofstream(path) << "(1,2);classical;oops\n";
  CHECK_THROWS_AS(c.load(path), Error);
  std::filesystem::remove(path);
}

TEST_CASE("gc drops loose entries") {
  ConstantCache c;
  c.store(Index({2}), "classical", 1e-14, 1.0);
  c.store(Index({3}), "classical", 1e-6, 1.0);
  CHECK(c.gc(1e-10) == 1);
  CHECK(c.size() == 1);
}

TEST_CASE("evaluators populate a private cache") {
  ConstantCache c;
  EvalConfig cfg;
  cfg.cache = &c;
  const double v = zeta_value(Index({1, 3}), cfg);
  CHECK(c.size() >= 1);
  CHECK(zeta_value(Index({1, 3}), cfg) == v);
}
