#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "mzv/index.hpp"

namespace mzv {

/// Memo of computed constants keyed by (index, context). Each entry carries
/// the absolute precision it was computed to; lookups accept an entry only
/// when that precision meets the request. Concurrent readers are fine and
/// inserts are idempotent (the tighter precision wins).
class ConstantCache {
 public:
  struct Entry {
    std::string index;    // "(1,2)"
    std::string context;  // "classical" or "hurwitz:x=<decimal>"
    double precision = 0.0;
    double value = 0.0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  static std::string classical_context() { return "classical"; }
  static std::string hurwitz_context(double x);

  std::optional<double> lookup(const Index& k, const std::string& context, double max_precision) const;
  void store(const Index& k, const std::string& context, double precision, double value);
  void store(Entry entry);

  std::size_t size() const;
  void clear();
  std::vector<Entry> entries() const;

  /// Drop entries whose precision is looser than the threshold; returns the
  /// number removed.
  std::size_t gc(double max_precision);

  /// "index;context;precision;value" lines, values with 17 significant digits.
  void save(const std::string& path) const;
  /// Merge a file into the cache. A missing file is not an error: returns
  /// false and leaves the cache untouched. Malformed lines throw ParseError.
  bool load(const std::string& path);

  static std::string format_line(const Entry& e);
  static Entry parse_line(const std::string& line);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::string, std::string>, Entry> entries_;
};

/// Process-wide cache used when EvalConfig::cache is null.
ConstantCache& default_cache();

}  // namespace mzv
