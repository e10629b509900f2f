#include "mzv/constant_cache.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

#include "mzv/config.hpp"
#include "mzv/error.hpp"

namespace mzv {

void EvalConfig::validate() const {
  if (!(tol > 0.0)) throw Error(ErrorKind::UsageError, "tol must be positive");
  if (cutoff_N < 1) throw Error(ErrorKind::UsageError, "cutoff_N must be >= 1");
  if (taylor_M < 1) throw Error(ErrorKind::UsageError, "taylor_M must be >= 1");
  if (!(x > -1.0)) throw Error(ErrorKind::UsageError, "x must be > -1");
}

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw Error(ErrorKind::ParseError, "bad number \"" + s + "\"");
  return v;
}

}  // namespace

std::string ConstantCache::hurwitz_context(double x) { return "hurwitz:x=" + shortest(x); }

std::optional<double> ConstantCache::lookup(const Index& k, const std::string& context, double max_precision) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find({k.str(), context});
  if (it == entries_.end() || it->second.precision > max_precision) return std::nullopt;
  return it->second.value;
}

void ConstantCache::store(const Index& k, const std::string& context, double precision, double value) {
  store(Entry{k.str(), context, precision, value});
}

void ConstantCache::store(Entry entry) {
  std::unique_lock lock(mutex_);
  auto key = std::make_pair(entry.index, entry.context);
  auto it = entries_.find(key);
  if (it == entries_.end())
    entries_.emplace(std::move(key), std::move(entry));
  else if (entry.precision < it->second.precision)
    it->second = std::move(entry);
}

std::size_t ConstantCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void ConstantCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

std::vector<ConstantCache::Entry> ConstantCache::entries() const {
  std::shared_lock lock(mutex_);
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [key, e] : entries_) out.push_back(e);
  return out;
}

std::size_t ConstantCache::gc(double max_precision) {
  std::unique_lock lock(mutex_);
  std::size_t removed = 0;
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->second.precision > max_precision) {
      it = entries_.erase(it);
      ++removed;
    } else {
      ++it;
    }
  }
  return removed;
}

std::string ConstantCache::format_line(const Entry& e) {
  char value[64], precision[64];
  std::snprintf(value, sizeof value, "%.16e", e.value);
  std::snprintf(precision, sizeof precision, "%.1e", e.precision);
  return e.index + ";" + e.context + ";" + precision + ";" + value;
}

ConstantCache::Entry ConstantCache::parse_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, ';')) fields.push_back(field);
  if (fields.size() != 4) throw Error(ErrorKind::ParseError, "cache line needs 4 fields: \"" + line + "\"");
  Entry e;
  e.index = Index::parse(fields[0]).str();
  e.context = fields[1];
  if (e.context != "classical" && e.context.rfind("hurwitz:x=", 0) != 0)
    throw Error(ErrorKind::ParseError, "unknown cache context \"" + e.context + "\"");
  e.precision = parse_double(fields[2]);
  e.value = parse_double(fields[3]);
  return e;
}

void ConstantCache::save(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  for (const auto& e : entries()) out << format_line(e) << '\n';
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

bool ConstantCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  std::vector<Entry> parsed;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    parsed.push_back(parse_line(line));
  }
  for (auto& e : parsed) store(std::move(e));
  return true;
}

ConstantCache& default_cache() {
  static ConstantCache cache;
  return cache;
}

}  // namespace mzv
