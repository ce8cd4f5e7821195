#include "qlc/family_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

namespace qlc {

FamilyCache::FamilyCache(std::filesystem::path path) : path_(std::move(path)) {}

std::optional<std::filesystem::path> FamilyCache::default_path() {
  const char* dir = std::getenv("QLC_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / "families.v1.tsv";
}

std::string FamilyCache::serialize() const {
  std::lock_guard lock(mutex_);
  std::ostringstream out;
  out << "qlc-family-cache " << kFamilyCacheVersion << '\n';
  for (const auto& [key, poly] : table_) {
    out << key.first << '\t' << key.second << '\t';
    // Degree-n families have n+1 coefficients; zero entries are kept inline.
    for (long k = 0; k <= key.second; ++k) {
      if (k) out << ',';
      out << poly.coeff(k).get_str();
    }
    out << '\n';
  }
  return out.str();
}

std::optional<std::map<std::pair<char, long>, IntPoly>> FamilyCache::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) return std::map<std::pair<char, long>, IntPoly>{};
  if (line != "qlc-family-cache " + std::to_string(kFamilyCacheVersion)) return std::nullopt;
  std::map<std::pair<char, long>, IntPoly> table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) return std::nullopt;
    const auto tag = parse_family(line.substr(0, t1));
    if (!tag) return std::nullopt;
    long n = 0;
    try {
      std::size_t used = 0;
      n = std::stol(line.substr(t1 + 1, t2 - t1 - 1), &used);
      if (used != t2 - t1 - 1 || n < 0) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    std::vector<ExactInt> coeffs;
    std::istringstream fields(line.substr(t2 + 1));
    std::string field;
    try {
      while (std::getline(fields, field, ',')) coeffs.push_back(parse_int(field));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (static_cast<long>(coeffs.size()) != n + 1) return std::nullopt;
    table[{to_char(*tag), n}] = IntPoly(std::move(coeffs));
  }
  return table;
}

bool FamilyCache::load() {
  std::lock_guard lock(mutex_);
  table_.clear();
  dirty_ = false;
  if (path_.empty()) return true;
  std::ifstream in(path_, std::ios::binary);
  if (!in) return true;
  std::stringstream buf;
  buf << in.rdbuf();
  auto parsed = parse(buf.str());
  if (!parsed) {
    dirty_ = true;
    return false;
  }
  table_ = std::move(*parsed);
  return true;
}

void FamilyCache::save() {
  if (path_.empty()) return;
  const std::string text = serialize();
  std::error_code ec;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path(), ec);
  auto tmp = path_;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path_, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot replace cache file " + path_.string());
  }
  std::lock_guard lock(mutex_);
  dirty_ = false;
}

std::optional<IntPoly> FamilyCache::lookup(Family tag, long n) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find({to_char(tag), n});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void FamilyCache::put(Family tag, long n, IntPoly p) {
  std::lock_guard lock(mutex_);
  table_[{to_char(tag), n}] = std::move(p);
  dirty_ = true;
}

IntPoly FamilyCache::get(Family tag, long n) {
  if (auto hit = lookup(tag, n)) return *hit;
  IntPoly p = family_poly(tag, n);
  put(tag, n, p);
  return p;
}

std::size_t FamilyCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

bool FamilyCache::dirty() const {
  std::lock_guard lock(mutex_);
  return dirty_;
}

}  // namespace qlc
