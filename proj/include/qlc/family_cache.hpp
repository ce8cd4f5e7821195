#pragma once

// Versioned on-disk table of family polynomials keyed by (tag, n).
//
// Format (text, one record per line):
//   qlc-family-cache 1
//   D<TAB>2<TAB>6,16,6
// Records are written through a temporary file that is renamed over the
// target, so readers never observe a partially written table.

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "qlc/families.hpp"

namespace qlc {

inline constexpr int kFamilyCacheVersion = 1;

class FamilyCache {
 public:
  FamilyCache() = default;
  explicit FamilyCache(std::filesystem::path path);

  /// Default file under $QLC_CACHE_DIR, if that variable is set.
  static std::optional<std::filesystem::path> default_path();

  /// Reads the table. A missing file is an empty table; a corrupt or
  /// version-mismatched file is discarded (returns false) and regenerated on
  /// the next save().
  bool load();

  /// Atomic write-then-rename. Throws std::runtime_error on I/O failure.
  void save();

  /// Cached polynomial, generating (and remembering) it on a miss.
  IntPoly get(Family tag, long n);

  std::optional<IntPoly> lookup(Family tag, long n) const;
  void put(Family tag, long n, IntPoly p);

  std::size_t size() const;
  bool dirty() const;
  const std::filesystem::path& path() const { return path_; }

  /// Serialized table text, also used by save().
  std::string serialize() const;
  /// Parses `text` into a table; nullopt when malformed.
  static std::optional<std::map<std::pair<char, long>, IntPoly>> parse(const std::string& text);

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<std::pair<char, long>, IntPoly> table_;
  bool dirty_ = false;
};

}  // namespace qlc
