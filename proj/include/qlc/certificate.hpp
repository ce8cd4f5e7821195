#pragma once

// Machine-readable record of a verification run. All numbers are carried as
// decimal strings so big integers survive any downstream JSON reader.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qlc {

inline constexpr const char* kToolVersion = "qlc 1.0.0";

struct ClaimRecord {
  std::string id;      // e.g. "prop31.sturm"
  std::string family;  // e.g. "prop31"
  std::vector<std::pair<std::string, std::string>> parameters;
  bool passed = true;
  std::uint64_t checked = 0;  // number of elementary exact checks
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::string detail;

  ClaimRecord& param(std::string key, std::string value);
  ClaimRecord& param(std::string key, long value);
  ClaimRecord& witness(std::string key, std::string value);
  ClaimRecord& witness(std::string key, long value);
  /// Marks the record failed; only the first failure's detail is kept.
  ClaimRecord& fail(std::string why);
};

struct Certificate {
  std::string tool_version = kToolVersion;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ClaimRecord> claims;
  bool passed = true;  // derived: false iff some claim failed
  std::string timestamp;

  /// Recomputes `passed` from the claim records.
  void finalize();

  /// (family, passed, claim count) in first-appearance order.
  struct FamilySummary {
    std::string family;
    bool passed = true;
    std::size_t claims = 0;
  };
  std::vector<FamilySummary> families() const;

  const ClaimRecord* find(const std::string& id) const;
};

enum class OutputFormat { json, csv, text };

std::string to_json(const Certificate& c, int indent = 2);
/// Throws std::invalid_argument on malformed input.
Certificate certificate_from_json(const std::string& text);
/// Flat claim table: id,family,passed,checked,parameters,witnesses,detail.
std::string to_csv(const Certificate& c);
std::string to_text(const Certificate& c);
std::string serialize(const Certificate& c, OutputFormat format);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace qlc
