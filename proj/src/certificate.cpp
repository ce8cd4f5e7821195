#include "qlc/certificate.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qlc {

using json = nlohmann::ordered_json;

ClaimRecord& ClaimRecord::param(std::string key, std::string value) {
  parameters.emplace_back(std::move(key), std::move(value));
  return *this;
}
ClaimRecord& ClaimRecord::param(std::string key, long value) { return param(std::move(key), std::to_string(value)); }
ClaimRecord& ClaimRecord::witness(std::string key, std::string value) {
  witnesses.emplace_back(std::move(key), std::move(value));
  return *this;
}
ClaimRecord& ClaimRecord::witness(std::string key, long value) {
  return witness(std::move(key), std::to_string(value));
}
ClaimRecord& ClaimRecord::fail(std::string why) {
  if (passed) detail = std::move(why);
  passed = false;
  return *this;
}

void Certificate::finalize() {
  passed = true;
  for (const auto& c : claims) passed = passed && c.passed;
}

std::vector<Certificate::FamilySummary> Certificate::families() const {
  std::vector<FamilySummary> out;
  for (const auto& c : claims) {
    auto it = std::find_if(out.begin(), out.end(), [&](const FamilySummary& f) { return f.family == c.family; });
    if (it == out.end()) {
      out.push_back({c.family, true, 0});
      it = out.end() - 1;
    }
    it->passed = it->passed && c.passed;
    ++it->claims;
  }
  return out;
}

const ClaimRecord* Certificate::find(const std::string& id) const {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

namespace {

json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& kv) {
  json o = json::object();
  for (const auto& [k, v] : kv) o[k] = v;
  return o;
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(const json& o) {
  if (!o.is_object()) throw std::invalid_argument("certificate: expected object");
  std::vector<std::pair<std::string, std::string>> kv;
  for (auto it = o.begin(); it != o.end(); ++it) kv.emplace_back(it.key(), it.value().get<std::string>());
  return kv;
}

std::string join_pairs(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ';';
    out += k + '=' + v;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_json(const Certificate& c, int indent) {
  json doc;
  doc["tool_version"] = c.tool_version;
  doc["parameters"] = pairs_to_json(c.parameters);
  json claims = json::array();
  for (const auto& r : c.claims) {
    json j;
    j["id"] = r.id;
    j["family"] = r.family;
    j["parameters"] = pairs_to_json(r.parameters);
    j["outcome"] = r.passed ? "pass" : "fail";
    j["checked"] = std::to_string(r.checked);
    j["witnesses"] = pairs_to_json(r.witnesses);
    j["detail"] = r.detail;
    claims.push_back(std::move(j));
  }
  doc["claims"] = std::move(claims);
  doc["verdict"] = c.passed ? "pass" : "fail";
  doc["timestamp"] = c.timestamp;
  return doc.dump(indent) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    Certificate c;
    c.tool_version = doc.at("tool_version").get<std::string>();
    c.parameters = pairs_from_json(doc.at("parameters"));
    for (const auto& j : doc.at("claims")) {
      ClaimRecord r;
      r.id = j.at("id").get<std::string>();
      r.family = j.at("family").get<std::string>();
      r.parameters = pairs_from_json(j.at("parameters"));
      const std::string outcome = j.at("outcome").get<std::string>();
      if (outcome != "pass" && outcome != "fail") throw std::invalid_argument("bad outcome " + outcome);
      r.passed = outcome == "pass";
      r.checked = std::stoull(j.at("checked").get<std::string>());
      r.witnesses = pairs_from_json(j.at("witnesses"));
      r.detail = j.at("detail").get<std::string>();
      c.claims.push_back(std::move(r));
    }
    const std::string verdict = doc.at("verdict").get<std::string>();
    c.timestamp = doc.at("timestamp").get<std::string>();
    c.finalize();
    if ((verdict == "pass") != c.passed) throw std::invalid_argument("verdict inconsistent with claim outcomes");
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("certificate: ") + e.what());
  }
}

std::string to_csv(const Certificate& c) {
  std::ostringstream out;
  out << "id,family,outcome,checked,parameters,witnesses,detail\n";
  for (const auto& r : c.claims) {
    out << csv_field(r.id) << ',' << csv_field(r.family) << ',' << (r.passed ? "pass" : "fail") << ','
        << r.checked << ',' << csv_field(join_pairs(r.parameters)) << ',' << csv_field(join_pairs(r.witnesses))
        << ',' << csv_field(r.detail) << '\n';
  }
  return out.str();
}

std::string to_text(const Certificate& c) {
  std::ostringstream out;
  out << c.tool_version << "  " << c.timestamp << '\n';
  out << "parameters: " << join_pairs(c.parameters) << '\n';
  for (const auto& r : c.claims) {
    out << (r.passed ? "PASS " : "FAIL ") << r.id << "  [" << r.checked << " checks]";
    if (!r.parameters.empty()) out << "  " << join_pairs(r.parameters);
    out << '\n';
    if (!r.passed) {
      out << "     " << r.detail << '\n';
      if (!r.witnesses.empty()) out << "     witness: " << join_pairs(r.witnesses) << '\n';
    }
  }
  out << "verdict: " << (c.passed ? "pass" : "fail") << '\n';
  return out.str();
}

std::string serialize(const Certificate& c, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return to_json(c);
    case OutputFormat::csv: return to_csv(c);
    case OutputFormat::text: return to_text(c);
  }
  return {};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace qlc
