// qlc: command-line front end over the C API.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 I/O error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlc/qlc.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Freer {
  void operator()(char* s) const { qlc_string_free(s); }
};
using CString = std::unique_ptr<char, Freer>;

struct Options {
  std::string family = "D";
  long n_min = 0;
  long n_max = -1;
  std::string format = "text";
  std::string out;
  std::string cache;
  unsigned jobs = 0;
  long series_N = 100;
  unsigned digits = 40;
  std::string kind;
  std::string fault;
  long n_max_factorization = 60;
  long n_max_sturm = 100;
  long n_max_monotonicity = 300;
  long n_max_root_ratio = 120;
};

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::string resolve_cache(const std::string& flag) {
  if (!flag.empty()) return flag;
  const char* dir = std::getenv("QLC_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::string(dir) + "/families.v1.tsv";
}

char family_char(const std::string& s) { return s.size() == 1 ? s[0] : '\0'; }

int usage(const std::string& msg) {
  std::cerr << "qlc: " << msg << "\n";
  return kExitUsage;
}

int api_error(qlc_status s) {
  std::cerr << "qlc: " << qlc_last_error() << "\n";
  if (s == QLC_ERR_ARGUMENT) return kExitUsage;
  if (s == QLC_ERR_IO) return kExitIo;
  return kExitFail;
}

// Writes to --out or stdout. Returns false after reporting an I/O failure.
bool emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (f) f << text;
  if (!f) {
    std::cerr << "qlc: cannot write " << o.out << "\n";
    return false;
  }
  return true;
}

int cmd_families(const Options& o) {
  const char fam = family_char(o.family);
  if (o.n_max < 0) return usage("families needs --n-max");
  if (o.n_min < 0 || o.n_min > o.n_max) return usage("families needs 0 <= --n-min <= --n-max");
  qlc_poly** polys = nullptr;
  size_t count = 0;
  const qlc_status s = qlc_family_polys(fam, o.n_min, o.n_max, resolve_cache(o.cache).c_str(), &polys, &count);
  if (s != QLC_OK && polys == nullptr) return api_error(s);
  if (s != QLC_OK) std::cerr << "qlc: warning: " << qlc_last_error() << "\n";

  std::ostringstream out;
  nlohmann::ordered_json doc;
  if (o.format == "csv") out << "n,k,coefficient\n";
  if (o.format == "json") {
    doc["family"] = std::string(1, fam);
    doc["rows"] = nlohmann::ordered_json::array();
  }
  for (size_t i = 0; i < count; ++i) {
    const long n = o.n_min + static_cast<long>(i);
    const long deg = qlc_poly_degree(polys[i]);
    std::vector<std::string> coeffs;
    for (long k = 0; k <= deg; ++k) {
      char* c = nullptr;
      qlc_poly_coeff(polys[i], k, &c);
      coeffs.emplace_back(CString(c).get());
    }
    if (o.format == "csv") {
      for (long k = 0; k <= deg; ++k) out << n << ',' << k << ',' << coeffs[k] << '\n';
    } else if (o.format == "json") {
      doc["rows"].push_back({{"n", std::to_string(n)}, {"coefficients", coeffs}});
    } else {
      for (long k = 0; k <= deg; ++k) out << (k ? " " : "") << coeffs[k];
      out << '\n';
    }
  }
  qlc_poly_array_free(polys, count);
  if (o.format == "json") out << doc.dump(2) << '\n';
  return emit(o, out.str()) ? kExitPass : kExitIo;
}

int cmd_check(const Options& o) {
  const char fam = family_char(o.family);
  const long n_max = o.n_max < 0 ? 50 : o.n_max;
  qlc_report* r = nullptr;
  qlc_status s;
  if (o.kind == "qlc") {
    s = qlc_check_qlc(fam, n_max, resolve_jobs(o.jobs), resolve_cache(o.cache).c_str(), &r);
  } else if (o.kind == "logconvex") {
    s = qlc_check_logconvex(fam, n_max, &r);
  } else {
    s = qlc_check_crossing(fam, n_max, resolve_jobs(o.jobs), &r);
  }
  if (r == nullptr) return api_error(s);
  const bool passed = qlc_report_passed(r) != 0;
  std::ostringstream out;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["check"] = o.kind;
    j["family"] = o.family;
    j["n_max"] = std::to_string(n_max);
    j["outcome"] = passed ? "pass" : "fail";
    j["checked"] = std::to_string(qlc_report_checked(r));
    j["witness"] = qlc_report_witness(r);
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "check,family,n_max,outcome,checked,witness\n"
        << o.kind << ',' << o.family << ',' << n_max << ',' << (passed ? "pass" : "fail") << ','
        << qlc_report_checked(r) << ',' << qlc_report_witness(r) << '\n';
  } else {
    out << qlc_report_summary(r) << '\n';
    if (!passed) out << "first witness: " << qlc_report_witness(r) << '\n';
  }
  qlc_report_free(r);
  if (!emit(o, out.str())) return kExitIo;
  if (s == QLC_ERR_IO) return api_error(s);
  return passed ? kExitPass : kExitFail;
}

std::optional<std::vector<long>> parse_fault(const std::string& spec) {
  std::vector<long> v;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stol(item, &used));
      if (used != item.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (v.size() != 4) return std::nullopt;
  return v;
}

int cmd_verify(const Options& o) {
  std::unique_ptr<qlc_config, decltype(&qlc_config_free)> cfg(qlc_config_new(), qlc_config_free);
  const std::pair<const char*, std::string> settings[] = {
      {"n_max_direct", std::to_string(o.n_max < 0 ? 150 : o.n_max)},
      {"n_max_factorization", std::to_string(o.n_max_factorization)},
      {"n_max_sturm", std::to_string(o.n_max_sturm)},
      {"series_N", std::to_string(o.series_N)},
      {"series_digits", std::to_string(o.digits)},
      {"n_max_monotonicity", std::to_string(o.n_max_monotonicity)},
      {"n_max_root_ratio", std::to_string(o.n_max_root_ratio)},
      {"jobs", std::to_string(resolve_jobs(o.jobs))},
      {"cache_path", resolve_cache(o.cache)},
  };
  for (const auto& [key, value] : settings) {
    const qlc_status s = qlc_config_set(cfg.get(), key, value.c_str());
    if (s != QLC_OK) return api_error(s);
  }
  if (!o.fault.empty()) {
    const auto f = parse_fault(o.fault);
    if (!f) return usage("--inject-psi-fault expects n,t,coefficient,delta");
    const qlc_status s = qlc_config_set_psi_fault(cfg.get(), (*f)[0], (*f)[1], (*f)[2], (*f)[3]);
    if (s != QLC_OK) return api_error(s);
  }

  qlc_certificate* cert = nullptr;
  const qlc_status s = qlc_verify(cfg.get(), &cert);
  if (cert == nullptr) return api_error(s);
  std::unique_ptr<qlc_certificate, decltype(&qlc_certificate_free)> owned(cert, qlc_certificate_free);

  char* text = nullptr;
  const qlc_status ss = qlc_certificate_serialize(cert, o.format.c_str(), &text);
  if (ss != QLC_OK) return api_error(ss);
  const bool written = emit(o, CString(text).get());

  std::ostream& log = o.out.empty() ? std::cerr : std::cout;
  for (size_t i = 0; i < qlc_certificate_family_count(cert); ++i) {
    const char* family = nullptr;
    int passed = 0;
    size_t claims = 0;
    qlc_certificate_family(cert, i, &family, &passed, &claims);
    log << (passed ? "PASS " : "FAIL ") << family << " (" << claims << " claims)\n";
  }
  const bool passed = qlc_certificate_passed(cert) != 0;
  log << "verdict: " << (passed ? "pass" : "fail") << "\n";
  if (!written) return kExitIo;
  if (s == QLC_ERR_IO) return api_error(s);
  return passed ? kExitPass : kExitFail;
}

int cmd_series(const Options& o) {
  char* sum = nullptr;
  char* ref = nullptr;
  char* err = nullptr;
  int passed = 0;
  const qlc_status s = qlc_series(o.series_N, o.digits, &sum, &ref, &err, &passed);
  if (s != QLC_OK) return api_error(s);
  CString a(sum), b(ref), c(err);
  std::ostringstream out;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["N"] = std::to_string(o.series_N);
    j["digits"] = std::to_string(o.digits);
    j["partial_sum"] = a.get();
    j["reference"] = b.get();
    j["error_bound"] = c.get();
    j["tolerance"] = "1e-28";
    j["outcome"] = passed ? "pass" : "fail";
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "N,digits,partial_sum,reference,error_bound,outcome\n"
        << o.series_N << ',' << o.digits << ',' << a.get() << ',' << b.get() << ',' << c.get() << ','
        << (passed ? "pass" : "fail") << '\n';
  } else {
    out << "S_" << o.series_N << "      = " << a.get() << '\n'
        << "8/(sqrt3 pi) = " << b.get() << '\n'
        << "error bound  = " << c.get() << '\n'
        << (passed ? "pass" : "fail") << " (tolerance 1e-28)\n";
  }
  if (!emit(o, out.str())) return kExitIo;
  return passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for q-log-convexity of Domb polynomials"};
  app.set_version_flag("--version", qlc_version());
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats = {"json", "csv", "text"};
  const std::vector<std::string> families = {"D", "W", "V", "F"};

  auto* fam = app.add_subcommand("families", "Emit family polynomial coefficients");
  fam->add_option("--family", o.family, "Family tag")->check(CLI::IsMember(families));
  fam->add_option("--n-min", o.n_min, "First n")->default_val(0);
  fam->add_option("--n-max", o.n_max, "Last n")->required();
  fam->add_option("--format", o.format)->check(CLI::IsMember(formats));
  fam->add_option("--out", o.out, "Output file");
  fam->add_option("--cache", o.cache, "Family cache file");

  auto* check = app.add_subcommand("check", "Run one check");
  check->add_option("kind", o.kind, "qlc, logconvex or crossing")
      ->required()
      ->check(CLI::IsMember({"qlc", "logconvex", "crossing"}));
  check->add_option("--family", o.family, "Family tag")->check(CLI::IsMember(families));
  check->add_option("--n-max", o.n_max, "Largest n (default 50)");
  check->add_option("--format", o.format)->check(CLI::IsMember(formats));
  check->add_option("--out", o.out, "Output file");
  check->add_option("--cache", o.cache, "Family cache file");
  check->add_option("--jobs", o.jobs, "Worker threads (default: all cores)");

  auto* verify = app.add_subcommand("verify-paper", "Run every claim family and write a certificate");
  o.format = "json";
  verify->add_option("--n-max", o.n_max, "Bound for direct sweeps (default 150)");
  verify->add_option("--n-max-factorization", o.n_max_factorization)->capture_default_str();
  verify->add_option("--n-max-sturm", o.n_max_sturm)->capture_default_str();
  verify->add_option("--n-max-monotonicity", o.n_max_monotonicity)->capture_default_str();
  verify->add_option("--n-max-root-ratio", o.n_max_root_ratio)->capture_default_str();
  verify->add_option("--series-N", o.series_N)->capture_default_str();
  verify->add_option("--digits", o.digits)->capture_default_str();
  verify->add_option("--format", o.format)->check(CLI::IsMember(formats))->capture_default_str();
  verify->add_option("--out", o.out, "Certificate file (default stdout)");
  verify->add_option("--cache", o.cache, "Family cache file");
  verify->add_option("--jobs", o.jobs, "Worker threads (default: all cores)");
  verify->add_option("--inject-psi-fault", o.fault, "n,t,coefficient,delta")->group("");

  auto* series = app.add_subcommand("series", "Compare the 1/pi series partial sum against 8/(sqrt(3) pi)");
  series->add_option("--series-N", o.series_N)->capture_default_str();
  series->add_option("--digits", o.digits)->capture_default_str();
  series->add_option("--format", o.format)->check(CLI::IsMember(formats));
  series->add_option("--out", o.out, "Output file");

  // Text is the default everywhere except verify-paper.
  for (auto* sub : {fam, check, series}) {
    sub->preparse_callback([&o](std::size_t) { o.format = "text"; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*fam) return cmd_families(o);
  if (*check) return cmd_check(o);
  if (*verify) return cmd_verify(o);
  return cmd_series(o);
}
