#include "ehs/report.hpp"

#include <sstream>

namespace ehs {

namespace {

constexpr int kHumanDigits = 20;
constexpr int kErrorDigits = 6;

Json value_to_json(const ParamValue& value) {
  if (const auto* z = std::get_if<BigComplex>(&value)) return complex_to_json(*z);
  return std::get<std::string>(value);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

const char* status_name(Status status) { return status == Status::pass ? "PASS" : "FAIL"; }

Json complex_to_json(const BigComplex& z, int sig) {
  if (sig <= 0) return Json::array({z.re.to_exact_string(), z.im.to_exact_string()});
  return Json::array({z.re.to_string(sig), z.im.to_string(sig)});
}

BigComplex complex_from_json(const Json& value) {
  if (value.is_string()) return {Real::parse(value.get<std::string>()), Real(0)};
  if (value.is_array() && value.size() == 2 && value[0].is_string() && value[1].is_string()) {
    return {Real::parse(value[0].get<std::string>()), Real::parse(value[1].get<std::string>())};
  }
  throw ConfigError("complex values must be [\"re\", \"im\"] decimal-string pairs, got " + value.dump());
}

Json report_to_json(const VerificationReport& report) {
  Json trials = Json::array();
  for (const auto& trial : report.trials) {
    Json params = Json::object();
    for (const auto& param : trial.params) params[param.name] = value_to_json(param.value);
    trials.push_back({{"params", std::move(params)},
                      {"lhs", complex_to_json(trial.lhs, report.digits)},
                      {"rhs", complex_to_json(trial.rhs, report.digits)},
                      {"rel_err", trial.rel_err.to_string(kErrorDigits)}});
  }
  Json out;
  out["identity"] = report.identity;
  out["n"] = report.n;
  out["N"] = report.N;
  out["digits"] = report.digits;
  out["seed"] = report.seed;
  out["trials"] = std::move(trials);
  out["max_rel_err"] = report.max_rel_err.to_string(kErrorDigits);
  out["status"] = status_name(report.status);
  out["resample_count"] = report.resample_count;
  out["wall_time_ms"] = report.wall_time_ms ? Json(*report.wall_time_ms) : Json(nullptr);
  return out;
}

Json suite_to_json(const std::vector<VerificationReport>& sections, std::uint64_t seed, int digits) {
  bool all_pass = true;
  Json list = Json::array();
  for (const auto& section : sections) {
    all_pass = all_pass && section.status == Status::pass;
    list.push_back(report_to_json(section));
  }
  Json out;
  out["seed"] = seed;
  out["digits"] = digits;
  out["status"] = all_pass ? "PASS" : "FAIL";
  out["sections"] = std::move(list);
  return out;
}

std::string report_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "identity,n,N,digits,seed,trial,lhs_re,lhs_im,rhs_re,rhs_im,rel_err,status\n";
  for (const auto& report : reports) {
    for (size_t t = 0; t < report.trials.size(); ++t) {
      const auto& trial = report.trials[t];
      out << csv_field(report.identity) << ',' << report.n << ',' << report.N << ',' << report.digits << ','
          << report.seed << ',' << t + 1 << ',' << trial.lhs.re.to_string(report.digits) << ','
          << trial.lhs.im.to_string(report.digits) << ',' << trial.rhs.re.to_string(report.digits) << ','
          << trial.rhs.im.to_string(report.digits) << ',' << trial.rel_err.to_string(kErrorDigits) << ','
          << status_name(report.status) << '\n';
    }
  }
  return out.str();
}

std::string report_to_human(const VerificationReport& report) {
  std::ostringstream out;
  out << report.identity << "  n=" << report.n << " N=" << report.N << "  digits=" << report.digits
      << "  seed=" << report.seed << '\n';
  for (size_t t = 0; t < report.trials.size(); ++t) {
    const auto& trial = report.trials[t];
    out << "  trial " << t + 1 << "  rel_err " << trial.rel_err.to_string(3) << '\n'
        << "    lhs " << format_complex(trial.lhs, kHumanDigits) << '\n'
        << "    rhs " << format_complex(trial.rhs, kHumanDigits) << '\n';
  }
  out << "  max_rel_err " << report.max_rel_err.to_string(3) << " (tolerance " << report.tolerance.to_string(3)
      << ")  resamples " << report.resample_count << "  " << status_name(report.status) << '\n';
  for (const auto& note : report.notes) out << "  note: " << note << '\n';
  return out.str();
}

}  // namespace ehs
