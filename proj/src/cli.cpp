#include "ehs/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ehs/report.hpp"

namespace ehs {

namespace {

int default_digits() {
  const char* env = std::getenv("EHS_DIGITS");
  if (env == nullptr || *env == '\0') return PrecisionContext::kDefaultDigits;
  char* end = nullptr;
  const long digits = std::strtol(env, &end, 10);
  if (*end != '\0' || digits < 0 || digits > 100000) {
    throw ConfigError("EHS_DIGITS must be a positive integer, got '" + std::string(env) + "'");
  }
  return static_cast<int>(digits);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

// Reads parameters from a JSON object and records every value it hands out,
// in canonical form, so the set can be written back with --dump-params.
class ParamReader {
 public:
  explicit ParamReader(Json source) : source_(std::move(source)) {
    if (!source_.is_object()) throw ConfigError("parameter file must hold a JSON object");
  }

  bool has(const char* key) const { return source_.contains(key); }

  BigComplex complex(const char* key) {
    if (!has(key)) throw ConfigError(std::string("missing parameter '") + key + "'");
    return record(key, complex_from_json(source_[key]));
  }

  BigComplex complex_or(const char* key, const BigComplex& fallback) {
    return has(key) ? complex(key) : record(key, fallback);
  }

  int integer(const char* key, std::optional<int> fallback = std::nullopt) {
    int value = 0;
    if (has(key)) {
      if (!source_[key].is_number_integer()) throw ConfigError(std::string("'") + key + "' must be an integer");
      value = source_[key].get<int>();
    } else if (fallback) {
      value = *fallback;
    } else {
      throw ConfigError(std::string("missing parameter '") + key + "'");
    }
    canonical_[key] = value;
    return value;
  }

  std::vector<BigComplex> complex_list(const char* key) {
    if (!has(key) || !source_[key].is_array()) throw ConfigError(std::string("'") + key + "' must be a list");
    std::vector<BigComplex> out;
    Json list = Json::array();
    for (const auto& item : source_[key]) {
      out.push_back(complex_from_json(item));
      list.push_back(complex_to_json(out.back()));
    }
    canonical_[key] = std::move(list);
    return out;
  }

  std::vector<int> int_list(const char* key) {
    if (!has(key) || !source_[key].is_array()) throw ConfigError(std::string("'") + key + "' must be a list");
    std::vector<int> out;
    for (const auto& item : source_[key]) {
      if (!item.is_number_integer()) throw ConfigError(std::string("'") + key + "' must hold integers");
      out.push_back(item.get<int>());
    }
    canonical_[key] = out;
    return out;
  }

  BigComplex record(const char* key, BigComplex value) {
    canonical_[key] = complex_to_json(value);
    return value;
  }

  const Json& canonical() const { return canonical_; }

 private:
  Json source_;
  Json canonical_ = Json::object();
};

EllipticBase read_base(ParamReader& r, bool with_x) {
  EllipticBase base;
  base.p = r.complex("p");
  base.q = r.complex("q");
  base.x = with_x ? r.complex("x") : BigComplex(1);
  return base;
}

CnParams read_cn(ParamReader& r, const PrecisionContext& ctx) {
  CnParams P;
  P.base = read_base(r, true);
  P.n = r.integer("n");
  P.N = r.integer("N");
  P.a = r.complex("a");
  P.b = r.complex("b");
  P.c = r.complex("c");
  P.d = r.complex("d");
  if (r.has("e")) {
    P.e = r.complex("e");
  } else {
    solve_constraint(P, ctx);
    r.record("e", P.e);
  }
  return P;
}

LemmaParams read_lemma(ParamReader& r, bool general, const PrecisionContext& ctx) {
  LemmaParams P;
  P.p = r.complex("p");
  P.q = r.complex("q");
  if (general) P.N = r.integer("N");
  P.a = r.complex("a");
  P.b = r.complex("b");
  P.c = r.complex("c");
  P.d = r.complex("d");
  P.xs = r.complex_list("xs");
  if (r.has("e")) {
    P.e = r.complex("e");
  } else {
    solve_constraint(P, ctx);
    r.record("e", P.e);
  }
  return P;
}

BaileyParams read_bailey(ParamReader& r, const PrecisionContext& ctx) {
  BaileyParams P;
  P.p = r.complex("p");
  P.q = r.complex("q");
  P.N = r.integer("N");
  P.a = r.complex("a");
  P.b = r.complex("b");
  P.c = r.complex("c");
  P.d = r.complex("d");
  P.e = r.complex("e");
  P.f = r.complex("f");
  if (r.has("g")) {
    P.g = r.complex("g");
  } else {
    solve_constraint(P, ctx);
    r.record("g", P.g);
  }
  return P;
}

OmegaParams read_omega(ParamReader& r) {
  OmegaParams P;
  P.base = read_base(r, true);
  P.n = r.integer("n");
  P.N = r.integer("N");
  P.a = r.complex("a");
  P.bs = r.complex_list("bs");
  return P;
}

using Evaluator = BigComplex (*)(ParamReader&, const PrecisionContext&);

const std::map<std::string, Evaluator>& evaluators() {
  static const std::map<std::string, Evaluator> table{
      {"theta", [](ParamReader& r, const PrecisionContext& ctx) { return theta_E(r.complex("x"), r.complex("p"), ctx); }},
      {"qpoch",
       [](ParamReader& r, const PrecisionContext& ctx) {
         const EllipticBase base = read_base(r, false);
         const BigComplex a = r.complex("a");
         return qpoch(a, r.integer("k"), base, ctx);
       }},
      {"part-poch",
       [](ParamReader& r, const PrecisionContext& ctx) {
         const EllipticBase base = read_base(r, true);
         const BigComplex a = r.complex("a");
         const std::vector<int> parts = r.int_list("lambda");
         int widest = 0;
         for (int part : parts) widest = std::max(widest, part);
         const Partition lambda(parts, r.integer("N", widest));
         return part_poch(a, lambda, base, ctx);
       }},
      {"omega",
       [](ParamReader& r, const PrecisionContext& ctx) {
         const BigComplex p = r.complex("p");
         const BigComplex q = r.complex("q");
         const int N = r.integer("N");
         const BigComplex a = r.complex("a");
         const auto bs = r.complex_list("bs");
         return omega_one_var(a, bs, N, q, p, ctx);
       }},
      {"cn-lhs", [](ParamReader& r, const PrecisionContext& ctx) { return cn_lhs(read_cn(r, ctx), ctx); }},
      {"cn-rhs", [](ParamReader& r, const PrecisionContext& ctx) { return cn_rhs(read_cn(r, ctx), ctx); }},
      {"lemma-lhs",
       [](ParamReader& r, const PrecisionContext& ctx) { return warnaar_lemma_lhs(read_lemma(r, false, ctx), ctx); }},
      {"lemma-rhs",
       [](ParamReader& r, const PrecisionContext& ctx) { return warnaar_lemma_rhs(read_lemma(r, false, ctx), ctx); }},
      {"thm51-lhs",
       [](ParamReader& r, const PrecisionContext& ctx) { return warnaar_thm51_lhs(read_lemma(r, true, ctx), ctx); }},
      {"thm51-rhs",
       [](ParamReader& r, const PrecisionContext& ctx) { return warnaar_thm51_rhs(read_lemma(r, true, ctx), ctx); }},
      {"omega-Omega", [](ParamReader& r, const PrecisionContext& ctx) { return omega_Omega(read_omega(r), ctx); }},
      {"bailey-lhs", [](ParamReader& r, const PrecisionContext& ctx) { return bailey_lhs(read_bailey(r, ctx), ctx); }},
      {"bailey-rhs", [](ParamReader& r, const PrecisionContext& ctx) { return bailey_rhs(read_bailey(r, ctx), ctx); }},
  };
  return table;
}

struct Options {
  int digits = 0;
  std::string series;
  std::string params_path;
  std::string dump_path;
  std::string identity;
  int n = 1;
  int N = 1;
  int trials = 10;
  std::uint64_t seed = 1;
  std::string json_path;
  std::string csv_path;
  std::string format = "human";
  bool timing = false;
  bool all = false;
  std::string list;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const auto& table = evaluators();
  auto it = table.find(o.series);
  if (it == table.end()) throw ConfigError("unknown series '" + o.series + "'");
  PrecisionContext ctx(o.digits);
  ScopedPrecision scope(ctx);
  ParamReader reader(read_json_file(o.params_path));
  const BigComplex value = it->second(reader, ctx);
  if (!o.dump_path.empty()) write_file(o.dump_path, reader.canonical().dump(2) + "\n");
  out << format_complex(value, ctx.digits()) << '\n';
  return kExitPass;
}

VerificationReport timed_verify(const std::string& identity, int n, int N, int trials, const SampleConfig& config,
                                const PrecisionContext& ctx, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = verify_identity(identity, n, N, trials, config, ctx);
  if (timing) {
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

int cmd_verify(const Options& o, std::ostream& out) {
  PrecisionContext ctx(o.digits);
  SampleConfig config;
  config.seed = o.seed;
  VerificationReport report = timed_verify(o.identity, o.n, o.N, o.trials, config, ctx, o.timing);
  if (!o.json_path.empty()) write_file(o.json_path, report_to_json(report).dump(2) + "\n");
  if (!o.csv_path.empty()) write_file(o.csv_path, report_to_csv({report}));
  if (o.format == "json") {
    out << report_to_json(report).dump(2) << '\n';
  } else if (o.format == "csv") {
    out << report_to_csv({report});
  } else {
    out << report_to_human(report);
  }
  return report.status == Status::pass ? kExitPass : kExitFail;
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream stream(list);
  std::string name;
  while (std::getline(stream, name, ',')) {
    if (!name.empty()) names.push_back(name);
  }
  return names;
}

int cmd_suite(const Options& o, std::ostream& out) {
  std::vector<std::string> selected;
  if (!o.all) {
    selected = split_names(o.list);
    if (selected.empty()) throw ConfigError("suite needs --all or a comma-separated identity list");
    for (const auto& name : selected) identity_info(name);
  }
  PrecisionContext ctx(o.digits);
  SampleConfig config;
  config.seed = o.seed;

  std::vector<VerificationReport> sections;
  for (const auto& section : suite_plan()) {
    if (!o.all && std::find(selected.begin(), selected.end(), section.identity) == selected.end()) continue;
    sections.push_back(timed_verify(section.identity, section.n, section.N, section.trials, config, ctx, o.timing));
    const auto& report = sections.back();
    if (o.format == "human") {
      out << status_name(report.status) << "  " << report.identity << "  n=" << report.n << " N=" << report.N
          << "  trials=" << report.trials.size() << "  max_rel_err " << report.max_rel_err.to_string(3)
          << "  tolerance " << report.tolerance.to_string(3) << '\n';
      for (const auto& note : report.notes) out << "  note: " << note << '\n';
    }
  }
  const Json aggregate = suite_to_json(sections, o.seed, o.digits);
  if (!o.json_path.empty()) write_file(o.json_path, aggregate.dump(2) + "\n");
  if (!o.csv_path.empty()) write_file(o.csv_path, report_to_csv(sections));
  if (o.format == "json") out << aggregate.dump(2) << '\n';
  if (o.format == "csv") out << report_to_csv(sections);
  const bool all_pass = aggregate["status"] == "PASS";
  if (o.format == "human") out << (all_pass ? "suite PASS" : "suite FAIL") << '\n';
  return all_pass ? kExitPass : kExitFail;
}

int cmd_identities(std::ostream& out) {
  for (const auto& info : identities()) out << info.name << "  " << info.summary << '\n';
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Elliptic hypergeometric series: evaluation and identity verification", "ehs"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "human"};

  auto* eval = app.add_subcommand("eval", "evaluate one series from a JSON parameter file");
  eval->add_option("series", o.series, "theta, qpoch, part-poch, omega, cn-lhs, cn-rhs, lemma-lhs, lemma-rhs, "
                                       "thm51-lhs, thm51-rhs, omega-Omega, bailey-lhs, bailey-rhs")
      ->required();
  eval->add_option("params", o.params_path, "JSON parameter file")->required();
  eval->add_option("--dump-params", o.dump_path, "write the parsed parameters back in canonical form");
  eval->add_option("--digits", o.digits, "working precision in decimal digits");

  auto* verify = app.add_subcommand("verify", "verify one identity on seeded random samples");
  verify->add_option("--identity", o.identity, "identity name (see `ehs identities`)")->required();
  verify->add_option("--n", o.n, "rank n");
  verify->add_option("--N", o.N, "terminator N");
  verify->add_option("--trials", o.trials, "number of random samples");
  verify->add_option("--digits", o.digits, "working precision in decimal digits");
  verify->add_option("--seed", o.seed, "64-bit seed");
  verify->add_option("--json", o.json_path, "write the JSON report here");
  verify->add_option("--csv", o.csv_path, "write the CSV report here");
  verify->add_option("--format", o.format, "stdout format")->check(CLI::IsMember(formats));
  verify->add_flag("--timing", o.timing, "record wall_time_ms (reports are then not reproducible)");

  auto* suite = app.add_subcommand("suite", "run the acceptance matrix or named sections of it");
  suite->add_flag("--all", o.all, "run every section");
  suite->add_option("list", o.list, "comma-separated identity names");
  suite->add_option("--digits", o.digits, "working precision in decimal digits");
  suite->add_option("--seed", o.seed, "64-bit seed");
  suite->add_option("--json", o.json_path, "write the aggregate JSON report here");
  suite->add_option("--csv", o.csv_path, "write the CSV report here");
  suite->add_option("--format", o.format, "stdout format")->check(CLI::IsMember(formats));
  suite->add_flag("--timing", o.timing, "record wall_time_ms (reports are then not reproducible)");

  auto* list = app.add_subcommand("identities", "list the identities known to verify and suite");

  std::vector<const char*> argv{"ehs"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    o.digits = default_digits();
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (suite->parsed()) return cmd_suite(o, out);
    if (list->parsed()) return cmd_identities(out);
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << '\n';
    return kExitPole;
  } catch (const SamplingError& e) {
    err << "sampling: " << e.what() << '\n';
    return kExitPole;
  } catch (const ConstraintError& e) {
    err << "constraint: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ehs
