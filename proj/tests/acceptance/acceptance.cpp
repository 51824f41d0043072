// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Thresholds are pinned here rather than read from the library, so a change
// to the library's tolerance policy cannot silently loosen them.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ehs/verify.hpp"

using namespace ehs;

namespace {

constexpr int kDigits = 50;
constexpr std::uint64_t kSeed = 1;
constexpr double kIdentityTol = 1e-35;
constexpr double kReductionTol = 1e-40;
constexpr double kStructuralTol = 1e-45;
constexpr double kDegenerationTol = 1e-40;
constexpr double kCellSeconds = 10.0;
constexpr double kSuiteSeconds = 300.0;
constexpr int kStructuralChecks = 100;

struct Section {
  const char* identity;
  int n;
  int N;
  int trials;
};

std::vector<Section> grid(const char* identity, int n_lo, int n_hi, int N_lo, int N_hi, int trials) {
  std::vector<Section> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int N = N_lo; N <= N_hi; ++N) out.push_back({identity, n, N, trials});
  }
  return out;
}

std::vector<Section> concat(std::initializer_list<std::vector<Section>> parts) {
  std::vector<Section> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

// Aggregate over the sections of one criterion.
struct Outcome {
  bool ok = true;
  double worst = 0;
  double slowest_s = 0;
  long trials = 0;
  std::string detail;
};

Outcome run_sections(const std::vector<Section>& sections, double tolerance) {
  PrecisionContext ctx(kDigits);
  SampleConfig config;
  config.seed = kSeed;
  Outcome out;
  for (const auto& s : sections) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    try {
      report = verify_identity(s.identity, s.n, s.N, s.trials, config, ctx);
    } catch (const Error& e) {
      out.ok = false;
      out.detail += std::string(" ") + s.identity + " raised: " + e.what() + ";";
      continue;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double err = report.max_rel_err.to_double();
    out.slowest_s = std::max(out.slowest_s, seconds);
    out.worst = std::max(out.worst, err);
    out.trials += static_cast<long>(report.trials.size());
    if (!(err < tolerance) || report.status != Status::pass || report.digits != kDigits) {
      out.ok = false;
      out.detail += std::string(" ") + s.identity + " n=" + std::to_string(s.n) + " N=" + std::to_string(s.N) +
                    " err=" + report.max_rel_err.to_string(3) + ";";
    }
  }
  return out;
}

int failures = 0;

void print(int number, const std::string& title, bool ok, const std::string& summary) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << number << "] " << title << ": " << summary << std::endl;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

void report(int number, const std::string& title, const Outcome& o, double tolerance, const std::string& extra = "") {
  print(number, title, o.ok,
        "max rel err " + sci(o.worst) + " < " + sci(tolerance) + ", " + std::to_string(o.trials) + " trials" + extra +
            o.detail);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main() {
  {
    const Outcome o = run_sections(grid("cn-jackson", 1, 3, 0, 3, 10), kIdentityTol);
    Outcome timed = o;
    timed.ok = o.ok && o.slowest_s < kCellSeconds;
    report(1, "C_n Jackson sum, (n,N) in {1..3}x{0..3}", timed, kIdentityTol,
           ", slowest cell " + sci(o.slowest_s) + " s < " + sci(kCellSeconds) + " s");
  }
  report(2, "two-valued sum over x_1..x_n, n in 1..5",
         run_sections(grid("warnaar-lemma", 1, 5, 0, 0, 10), kIdentityTol), kIdentityTol);
  {
    const Outcome sum = run_sections(grid("warnaar-thm51", 1, 3, 1, 3, 10), kIdentityTol);
    const Outcome reduction = run_sections(grid("thm51-reduction", 1, 5, 0, 0, 10), kReductionTol);
    print(3, "terminating sum over x_1..x_n and its N=1 reduction", sum.ok && reduction.ok,
          "sum " + sci(sum.worst) + " < " + sci(kIdentityTol) + " over " + std::to_string(sum.trials) +
              " trials, termwise reduction " + sci(reduction.worst) + " < " + sci(kReductionTol) + sum.detail +
              reduction.detail);
  }
  report(4, "one-variable Jackson and Bailey, N <= 4",
         run_sections(concat({grid("jackson-1var", 0, 0, 0, 4, 10), grid("bailey", 0, 0, 0, 4, 10),
                              grid("additive-bailey", 0, 0, 0, 4, 10)}),
                      kIdentityTol),
         kIdentityTol);
  report(5, "termwise duality n,N <= 4 and A/B invariance n,N <= 3",
         run_sections(concat({grid("duality", 1, 4, 0, 4, 3), grid("ab-invariance", 1, 3, 0, 3, 3)}), kIdentityTol),
         kIdentityTol);
  {
    const char* singles[] = {"reflection", "quasi-periodicity", "addition", "addition-trig", "poch-splitting"};
    std::vector<Section> sections = grid("dp-identity", 1, 6, 0, 0, 20);
    for (const char* name : singles) sections.push_back({name, 0, 0, kStructuralChecks});
    sections = concat({sections, grid("poch-conjugation", 1, 4, 1, 4, 10)});
    Outcome all = run_sections(sections, kStructuralTol);
    // At least 100 checks per structural identity.
    const long dp_checks = 6 * 20;
    const long conj_checks = 16 * 10;
    all.ok = all.ok && dp_checks >= kStructuralChecks && conj_checks >= kStructuralChecks;
    report(6, "structural identities, >= 100 checks each", all, kStructuralTol);
  }
  report(7, "p = 0 degeneration against a basic oracle, n,N <= 3",
         run_sections(grid("degeneration-p0", 1, 3, 0, 3, 5), kDegenerationTol), kDegenerationTol);
  report(8, "right side recursion and box-ratio closed form, n,N <= 3",
         run_sections(concat({grid("rhs-recursion", 1, 3, 0, 3, 10), grid("box-ratio", 1, 3, 1, 3, 3)}),
                      kIdentityTol),
         kIdentityTol);

  {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const std::string first = (dir / "ehs_acceptance_1.json").string();
    const std::string second = (dir / "ehs_acceptance_2.json").string();
    bool ok = true;
    double slowest = 0;
    for (const auto& path : {first, second}) {
      const std::string command = std::string("\"") + EHS_CLI_PATH + "\" suite --all --seed 1 --digits 50 --json \"" +
                                  path + "\" --format json > /dev/null";
      const auto start = std::chrono::steady_clock::now();
      const int rc = std::system(command.c_str());
      slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      ok = ok && rc == 0;
    }
    const std::string a = slurp(first), b = slurp(second);
    const bool identical = !a.empty() && a == b;
    print(9, "suite --all --seed 1 --digits 50 is reproducible", ok && identical && slowest < kSuiteSeconds,
          std::string("exit ") + (ok ? "0" : "nonzero") + ", JSON " + (identical ? "byte-identical" : "differs") +
              " (" + std::to_string(a.size()) + " bytes), slowest run " + sci(slowest) + " s < " + sci(kSuiteSeconds) +
              " s");
  }

  std::cout << (failures == 0 ? "acceptance PASS" : "acceptance FAIL") << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
