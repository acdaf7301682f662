// Command-line front end: scan groups for unit families and certify their
// structure, sweep the polynomial identities, or explain a single verdict.
#include <cstdio>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gring/report.hpp"

namespace {

gring::CoeffRing parse_ring(const std::string& text) {
  if (text == "int") return gring::CoeffRing::integers();
  if (text.rfind("gf:", 0) == 0) {
    return gring::CoeffRing::prime_field(std::stoull(text.substr(3)));
  }
  throw CLI::ValidationError("--ring", "expected 'int' or 'gf:<prime>'");
}

std::optional<std::vector<int>> parse_k_selector(const std::string& text) {
  if (text == "all") return std::nullopt;
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw CLI::ValidationError("--k", "expected 'all' or a comma-separated list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact unit-family construction and certification in integral group rings"};
  app.require_subcommand(1);

  // ---- scan ----------------------------------------------------------------
  auto* scan = app.add_subcommand(
      "scan", "classify unit orders and certify free-product / commutator structure");
  std::string group_spec;
  std::string ring_text = "int";
  std::string k_text = "all";
  std::string format_text = "json";
  gring::RunConfig config;
  config.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  scan->add_option("--group", group_spec, "group spec, family name, or 'catalog'")->required();
  scan->add_option("--ring", ring_text, "coefficient ring: int | gf:<prime>")
      ->capture_default_str();
  scan->add_option("--k", k_text, "exponent selector: all | comma list")->capture_default_str();
  scan->add_option("--max-syllables", config.max_syllables, "freeness search depth")
      ->capture_default_str();
  scan->add_option("--exp-bound", config.exponent_bound,
                   "exponent bound for infinite-order letters")
      ->capture_default_str();
  scan->add_option("--free-word-budget", config.freeness_word_budget,
                   "per-record cap on words evaluated by the freeness search (0 = unlimited)")
      ->capture_default_str();
  scan->add_flag("--no-freeness", "skip the freeness search");
  scan->add_flag("--dedup", config.dedup,
                 "keep one witness per conjugacy class of the cyclic subgroup");
  scan->add_option("--format", format_text, "output format: json | md")->capture_default_str();
  scan->add_option("--jobs", config.jobs, "worker threads")->capture_default_str();
  scan->add_option("--max-order", config.limits.max_order, "group order cap")
      ->capture_default_str();

  // ---- verify-poly ---------------------------------------------------------
  auto* vp = app.add_subcommand("verify-poly", "sweep the cyclic polynomial identities");
  int power_n_max = 24;
  int nonvan_n_max = 16;
  int jls_max = 3;
  bool inject_fault = false;
  vp->add_option("--n-max", power_n_max, "modulus bound for the power identity sweep")
      ->capture_default_str();
  vp->add_option("--nonvan-n-max", nonvan_n_max, "modulus bound for the nonvanishing sweep")
      ->capture_default_str();
  vp->add_option("--jls-max", jls_max, "bound on the j, l, s exponents")->capture_default_str();
  vp->add_flag("--inject-fault", inject_fault,
               "testing hook: corrupt one polynomial and expect the sweep to fail");

  // ---- explain -------------------------------------------------------------
  auto* explain = app.add_subcommand("explain", "explain the verdict for one (a, b, k) record");
  std::string ex_group, ex_a, ex_b;
  int ex_k = 1;
  std::string ex_ring = "int";
  explain->add_option("--group", ex_group, "group spec or family name")->required();
  explain->add_option("--a", ex_a, "cycle notation for a")->required();
  explain->add_option("--b", ex_b, "cycle notation for b")->required();
  explain->add_option("--k", ex_k, "exponent k")->required();
  explain->add_option("--ring", ex_ring, "coefficient ring: int | gf:<prime>")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (scan->parsed()) {
      config.group_spec = group_spec;
      config.ring = parse_ring(ring_text);
      config.k_list = parse_k_selector(k_text);
      config.run_freeness = scan->count("--no-freeness") == 0;
      if (format_text == "json") {
        config.format = gring::RunConfig::Format::Json;
      } else if (format_text == "md") {
        config.format = gring::RunConfig::Format::Markdown;
      } else {
        std::cerr << "error: unknown format '" << format_text << "'\n";
        return 2;
      }

      std::cerr << "scanning " << config.group_spec << " over " << config.ring.describe()
                << " with " << config.jobs << " worker(s)\n";
      std::mutex progress_mutex;
      config.progress = [&](long long done, long long total) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        std::cerr << "  " << done << "/" << total << " records\n";
      };
      gring::ScanResult result = gring::run_scan(config);
      if (config.format == gring::RunConfig::Format::Json) {
        std::cout << gring::scan_to_json(result, config).dump(2) << "\n";
      } else {
        std::cout << gring::scan_to_markdown(result, config);
      }
      std::cerr << "records: " << result.summary.total
                << ", mismatches: " << result.summary.mismatches
                << ", counterexamples: " << result.summary.counterexamples
                << ", hydra failures: " << result.summary.hydra_failures << "\n";
      for (const auto& n : result.notes) std::cerr << "note: " << n << "\n";
      return result.ok ? 0 : 1;
    }

    if (vp->parsed()) {
      gring::PowerPolyProvider provider;
      if (inject_fault) {
        provider = [](int n, int m, int step) {
          gring::Poly p = gring::power_transfer_poly(n, m, step);
          if (n == 4 && m == 2 && step == 1) {
            p = p + gring::Poly::one();  // deliberate corruption
          }
          return p;
        };
      }
      gring::PolyVerifySummary summary =
          gring::run_poly_verify(power_n_max, nonvan_n_max, jls_max, provider);
      std::cout << "power identity sweep (n <= " << power_n_max
                << "): " << summary.power_identity.checked << " checks, "
                << summary.power_identity.failures.size() << " failures\n";
      std::cout << "nonvanishing sweep (n <= " << nonvan_n_max << ", j,l,s <= " << jls_max
                << "): " << summary.nonvanishing.checked << " checks, "
                << summary.nonvanishing.failures.size() << " failures\n";
      for (const auto& f : summary.power_identity.failures) {
        std::cout << "  FAIL n=" << f.n << " k=" << f.k << " m=" << f.m << ": " << f.what << "\n";
      }
      for (const auto& f : summary.nonvanishing.failures) {
        std::cout << "  FAIL n=" << f.n << " k=" << f.k << " j=" << f.j << " l=" << f.l
                  << " s=" << f.s << ": " << f.what << "\n";
      }
      return summary.ok() ? 0 : 1;
    }

    if (explain->parsed()) {
      gring::RunConfig ex_config;
      ex_config.group_spec = ex_group;
      ex_config.ring = parse_ring(ex_ring);
      std::cout << gring::explain_record(ex_config, ex_a, ex_b, ex_k);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
