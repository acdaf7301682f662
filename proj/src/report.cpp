#include "gring/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gring/parallel.hpp"

namespace gring {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string oracle_verdict_name(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Finite:
      return "finite";
    case OracleVerdict::CertifiedInfinite:
      return "certified_infinite";
    case OracleVerdict::ExceedsBound:
      return "exceeds_bound";
  }
  return "?";
}

bool group_is_abelian(const GroupTable& G) {
  for (int g = 0; g < G.order(); ++g) {
    for (int h = g + 1; h < G.order(); ++h) {
      if (G.mul(g, h) != G.mul(h, g)) return false;
    }
  }
  return true;
}

struct RecordTask {
  const GroupTable* table = nullptr;
  std::string group_name;
  Witness witness;
  int k = 0;
};

ClassificationRecord run_task(const RecordTask& task, const RunConfig& config) {
  ClassificationRecord rec;
  rec.group = task.group_name;
  rec.a_index = task.witness.a;
  rec.b_index = task.witness.b;
  rec.a_label = task.table->label(task.witness.a);
  rec.b_label = task.table->label(task.witness.b);
  rec.order_a = task.witness.order_a;
  rec.M = task.witness.M;
  rec.k = task.k;
  rec.k_valid = task.witness.k_valid(task.k);

  auto t0 = std::chrono::steady_clock::now();
  UnitFamily fam = make_family(task.table, config.ring, task.witness, task.k);
  rec.timings.family_ms = ms_since(t0);

  OrderClassification cls = classify_order(rec.order_a, rec.k, rec.M);
  rec.predicted = {cls.finite, cls.order, cls.s_k, cls.t_k.str(), order_case_name(cls.tag)};

  t0 = std::chrono::steady_clock::now();
  OracleResult oracle = order_oracle(fam);
  rec.timings.oracle_ms = ms_since(t0);
  rec.oracle = {oracle_verdict_name(oracle.verdict), oracle.order};
  rec.match = (cls.finite && oracle.verdict == OracleVerdict::Finite && oracle.order == cls.order) ||
              (!cls.finite && oracle.verdict == OracleVerdict::CertifiedInfinite);

  if (rec.k_valid) {
    t0 = std::chrono::steady_clock::now();
    HydraReport hydra = certify_hydra(fam);
    rec.timings.hydra_ms = ms_since(t0);
    rec.hydra = {true, hydra.comm_nontrivial, hydra.comm_formula_match, hydra.second_comm_trivial};

    if (config.run_freeness) {
      t0 = std::chrono::steady_clock::now();
      FreenessReport fr = certify_freeness(fam, config.max_syllables, config.exponent_bound,
                                           config.freeness_word_budget, 1);
      rec.timings.freeness_ms = ms_since(t0);
      rec.freeness = {true,
                      fr.claimed,
                      fr.max_syllables,
                      fr.exponent_bound,
                      fr.words_checked,
                      fr.truncated,
                      fr.counterexample ? std::optional<std::string>(fr.counterexample->str())
                                        : std::nullopt,
                      fr.hypotheses_ok};
    }
  }
  return rec;
}

}  // namespace

ScanResult run_scan(const RunConfig& config) {
  std::vector<NamedGroup> groups;
  if (config.group_spec == "catalog") {
    for (const auto& name : catalog_names()) groups.push_back(parse_group_spec(name, config.limits));
  } else {
    groups.push_back(parse_group_spec(config.group_spec, config.limits));
  }

  ScanResult result;
  std::vector<RecordTask> tasks;
  // Keep tables alive for the whole scan; records reference them during the run.
  std::vector<std::unique_ptr<GroupTable>> tables;
  for (auto& g : groups) {
    tables.push_back(std::make_unique<GroupTable>(std::move(g.table)));
    const GroupTable* table = tables.back().get();
    WitnessScanOptions opts{config.dedup};
    std::vector<Witness> witnesses = find_witnesses(*table, opts);
    if (witnesses.empty()) {
      result.notes.push_back(
          g.name + ": no witnesses (" +
          (group_is_abelian(*table) ? "abelian: every subgroup is normal"
                                    : "Dedekind: no non-normal cyclic subgroup") +
          ")");
      continue;
    }
    for (const auto& w : witnesses) {
      for (int k = 1; k <= w.order_a; ++k) {
        if (config.k_list &&
            std::find(config.k_list->begin(), config.k_list->end(), k) == config.k_list->end()) {
          continue;
        }
        tasks.push_back({table, g.name, w, k});
      }
    }
  }

  result.records.resize(tasks.size());
  std::atomic<long long> done{0};
  const long long total = static_cast<long long>(tasks.size());
  parallel_for(tasks.size(), config.jobs, [&](size_t i) {
    result.records[i] = run_task(tasks[i], config);
    long long d = done.fetch_add(1) + 1;
    if (config.progress && (d % 256 == 0 || d == total)) config.progress(d, total);
  });

  result.summary.total = static_cast<long long>(result.records.size());
  for (const auto& r : result.records) {
    if (!r.match) ++result.summary.mismatches;
    if (r.freeness.ran && r.freeness.counterexample) ++result.summary.counterexamples;
    if (!r.hydra.ok()) ++result.summary.hydra_failures;
  }
  result.ok = result.summary.mismatches == 0 && result.summary.counterexamples == 0 &&
              result.summary.hydra_failures == 0;
  return result;
}

namespace {

nlohmann::json record_to_json(const ClassificationRecord& r) {
  nlohmann::json j{
      {"group", r.group},
      {"a", r.a_label},
      {"b", r.b_label},
      {"a_index", r.a_index},
      {"b_index", r.b_index},
      {"order_a", r.order_a},
      {"M", r.M},
      {"k", r.k},
      {"k_valid", r.k_valid},
      {"predicted",
       {{"finite", r.predicted.finite},
        {"order", r.predicted.order},
        {"s_k", r.predicted.s_k},
        {"t_k", r.predicted.t_k},
        {"case", r.predicted.case_tag}}},
      {"oracle", {{"verdict", r.oracle.verdict}, {"order", r.oracle.order}}},
      {"match", r.match},
      {"hydra",
       {{"ran", r.hydra.ran},
        {"comm_nontrivial", r.hydra.comm_nontrivial},
        {"comm_formula_match", r.hydra.comm_formula_match},
        {"second_comm_trivial", r.hydra.second_comm_trivial}}},
      {"timings_ms",
       {{"family", r.timings.family_ms},
        {"oracle", r.timings.oracle_ms},
        {"freeness", r.timings.freeness_ms},
        {"hydra", r.timings.hydra_ms}}},
  };
  nlohmann::json f{{"ran", r.freeness.ran}};
  if (r.freeness.ran) {
    f["claimed"] = r.freeness.claimed;
    f["max_syllables"] = r.freeness.max_syllables;
    f["exponent_bound"] = r.freeness.exponent_bound;
    f["words_checked"] = r.freeness.words_checked;
    f["truncated"] = r.freeness.truncated;
    f["hypotheses_ok"] = r.freeness.hypotheses_ok;
    if (r.freeness.counterexample) {
      f["counterexample"] = *r.freeness.counterexample;
    } else {
      f["counterexample"] = nullptr;
    }
  }
  j["freeness"] = std::move(f);
  return j;
}

ClassificationRecord record_from_json(const nlohmann::json& j) {
  ClassificationRecord r;
  r.group = j.at("group").get<std::string>();
  r.a_label = j.at("a").get<std::string>();
  r.b_label = j.at("b").get<std::string>();
  r.a_index = j.at("a_index").get<int>();
  r.b_index = j.at("b_index").get<int>();
  r.order_a = j.at("order_a").get<int>();
  r.M = j.at("M").get<int>();
  r.k = j.at("k").get<int>();
  r.k_valid = j.at("k_valid").get<bool>();
  const auto& p = j.at("predicted");
  r.predicted = {p.at("finite").get<bool>(), p.at("order").get<long long>(),
                 p.at("s_k").get<long long>(), p.at("t_k").get<std::string>(),
                 p.at("case").get<std::string>()};
  const auto& o = j.at("oracle");
  r.oracle = {o.at("verdict").get<std::string>(), o.at("order").get<long long>()};
  r.match = j.at("match").get<bool>();
  const auto& h = j.at("hydra");
  r.hydra = {h.at("ran").get<bool>(), h.at("comm_nontrivial").get<bool>(),
             h.at("comm_formula_match").get<bool>(), h.at("second_comm_trivial").get<bool>()};
  const auto& f = j.at("freeness");
  r.freeness.ran = f.at("ran").get<bool>();
  if (r.freeness.ran) {
    r.freeness.claimed = f.at("claimed").get<std::string>();
    r.freeness.max_syllables = f.at("max_syllables").get<int>();
    r.freeness.exponent_bound = f.at("exponent_bound").get<int>();
    r.freeness.words_checked = f.at("words_checked").get<long long>();
    r.freeness.truncated = f.at("truncated").get<bool>();
    r.freeness.hypotheses_ok = f.at("hypotheses_ok").get<bool>();
    if (!f.at("counterexample").is_null()) {
      r.freeness.counterexample = f.at("counterexample").get<std::string>();
    }
  }
  const auto& t = j.at("timings_ms");
  r.timings = {t.at("family").get<double>(), t.at("oracle").get<double>(),
               t.at("freeness").get<double>(), t.at("hydra").get<double>()};
  return r;
}

nlohmann::json config_to_json(const RunConfig& c) {
  return {
      {"group", c.group_spec},
      {"ring", c.ring.describe()},
      {"k", c.k_list ? nlohmann::json(*c.k_list) : nlohmann::json("all")},
      {"max_syllables", c.max_syllables},
      {"exponent_bound", c.exponent_bound},
      {"freeness_word_budget", c.freeness_word_budget},
      {"run_freeness", c.run_freeness},
      {"dedup", c.dedup},
      {"jobs", c.jobs},
  };
}

}  // namespace

nlohmann::json scan_to_json(const ScanResult& result, const RunConfig& config) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : result.records) records.push_back(record_to_json(r));
  return {
      {"config", config_to_json(config)},
      {"records", std::move(records)},
      {"notes", result.notes},
      {"summary",
       {{"total", result.summary.total},
        {"mismatches", result.summary.mismatches},
        {"counterexamples", result.summary.counterexamples},
        {"hydra_failures", result.summary.hydra_failures}}},
  };
}

std::vector<ClassificationRecord> records_from_json(const nlohmann::json& j) {
  std::vector<ClassificationRecord> out;
  for (const auto& r : j.at("records")) out.push_back(record_from_json(r));
  return out;
}

std::string scan_to_markdown(const ScanResult& result, const RunConfig& config) {
  std::ostringstream out;
  out << "| group | a | b | order_a | M | k | predicted | oracle | freeness L | result |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : result.records) {
    std::string predicted = r.predicted.finite ? "finite(" + std::to_string(r.predicted.order) + ")"
                                               : "infinite";
    std::string oracle = r.oracle.verdict == "finite"
                             ? "finite(" + std::to_string(r.oracle.order) + ")"
                             : r.oracle.verdict;
    std::string freeness =
        r.freeness.ran ? std::to_string(r.freeness.max_syllables) +
                             (r.freeness.truncated ? " (truncated)" : "")
                       : "-";
    out << "| " << r.group << " | `" << r.a_label << "` | `" << r.b_label << "` | " << r.order_a
        << " | " << r.M << " | " << r.k << " | " << predicted << " | " << oracle << " | "
        << freeness << " | " << (r.ok() ? "ok" : "FAIL") << " |\n";
  }
  out << "\nring: " << config.ring.describe() << "; records: " << result.summary.total
      << "; mismatches: " << result.summary.mismatches
      << "; counterexamples: " << result.summary.counterexamples
      << "; hydra failures: " << result.summary.hydra_failures << "\n";
  for (const auto& n : result.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string explain_record(const RunConfig& config, const std::string& a_cycles,
                           const std::string& b_cycles, int k) {
  NamedGroup g = parse_group_spec(config.group_spec, config.limits);
  int a = g.table.element_index(a_cycles);
  int b = g.table.element_index(b_cycles);
  if (a < 0 || b < 0) throw std::invalid_argument("explain: element not found in group");

  std::vector<Witness> witnesses = find_witnesses(g.table);
  auto it = std::find_if(witnesses.begin(), witnesses.end(),
                         [&](const Witness& w) { return w.a == a && w.b == b; });
  if (it == witnesses.end()) {
    throw std::invalid_argument("explain: (a, b) is not a witness pair in " + g.name);
  }
  const Witness& w = *it;
  if (k < 1 || k > w.order_a) throw std::invalid_argument("explain: k out of range");

  OrderClassification cls = classify_order(w.order_a, k, w.M);
  long long g1 = std::gcd(static_cast<long long>(k), static_cast<long long>(w.order_a));
  long long g2 = std::gcd(static_cast<long long>(k), static_cast<long long>(w.M));

  std::ostringstream out;
  out << "group " << g.name << ", a = " << g.table.label(a) << " (order " << w.order_a
      << "), b = " << g.table.label(b) << ", M = " << w.M << ", k = " << k << "\n";
  out << "u = a^" << k << " + (a-1)b*hat(a), w = 1 + (a-1)b*hat(a), z = w^-1 u w\n";
  switch (cls.tag) {
    case OrderCase::CoprimeFull:
      out << "gcd(k, |a|) = 1, so the partial sum of a^(jk) over a full period collapses the "
             "shift term and the order of u equals |a| = "
          << cls.order << ".\n";
      break;
    case OrderCase::ReducedFinite:
      out << "gcd(k, |a|) = " << g1 << " != 1, gcd(k, M) = 1 and M != |a|: the exponents jk "
          << "sweep all residues mod M, so u^s = 1 at s = |a|/gcd(k, |a|) = " << cls.order
          << " (multiplicity t = " << cls.t_k.str() << ").\n";
      break;
    case OrderCase::Infinite:
      out << "gcd(k, |a|) = " << g1 << " != 1 and (gcd(k, M) = " << g2 << " != 1 or M = |a|): no "
          << "power of u returns to 1; the identity coefficient of u^s_k stays 1, which "
          << "certifies infinite order for integer coefficients.\n";
      break;
  }

  UnitFamily fam = make_family(&g.table, config.ring, w, k);
  OracleResult oracle = order_oracle(fam);
  out << "oracle: ";
  if (oracle.verdict == OracleVerdict::Finite) {
    out << "u^" << oracle.order << " = 1 (least power)";
  } else if (oracle.verdict == OracleVerdict::CertifiedInfinite) {
    out << "no power <= exponent(G) = " << g.table.exponent()
        << " equals 1; certified infinite over the integers";
  } else {
    out << "no power <= exponent(G) = " << g.table.exponent()
        << " equals 1; bound exceeded (prime-field coefficients carry no torsion certificate)";
  }
  out << "\n";
  if (w.k_valid(k)) {
    HydraReport hydra = certify_hydra(fam);
    out << "iterated commutator: (u,w) != 1 " << (hydra.comm_nontrivial ? "ok" : "FAIL")
        << ", explicit expansion match " << (hydra.comm_formula_match ? "ok" : "FAIL")
        << ", ((u,w),w) = 1 " << (hydra.second_comm_trivial ? "ok" : "FAIL") << "\n";
  } else {
    out << "b normalizes <a^k>: the free-product and commutator certificates do not apply.\n";
  }
  return out.str();
}

PolyVerifySummary run_poly_verify(int power_n_max, int nonvanishing_n_max, int jls_max,
                                  const PowerPolyProvider& corrupt) {
  PolyVerifySummary out;
  out.power_identity = power_identity_sweep(power_n_max, corrupt);
  out.nonvanishing = nonvanishing_sweep(nonvanishing_n_max, jls_max, jls_max, jls_max);
  return out;
}

}  // namespace gring
