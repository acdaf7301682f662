// Acceptance suite: end-to-end verification gates for the whole engine.
// Each gate prints one [PASS]/[FAIL] line; the exit status is the number of
// failed gates.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "gring/free_verify.hpp"
#include "gring/parallel.hpp"
#include "gring/report.hpp"

using namespace gring;

namespace {

int g_failures = 0;

void gate(const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %-38s %7.2fs  %s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

int jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 4 : static_cast<int>(hw);
}

struct CatalogEntry {
  std::string name;
  GroupTable table;
  std::vector<Witness> witnesses;
};

std::vector<CatalogEntry>& catalog() {
  static std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& name : catalog_names()) {
      NamedGroup g = parse_group_spec(name);
      CatalogEntry e{g.name, std::move(g.table), {}};
      e.witnesses = find_witnesses(e.table);
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

Witness witness_for(const GroupTable& g, const std::string& a, const std::string& b) {
  for (const Witness& w : find_witnesses(g)) {
    if (w.a == g.element_index(a) && w.b == g.element_index(b)) return w;
  }
  throw std::runtime_error("expected witness not found");
}

// Gate 1: classifier vs oracle, every witness, every k, whole catalog.
bool gate_classifier_oracle(std::string& detail) {
  CoeffRing zz = CoeffRing::integers();
  long long total = 0, mismatches = 0;
  for (const auto& entry : catalog()) {
    struct Task {
      const Witness* w;
      int k;
    };
    std::vector<Task> tasks;
    for (const auto& w : entry.witnesses) {
      for (int k = 1; k <= w.order_a; ++k) tasks.push_back({&w, k});
    }
    std::vector<char> ok(tasks.size(), 0);
    parallel_for(tasks.size(), jobs(), [&](size_t i) {
      UnitFamily fam = make_family(&entry.table, zz, *tasks[i].w, tasks[i].k);
      OrderClassification cls = classify_order(tasks[i].w->order_a, tasks[i].k, tasks[i].w->M);
      OracleResult oracle = order_oracle(fam);
      bool match =
          (cls.finite && oracle.verdict == OracleVerdict::Finite && oracle.order == cls.order) ||
          (!cls.finite && oracle.verdict == OracleVerdict::CertifiedInfinite);
      ok[i] = match ? 1 : 0;
    });
    total += static_cast<long long>(tasks.size());
    for (char c : ok) {
      if (!c) ++mismatches;
    }
  }
  std::ostringstream out;
  out << total << " records, " << mismatches << " mismatches";
  detail = out.str();
  return mismatches == 0 && total > 0;
}

// Gate 2: each classification outcome appears in the catalog run, including
// the three pinned instances.
bool gate_case_coverage(std::string& detail) {
  CoeffRing zz = CoeffRing::integers();
  long long coprime = 0, reduced = 0, infinite = 0;
  for (const auto& entry : catalog()) {
    for (const auto& w : entry.witnesses) {
      for (int k = 1; k <= w.order_a; ++k) {
        switch (classify_order(w.order_a, k, w.M).tag) {
          case OrderCase::CoprimeFull:
            ++coprime;
            break;
          case OrderCase::ReducedFinite:
            ++reduced;
            break;
          case OrderCase::Infinite:
            ++infinite;
            break;
        }
      }
    }
  }

  // Pinned instances, verified by the oracle.
  GroupTable s3 = symmetric_group(3);
  UnitFamily f1 = make_family(&s3, zz, witness_for(s3, "(1 2)", "(1 2 3)"), 1);
  bool pin1 = order_oracle(f1).verdict == OracleVerdict::Finite && order_oracle(f1).order == 2;

  GroupTable p = direct_product(symmetric_group(3), symmetric_group(3));
  UnitFamily f2 = make_family(&p, zz, witness_for(p, "(1 2 3)(4 5)", "(1 2)(4 6)"), 3);
  OracleResult r2 = order_oracle(f2);
  bool pin2 = r2.verdict == OracleVerdict::Finite && r2.order == 2 &&
              classify_order(6, 3, 2).order == 2;

  GroupTable s4 = symmetric_group(4);
  Witness w4 = witness_for(s4, "(1 2 3 4)", "(1 2)");
  UnitFamily f3 = make_family(&s4, zz, w4, 2);
  OracleResult r3 = order_oracle(f3);
  OrderClassification c3 = classify_order(4, 2, w4.M);
  bool pin3 = r3.verdict == OracleVerdict::CertifiedInfinite && !c3.finite &&
              power_closed_form(f3, c3.s_k).trace() == 1;

  std::ostringstream out;
  out << "coprime=" << coprime << " reduced=" << reduced << " infinite=" << infinite
      << "; pinned instances " << (pin1 && pin2 && pin3 ? "verified" : "FAILED");
  detail = out.str();
  return coprime > 0 && reduced > 0 && infinite > 0 && pin1 && pin2 && pin3;
}

// Gate 3: bounded freeness at the pinned depths. Zero counterexamples
// required on every instance.
bool gate_bounded_freeness(std::string& detail) {
  CoeffRing zz = CoeffRing::integers();
  struct Instance {
    std::string group, a, b;
    int k, L, E;
  };
  const Instance instances[] = {
      {"S3", "(1 2)", "(1 2 3)", 1, 10, 3},
      {"A4", "(1 2 3)", "(1 2)(3 4)", 1, 8, 3},
      {"A4", "(1 2 3)", "(1 2)(3 4)", 2, 8, 3},
      {"S4", "(1 2 3 4)", "(1 2)", 2, 6, 3},
  };
  long long words = 0;
  std::ostringstream failures;
  bool ok = true;
  for (const auto& inst : instances) {
    NamedGroup g = parse_group_spec(inst.group);
    UnitFamily fam = make_family(&g.table, zz, witness_for(g.table, inst.a, inst.b), inst.k);
    FreenessReport r = certify_freeness(fam, inst.L, inst.E, 0, jobs());
    words += r.words_checked;
    if (!r.certified() || r.truncated) {
      ok = false;
      failures << " [" << inst.group << " k=" << inst.k << ": \""
               << (r.counterexample ? r.counterexample->str() : "<none>")
               << "\" = 1, hypotheses " << (r.hypotheses_ok ? "hold" : "FAIL") << "]";
    }
  }
  std::ostringstream out;
  out << words << " words evaluated";
  if (ok) {
    out << ", no word reached 1";
  } else {
    out << "; counterexamples:" << failures.str();
  }
  detail = out.str();
  return ok;
}

// Gate 4: iterated-commutator relations on every valid catalog record, plus
// one prime-field run.
bool gate_hydra(std::string& detail) {
  CoeffRing zz = CoeffRing::integers();
  long long checked = 0, failures = 0;
  for (const auto& entry : catalog()) {
    struct Task {
      const Witness* w;
      int k;
    };
    std::vector<Task> tasks;
    for (const auto& w : entry.witnesses) {
      for (int k : w.valid_k) tasks.push_back({&w, k});
    }
    std::vector<char> ok(tasks.size(), 0);
    parallel_for(tasks.size(), jobs(), [&](size_t i) {
      UnitFamily fam = make_family(&entry.table, zz, *tasks[i].w, tasks[i].k);
      ok[i] = certify_hydra(fam).all() ? 1 : 0;
    });
    checked += static_cast<long long>(tasks.size());
    for (char c : ok) {
      if (!c) ++failures;
    }
  }

  GroupTable s3 = symmetric_group(3);
  UnitFamily gf = make_family(&s3, CoeffRing::prime_field(5), witness_for(s3, "(1 2)", "(1 2 3)"), 1);
  bool gf_ok = certify_hydra(gf).all();

  std::ostringstream out;
  out << checked << " records, " << failures << " failures, gf(5) " << (gf_ok ? "ok" : "FAIL");
  detail = out.str();
  return failures == 0 && gf_ok && checked > 0;
}

// Gate 5: polynomial identity sweeps at the pinned bounds.
bool gate_polynomials(std::string& detail) {
  SweepSummary power = power_identity_sweep(24);
  SweepSummary nonvan = nonvanishing_sweep(16, 3, 3, 3);
  std::ostringstream out;
  out << "power identity: " << power.checked << " checks, " << power.failures.size()
      << " failures; nonvanishing: " << nonvan.checked << " checks, " << nonvan.failures.size()
      << " failures";
  detail = out.str();
  return power.ok() && nonvan.ok();
}

// Gate 6: closed-form powers equal repeated multiplication on every catalog
// witness, for the unit itself and for all four syllable shifts.
bool gate_closed_forms(std::string& detail) {
  CoeffRing zz = CoeffRing::integers();
  long long checks = 0;
  bool all_ok = true;
  std::string first_failure;
  for (const auto& entry : catalog()) {
    struct Task {
      const Witness* w;
      int k;
    };
    std::vector<Task> tasks;
    for (const auto& w : entry.witnesses) {
      for (int k = 1; k <= w.order_a; ++k) tasks.push_back({&w, k});
    }
    std::vector<long long> counts(tasks.size(), 0);
    std::vector<char> ok(tasks.size(), 1);
    long long bound = 2 * entry.table.exponent();
    parallel_for(tasks.size(), jobs(), [&](size_t i) {
      UnitFamily fam = make_family(&entry.table, zz, *tasks[i].w, tasks[i].k);
      RingElement p = RingElement::one(&entry.table, zz);
      for (long long e = 1; e <= bound; ++e) {
        p = p * fam.u;
        ++counts[i];
        if (!(power_closed_form(fam, e) == p)) {
          ok[i] = 0;
          return;
        }
      }
      if (!tasks[i].w->k_valid(tasks[i].k)) return;
      Syllables s = make_syllables(fam);
      RingElement one = RingElement::one(&entry.table, zz);
      int n = tasks[i].w->order_a;
      const struct {
        const RingElement* syl;
        int step;
      } cases[4] = {{&s.x_plus, tasks[i].k},
                    {&s.x_minus, -tasks[i].k},
                    {&s.y_plus, tasks[i].k},
                    {&s.y_minus, -tasks[i].k}};
      for (const auto& c : cases) {
        RingElement base = one + *c.syl;
        RingElement q = base;
        for (int m = 2; m <= 2 * n; ++m) {
          q = q * base;
          ++counts[i];
          RingElement f = to_group_ring(power_transfer_poly(n, m, c.step), &entry.table, zz,
                                        tasks[i].w->a);
          if (!(q == one + f * *c.syl)) {
            ok[i] = 0;
            return;
          }
        }
      }
    });
    for (size_t i = 0; i < tasks.size(); ++i) {
      checks += counts[i];
      if (!ok[i] && all_ok) {
        all_ok = false;
        first_failure = entry.name + " k=" + std::to_string(tasks[i].k);
      }
    }
  }
  detail = std::to_string(checks) + " power comparisons" +
           (all_ok ? "" : ("; first failure at " + first_failure));
  return all_ok && checks > 0;
}

// Gate 7: annihilator equivalence, 10^3 randomized elements per cyclic
// subgroup for every catalog group of order <= 24.
bool gate_annihilator(std::string& detail) {
  CoeffRing zz = CoeffRing::integers();
  long long samples = 0, discrepancies = 0;
  for (const auto& entry : catalog()) {
    if (entry.table.order() > 24) continue;
    const GroupTable& G = entry.table;
    // One representative generator per distinct cyclic subgroup.
    std::vector<int> reps;
    std::vector<Subset> seen;
    for (int a = 0; a < G.order(); ++a) {
      Subset s = cyclic_subgroup(G, a);
      if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
        seen.push_back(s);
        reps.push_back(a);
      }
    }
    std::vector<long long> bad(reps.size(), 0);
    parallel_for(reps.size(), jobs(), [&](size_t i) {
      int a = reps[i];
      std::mt19937_64 rng(0xACCE97ull * (i + 1) + static_cast<unsigned long long>(G.order()));
      RingElement ahat = hat_element(&G, zz, a);
      std::uniform_int_distribution<int> elem(0, G.order() - 1);
      std::uniform_int_distribution<int> coeff(-5, 5);
      for (int t = 0; t < 1000; ++t) {
        RingElement x(&G, zz);
        int support = 1 + static_cast<int>(rng() % 6);
        for (int s = 0; s < support; ++s) {
          int e = elem(rng);
          x.set_coeff(e, x.coeff(e) + coeff(rng));
        }
        if (t % 3 == 1) x = x * ahat;  // exercise the nonzero-annihilator side
        if (t % 3 == 2) {
          x = x * ahat;
          int e = elem(rng);
          x.set_coeff(e, x.coeff(e) + 1);
        }
        AnnihilatorCheck c = check_annihilator(G, a, x);
        if (c.annihilates != c.hat_multiple) ++bad[i];
      }
    });
    samples += static_cast<long long>(reps.size()) * 1000;
    for (long long b : bad) discrepancies += b;
  }
  std::ostringstream out;
  out << samples << " samples, " << discrepancies << " discrepancies";
  detail = out.str();
  return discrepancies == 0 && samples > 0;
}

// Gate 8: negative controls via the scan pipeline.
bool gate_negative_controls(std::string& detail) {
  for (const std::string& name : {std::string("Q8"), std::string("C12")}) {
    RunConfig c;
    c.group_spec = name;
    c.jobs = jobs();
    ScanResult r = run_scan(c);
    if (!r.ok || !r.records.empty() || r.notes.size() != 1) {
      detail = name + ": unexpected scan outcome";
      return false;
    }
    bool labeled = r.notes[0].find(name == "Q8" ? "Dedekind" : "abelian") != std::string::npos;
    if (!labeled) {
      detail = name + ": note missing its classification (" + r.notes[0] + ")";
      return false;
    }
  }
  detail = "Q8 and C12: zero witnesses, explicit notes, exit status 0";
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance gates (catalog: C12 Q8 S3 D4 D5 D6 A4 S4 S3xS3)\n");
  gate("1 classifier/oracle agreement", gate_classifier_oracle);
  gate("2 case coverage", gate_case_coverage);
  gate("3 bounded freeness", gate_bounded_freeness);
  gate("4 iterated commutator relations", gate_hydra);
  gate("5 polynomial identities", gate_polynomials);
  gate("6 closed forms vs iteration", gate_closed_forms);
  gate("7 annihilator equivalence", gate_annihilator);
  gate("8 negative controls", gate_negative_controls);
  if (g_failures == 0) {
    std::printf("all acceptance gates passed\n");
  } else {
    std::printf("%d acceptance gate(s) failed\n", g_failures);
  }
  return g_failures;
}
