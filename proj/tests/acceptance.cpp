// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// nonzero if any criterion fails.

#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "phinil/build.hpp"
#include "phinil/invariants.hpp"
#include "phinil/lattice.hpp"
#include "phinil/nilpotency.hpp"
#include "phinil/report.hpp"
#include "phinil/schmidt.hpp"
#include "phinil/sections.hpp"
#include "phinil/spec_text.hpp"
#include "phinil/verifier.hpp"
#include "support/oracles.hpp"

using namespace phinil;

namespace {

// Single-threaded wall-time budget for the default catalog, in seconds.
constexpr double kSuiteBudgetSeconds = 300.0;
// Largest order checked against the all-subsets oracle.
constexpr std::size_t kOracleMaxOrder = 24;
// Thread count for the second determinism run.
constexpr unsigned kParallelJobs = 4;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] %d %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

GroupPtr build(const std::string& text) { return build_group(parse_spec(text)); }

std::vector<GroupSpec> default_specs() {
  std::vector<GroupSpec> out;
  for (const auto& text : default_catalog()) out.push_back(parse_spec(text));
  return out;
}

// 1. Criterion over the default catalog, single-threaded.
void criterion1(const SuiteReport& suite) {
  std::size_t mismatches = 0;
  for (const auto& e : suite.entries) {
    if (!e.report || e.report->nilpotent != e.report->all_sections_phi_nonzero) ++mismatches;
  }
  std::ostringstream d;
  d << suite.entries.size() << " groups, " << mismatches << " mismatches, "
    << suite.disagreements << " disagreements, " << suite.errors << " errors, "
    << suite.wall_time_s << " s";
  report(1, mismatches == 0 && suite.failures == 0 && suite.disagreements == 0 &&
                suite.errors == 0 && suite.wall_time_s < kSuiteBudgetSeconds,
         "nilpotent iff every section has phi != 0 on the default catalog", d.str());
}

// 2. phi on the symmetric, alternating and dihedral families, D8 as control.
void criterion2() {
  std::vector<std::string> zero = {"S(3)", "S(4)", "S(5)", "S(6)", "A(4)", "A(5)",
                                   "A(6)", "D(6)", "D(10)", "D(14)", "D(18)"};
  bool ok = true;
  std::ostringstream d;
  for (const auto& text : zero) {
    const auto v = phi(*build(text));
    ok = ok && v == 0;
    d << text << "=" << v << " ";
  }
  const auto control = phi(*build("D(8)"));
  ok = ok && control > 0;
  d << "D(8)=" << control;
  report(2, ok, "phi family values", d.str());
}

// 3. Z6 x S3 and G375 separate the three conditions.
void criterion3() {
  const auto z = all_subgroups(build("prod(C(6), S(3))"));
  const auto rz = verify_theorem(z);
  const auto g = all_subgroups(build("G375"));
  const auto rg = verify_theorem(g);
  const auto phi_z = phi(*z.group());
  const auto phi_oracle = oracle::phi_z6_times_s3();
  const bool ok = rz.condition3 && !rz.all_sections_phi_nonzero && rz.witness.has_value() &&
                  phi_z == phi_oracle && phi_oracle == 20 && rg.condition2 && !rg.nilpotent &&
                  rg.witness.has_value();
  std::ostringstream d;
  d << "Z6xS3: condition3=" << rz.condition3 << " all_nonzero=" << rz.all_sections_phi_nonzero
    << " phi=" << phi_z << " oracle=" << phi_oracle << "; G375: condition2=" << rg.condition2
    << " nilpotent=" << rg.nilpotent
    << " witness=" << (rg.witness ? rg.witness->id() : std::string("none"));
  report(3, ok, "counterexample hierarchy", d.str());
}

// 4. Subgroup inventory of G375.
void criterion4() {
  const auto lat = all_subgroups(build("G375"));
  const auto& g = lat.group();
  const auto syl5 = sylow_subgroups(lat, 5);
  bool ok = g->order() == 375 && syl5.size() == 1 && syl5[0].order() == 125;
  std::size_t order75 = 0, in_p = 0, order3 = 0, cyclic15 = 0, other = 0;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& h = lat[i];
    if (h.order() == 75) ++order75;
    if (i == lat.whole_index()) continue;
    if (!syl5.empty() && h.is_subset_of(syl5[0])) {
      ++in_p;
    } else if (h.order() == 3) {
      ++order3;
    } else if (h.order() == 15 && phi(*materialize(h).group) > 0) {
      ++cyclic15;
    } else {
      ++other;
    }
  }
  ok = ok && order75 == 0 && other == 0;
  std::ostringstream d;
  d << lat.size() << " subgroups: 1 whole, " << in_p << " in P, " << order3 << " of order 3, "
    << cyclic15 << " cyclic of order 15, " << other << " other; order-75 subgroups " << order75;
  report(4, ok, "G375 structure", d.str());
}

// 5. Certificates for four Schmidt groups.
void criterion5() {
  bool ok = true;
  std::ostringstream d;
  for (const char* text : {"S(3)", "A(4)", "semi(C(7), C(3), action=pow2)",
                           "semi(prod(C(5), C(5)), C(3), action=rot3)"}) {
    try {
      const auto c = schmidt_certificate(all_subgroups(build(text)));
      const auto e = exponent(*c.quotient_S);
      const auto f = phi(*c.quotient_S);
      bool lattice_ok = false;
      for (const auto& [entry, pass] : c.checklist) {
        if (entry == "m") lattice_ok = pass;
      }
      const bool this_ok = c.all_passed() && c.checklist.size() == 13 && e == c.p * c.q &&
                           f == 0 && lattice_ok;
      ok = ok && this_ok;
      d << text << ":" << (this_ok ? "ok" : "bad") << " exp=" << e << " ";
    } catch (const std::exception& ex) {
      ok = false;
      d << text << ": " << ex.what() << " ";
    }
  }
  report(5, ok, "Schmidt certificates (a)-(m)", d.str());
}

// 6. Lattice vs all-subsets oracle; nilpotency tests agree everywhere.
void criterion6(const SuiteReport& suite) {
  std::size_t compared = 0, lattice_mismatch = 0;
  for (const auto& text : default_catalog()) {
    auto g = build(text);
    if (g->order() > kOracleMaxOrder) continue;
    ++compared;
    const auto lat = all_subgroups(g);
    std::set<std::vector<Element>> ours;
    for (const auto& s : lat.subgroups()) ours.insert(s.elements());
    if (ours.size() != lat.size() || ours != oracle::all_subgroups_by_subsets(*g)) ++lattice_mismatch;
  }
  std::size_t sections = 0, crosschecks = 0, group_disagreements = 0;
  for (const auto& e : suite.entries) {
    if (!e.report) continue;
    sections += e.report->sections_checked;
    crosschecks += e.report->quotient_crosschecks;
    auto g = build(e.spec);
    if (is_nilpotent_sylow(*g) != is_nilpotent_lcs(*g)) ++group_disagreements;
  }
  std::ostringstream d;
  d << compared << " lattices compared, " << lattice_mismatch << " mismatches; " << crosschecks
    << "/" << sections << " section quotients cross-checked, " << group_disagreements + suite.disagreements
    << " disagreements";
  report(6, lattice_mismatch == 0 && compared > 0 && sections == crosschecks && sections > 0 &&
                group_disagreements == 0 && suite.disagreements == 0,
         "oracle equivalence", d.str());
}

// 7. Byte-identical JSON across job counts.
void criterion7(const SuiteReport& serial) {
  SuiteOptions opts;
  opts.jobs = kParallelJobs;
  const auto parallel = run_suite(default_specs(), opts);
  const auto a = dump_sorted(strip_timing(to_json(serial)));
  const auto b = dump_sorted(strip_timing(to_json(parallel)));
  std::ostringstream d;
  d << "jobs=1 vs jobs=" << kParallelJobs << ", " << a.size() << " bytes";
  report(7, a == b, "deterministic suite output", d.str());
}

}  // namespace

int main() {
  try {
    SuiteOptions opts;
    opts.jobs = 1;
    const auto serial = run_suite(default_specs(), opts);
    criterion1(serial);
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6(serial);
    criterion7(serial);
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
