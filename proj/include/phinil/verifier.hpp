#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "phinil/finite_group.hpp"
#include "phinil/group_spec.hpp"
#include "phinil/invariants.hpp"
#include "phinil/lattice.hpp"
#include "phinil/schmidt.hpp"
#include "phinil/sections.hpp"

namespace phinil {

struct Witness {
  std::size_t h_index = 0;
  std::size_t n_index = 0;
  GroupProfile profile;

  std::string id() const { return section_id(h_index, n_index); }
};

// Outcome of checking the phi-criterion on one group.
struct TheoremReport {
  std::string group;
  std::uint64_t order = 0;
  // Agreed verdict of the Sylow and lower-central-series tests.
  bool nilpotent = false;
  unsigned nilpotency_class = 0;
  std::size_t sections_checked = 0;
  // Section quotients on which both nilpotency tests were run and agreed.
  std::size_t quotient_crosschecks = 0;
  bool all_sections_phi_nonzero = true;
  std::optional<Witness> witness;
  // phi(H) != 0 for every subgroup H.
  bool condition2 = true;
  // phi(G) != 0.
  bool condition3 = true;
  double elapsed_ms = 0;

  // nilpotent == all_sections_phi_nonzero, the implication chain
  // all-sections => condition2 => condition3, and witness <=> !all-sections.
  bool consistent() const;
};

// Runs both nilpotency tests on G and on every section quotient (throwing
// NilpotencyTestDisagreement on any mismatch) and computes phi of every
// section.
TheoremReport verify_theorem(const SubgroupLattice& lattice, const BuildOptions& options = {});

// First section (enumeration order) whose quotient has phi = 0.
std::optional<Section> find_witness(const SubgroupLattice& lattice,
                                    const BuildOptions& options = {});

// phi(H) != 0 for every subgroup H, each materialized as a standalone group.
bool check_condition2(const SubgroupLattice& lattice, const BuildOptions& options = {});

struct FamilyCheck {
  std::string instance;
  std::uint64_t order = 0;
  std::uint64_t phi = 0;
  bool expect_zero = true;
  bool pass = false;
};

// phi = 0 for D(2n) (n odd, 3..max_n), S(n) (3..min(max_n,7)),
// A(n) (4..min(max_n,7)) and the Frobenius groups C7:C3, D(10), C11:C5,
// C13:C3; plus D(8) as a negative control (phi != 0). The enumeration cap
// is raised as needed for S(7) and A(7), which only need element orders.
std::vector<FamilyCheck> family_phi_checks(unsigned max_n, const BuildOptions& options = {});

// For a spec naming a member of a phi = 0 family, true; otherwise nullopt.
std::optional<bool> family_expects_phi_zero(const GroupSpec& spec);

std::vector<std::string> default_catalog();

struct SuiteOptions {
  BuildOptions build;
  std::size_t lattice_cap = kDefaultLatticeCap;
  unsigned jobs = 1;
};

// One catalog line: either a parsed spec or the error that prevented it.
struct SuiteInput {
  std::string text;
  std::optional<GroupSpec> spec;
  std::string input_error;
};

struct SuiteEntry {
  std::string spec;
  std::optional<TheoremReport> report;
  bool schmidt = false;
  std::optional<SchmidtCertificate> certificate;
  std::optional<bool> family_expect_zero;
  bool family_pass = true;
  // Non-empty when the group could not be processed.
  std::string error;
  std::string error_kind;
  // Theorem mismatch, broken invariant chain, disagreement or certificate failure.
  bool failure = false;
  bool disagreement = false;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  std::size_t failures = 0;
  std::size_t disagreements = 0;
  std::size_t errors = 0;
  double wall_time_s = 0;

  int exit_status() const { return failures == 0 ? 0 : 1; }
};

SuiteReport run_suite(const std::vector<SuiteInput>& catalog, const SuiteOptions& options = {});
SuiteReport run_suite(const std::vector<GroupSpec>& catalog, const SuiteOptions& options = {});
// Parses each text; parse failures become per-entry errors.
std::vector<SuiteInput> parse_catalog(const std::vector<std::string>& lines);
// Catalog file: one expression per line, blank and '#' lines skipped. Parse
// errors name the file line.
std::vector<SuiteInput> load_catalog(std::istream& in);

}  // namespace phinil
