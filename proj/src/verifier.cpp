#include "phinil/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <thread>

#include "phinil/build.hpp"
#include "phinil/errors.hpp"
#include "phinil/nilpotency.hpp"
#include "phinil/spec_text.hpp"

namespace phinil {

bool TheoremReport::consistent() const {
  if (nilpotent != all_sections_phi_nonzero) return false;
  if (all_sections_phi_nonzero && !condition2) return false;
  if (condition2 && !condition3) return false;
  if (witness.has_value() == all_sections_phi_nonzero) return false;
  return true;
}

TheoremReport verify_theorem(const SubgroupLattice& lattice, const BuildOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const FiniteGroup& G = *lattice.group();
  TheoremReport report;
  report.group = G.name();
  report.order = G.order();

  const bool sylow = is_nilpotent_sylow(lattice);
  const LowerCentralSeries lcs = lower_central_series(G);
  if (sylow != lcs.nilpotent) {
    throw NilpotencyTestDisagreement("Sylow and lower central series tests disagree on " +
                                     G.name());
  }
  report.nilpotent = sylow;
  report.nilpotency_class = lcs.nilpotency_class;
  report.condition3 = phi(G) != 0;

  SectionStream stream(lattice, options);
  while (auto section = stream.next()) {
    const FiniteGroup& q = *section->quotient;
    const auto orders = element_orders(q);
    const GroupProfile prof = profile_from_orders(orders);
    if (is_nilpotent_sylow(q, orders) != is_nilpotent_lcs(q)) {
      throw NilpotencyTestDisagreement("nilpotency tests disagree on section " + section->id() +
                                       " of " + G.name());
    }
    ++report.quotient_crosschecks;
    ++report.sections_checked;
    if (prof.phi == 0) {
      if (!report.witness) report.witness = Witness{section->h_index, section->n_index, prof};
      if (section->n_index == lattice.trivial_index()) report.condition2 = false;
    }
  }
  report.all_sections_phi_nonzero = !report.witness.has_value();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<Section> find_witness(const SubgroupLattice& lattice, const BuildOptions& options) {
  SectionStream stream(lattice, options);
  while (auto section = stream.next()) {
    if (phi(*section->quotient) == 0) return section;
  }
  return std::nullopt;
}

bool check_condition2(const SubgroupLattice& lattice, const BuildOptions& options) {
  for (const auto& h : lattice.subgroups()) {
    if (phi(*materialize(h, options).group) == 0) return false;
  }
  return true;
}

std::vector<FamilyCheck> family_phi_checks(unsigned max_n, const BuildOptions& options) {
  std::vector<FamilyCheck> out;
  auto run = [&](const std::string& text, bool expect_zero) {
    BuildOptions local = options;
    // S(7) has 5040 elements; only element orders are needed here.
    local.cap = std::max<std::size_t>(local.cap, 5040);
    auto g = build_group(parse_spec(text), local);
    FamilyCheck c;
    c.instance = text;
    c.order = g->order();
    c.phi = phi(*g);
    c.expect_zero = expect_zero;
    c.pass = (c.phi == 0) == expect_zero;
    out.push_back(std::move(c));
  };
  for (unsigned n = 3; n <= max_n; n += 2) run("D(" + std::to_string(2 * n) + ")", true);
  for (unsigned n = 3; n <= std::min(max_n, 7u); ++n) run("S(" + std::to_string(n) + ")", true);
  for (unsigned n = 4; n <= std::min(max_n, 7u); ++n) run("A(" + std::to_string(n) + ")", true);
  run("semi(C(7), C(3), action=pow2)", true);
  run("D(10)", true);
  run("semi(C(11), C(5), action=pow3)", true);
  run("semi(C(13), C(3), action=pow3)", true);
  run("D(8)", false);
  return out;
}

std::optional<bool> family_expects_phi_zero(const GroupSpec& spec) {
  if (auto d = std::get_if<DihedralSpec>(&spec.node)) {
    const unsigned n = d->order / 2;
    if (n >= 3 && n % 2 == 1) return true;
  } else if (auto s = std::get_if<SymmetricSpec>(&spec.node)) {
    if (s->n >= 3) return true;
  } else if (auto a = std::get_if<AlternatingSpec>(&spec.node)) {
    if (a->n >= 4) return true;
  }
  return std::nullopt;
}

std::vector<std::string> default_catalog() {
  std::vector<std::string> out;
  for (unsigned n = 1; n <= 16; ++n) out.push_back("C(" + std::to_string(n) + ")");
  out.push_back("C(24)");
  out.push_back("C(30)");
  for (unsigned n = 3; n <= 10; ++n) out.push_back("D(" + std::to_string(2 * n) + ")");
  for (unsigned n = 3; n <= 6; ++n) out.push_back("S(" + std::to_string(n) + ")");
  for (unsigned n = 4; n <= 6; ++n) out.push_back("A(" + std::to_string(n) + ")");
  out.push_back("E(3^3)");
  out.push_back("E(5^3)");
  out.push_back("prod(C(6), S(3))");
  out.push_back("prod(C(2), A(4))");
  out.push_back("semi(C(7), C(3), action=pow2)");
  out.push_back("semi(prod(C(5), C(5)), C(3), action=rot3)");
  out.push_back("G375");
  return out;
}

namespace {

SuiteInput parse_line(const std::string& text, std::size_t line_no) {
  SuiteInput in;
  in.text = text;
  try {
    in.spec = parse_spec(text);
    in.text = to_string(*in.spec);
  } catch (const GroupError& e) {
    in.input_error = "line " + std::to_string(line_no) + ": " + e.what();
  }
  return in;
}

}  // namespace

std::vector<SuiteInput> parse_catalog(const std::vector<std::string>& lines) {
  std::vector<SuiteInput> out;
  for (std::size_t i = 0; i < lines.size(); ++i) out.push_back(parse_line(lines[i], i + 1));
  return out;
}

std::vector<SuiteInput> load_catalog(std::istream& in) {
  std::vector<SuiteInput> out;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(parse_line(line.substr(first, last - first + 1), line_no));
  }
  return out;
}

namespace {

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const AxiomViolation*>(&e)) return "axiom";
  if (dynamic_cast<const InvalidAction*>(&e)) return "action";
  if (dynamic_cast<const InvalidSpec*>(&e)) return "spec";
  if (dynamic_cast<const CapExceeded*>(&e)) return "cap";
  if (dynamic_cast<const LatticeCapExceeded*>(&e)) return "lattice_cap";
  if (dynamic_cast<const NilpotencyTestDisagreement*>(&e)) return "disagreement";
  if (dynamic_cast<const CertificateFailure*>(&e)) return "certificate";
  return "internal";
}

SuiteEntry run_one(const SuiteInput& input, const SuiteOptions& options) {
  SuiteEntry entry;
  entry.spec = input.text;
  if (!input.spec) {
    entry.error = input.input_error;
    entry.error_kind = "parse";
    return entry;
  }
  try {
    auto g = build_group(*input.spec, options.build);
    const SubgroupLattice lattice = all_subgroups(g, options.lattice_cap);
    entry.report = verify_theorem(lattice, options.build);
    entry.schmidt = is_schmidt(lattice);
    if (entry.schmidt) entry.certificate = schmidt_certificate(lattice, options.build, options.lattice_cap);
    entry.family_expect_zero = family_expects_phi_zero(*input.spec);
    if (entry.family_expect_zero) {
      entry.family_pass = (phi(*g) == 0) == *entry.family_expect_zero;
    }
    entry.failure = !entry.report->consistent() || !entry.family_pass;
  } catch (const NilpotencyTestDisagreement& e) {
    entry.error = e.what();
    entry.error_kind = error_kind(e);
    entry.failure = true;
    entry.disagreement = true;
  } catch (const CertificateFailure& e) {
    entry.error = e.what();
    entry.error_kind = error_kind(e);
    entry.failure = true;
  } catch (const std::exception& e) {
    entry.error = e.what();
    entry.error_kind = error_kind(e);
  }
  return entry;
}

}  // namespace

SuiteReport run_suite(const std::vector<SuiteInput>& catalog, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.entries.resize(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      report.entries[i] = run_one(catalog[i], options);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (const auto& e : report.entries) {
    if (e.failure) ++report.failures;
    if (e.disagreement) ++report.disagreements;
    if (!e.error.empty() && !e.failure) ++report.errors;
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteReport run_suite(const std::vector<GroupSpec>& catalog, const SuiteOptions& options) {
  std::vector<SuiteInput> inputs;
  for (const auto& spec : catalog) inputs.push_back(SuiteInput{to_string(spec), spec, {}});
  return run_suite(inputs, options);
}

}  // namespace phinil
