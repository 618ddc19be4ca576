// phinil: finite-group invariants and the phi nilpotency criterion from the
// command line.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "phinil/build.hpp"
#include "phinil/errors.hpp"
#include "phinil/invariants.hpp"
#include "phinil/lattice.hpp"
#include "phinil/nilpotency.hpp"
#include "phinil/report.hpp"
#include "phinil/schmidt.hpp"
#include "phinil/sections.hpp"
#include "phinil/spec_text.hpp"
#include "phinil/verifier.hpp"

namespace {

using namespace phinil;

enum ExitCode : int { kOk = 0, kMismatch = 1, kInputError = 2, kResourceCap = 3 };

struct CommonFlags {
  bool json = false;
  std::string out;
  std::size_t cap = kDefaultCap;
  std::size_t lattice_cap = kDefaultLatticeCap;

  BuildOptions build() const {
    BuildOptions o;
    o.cap = cap;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--json", f.json, "Emit JSON instead of text");
  cmd->add_option("--out", f.out, "Write output to this path");
  cmd->add_option("--cap", f.cap, "Element enumeration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--lattice-cap", f.lattice_cap, "Subgroup count cap")
      ->check(CLI::PositiveNumber);
}

void emit(const CommonFlags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(f.out);
  if (!out) throw InvalidSpec("cannot write '" + f.out + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string histogram_text(const GroupProfile& p) {
  std::string out;
  for (const auto& [order, count] : p.histogram) {
    if (!out.empty()) out += ' ';
    out += std::to_string(order) + ":" + std::to_string(count);
  }
  return out;
}

int cmd_analyze(const std::string& text, const CommonFlags& f) {
  auto g = build_group(parse_spec(text), f.build());
  const SubgroupLattice lattice = all_subgroups(g, f.lattice_cap);
  const GroupProfile prof = profile(*g);
  const bool sylow = is_nilpotent_sylow(lattice);
  const LowerCentralSeries lcs = lower_central_series(*g);
  const bool schmidt = is_schmidt(lattice);
  std::optional<SchmidtCertificate> cert;
  if (schmidt) cert = schmidt_certificate(lattice, f.build(), f.lattice_cap);
  const bool cond2 = check_condition2(lattice, f.build());
  const std::size_t z = center(g).order();
  const std::size_t d = derived_subgroup(g).order();

  if (f.json) {
    Json j{{"group", g->name()},
           {"profile", to_json(prof)},
           {"nilpotent_sylow", sylow},
           {"nilpotent_lcs", lcs.nilpotent},
           {"nilpotency_class", lcs.nilpotent ? Json(lcs.nilpotency_class) : Json(nullptr)},
           {"schmidt", schmidt},
           {"certificate", cert ? to_json(*cert) : Json(nullptr)},
           {"condition2", cond2},
           {"condition3", prof.phi != 0},
           {"center_order", z},
           {"derived_order", d},
           {"lattice", lattice_summary(lattice)}};
    emit(f, dump_sorted(j));
  } else {
    std::ostringstream os;
    os << "group: " << g->name() << "\n"
       << "order: " << prof.order << "\n"
       << "exponent: " << prof.exponent << "\n"
       << "phi: " << prof.phi << "\n"
       << "histogram: " << histogram_text(prof) << "\n"
       << "center order: " << z << "\n"
       << "derived subgroup order: " << d << "\n"
       << "subgroups: " << lattice.size() << "\n"
       << "nilpotent (sylow): " << std::boolalpha << sylow << "\n"
       << "nilpotent (lower central series): " << lcs.nilpotent;
    if (lcs.nilpotent) os << " (class " << lcs.nilpotency_class << ")";
    os << "\n"
       << "condition2 (phi != 0 on all subgroups): " << cond2 << "\n"
       << "condition3 (phi != 0): " << (prof.phi != 0) << "\n"
       << "schmidt: " << schmidt << "\n";
    if (cert) {
      os << "certificate: p=" << cert->p << " q=" << cert->q << " m=" << cert->m
         << " n=" << cert->n << " r=" << cert->r << " checks=";
      for (const auto& [name, ok] : cert->checklist) os << name << (ok ? "+" : "-");
      os << "\n";
    }
    emit(f, os.str());
  }
  return sylow == lcs.nilpotent ? kOk : kMismatch;
}

int cmd_subgroups(const std::string& text, const CommonFlags& f) {
  auto g = build_group(parse_spec(text), f.build());
  const SubgroupLattice lattice = all_subgroups(g, f.lattice_cap);
  if (f.json) {
    Json list = Json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const auto& h = lattice[i];
      list.push_back(Json{{"index", i},
                          {"order", h.order()},
                          {"normal", h.normal() == Tri::yes},
                          {"maximal", h.maximal() == Tri::yes},
                          {"generators", h.generators()}});
    }
    emit(f, dump_sorted(Json{{"group", g->name()},
                             {"summary", lattice_summary(lattice)},
                             {"subgroups", list}}));
  } else {
    std::ostringstream os;
    os << g->name() << ": " << lattice.size() << " subgroups\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const auto& h = lattice[i];
      os << "#" << i << " order " << h.order() << (h.normal() == Tri::yes ? " normal" : "")
         << (h.maximal() == Tri::yes ? " maximal" : "") << " gens";
      for (auto x : h.generators()) os << ' ' << g->label(x);
      os << "\n";
    }
    emit(f, os.str());
  }
  return kOk;
}

int cmd_sections(const std::string& text, const CommonFlags& f) {
  auto g = build_group(parse_spec(text), f.build());
  const SubgroupLattice lattice = all_subgroups(g, f.lattice_cap);
  Json list = Json::array();
  std::ostringstream os;
  SectionStream stream(lattice, f.build());
  std::size_t count = 0;
  while (auto s = stream.next()) {
    const GroupProfile prof = profile(*s->quotient);
    ++count;
    if (f.json) {
      list.push_back(Json{{"section", s->id()},
                          {"order_H", s->h.order()},
                          {"order_N", s->n.order()},
                          {"profile", to_json(prof)}});
    } else {
      os << s->id() << " |H|=" << s->h.order() << " |N|=" << s->n.order()
         << " exp=" << prof.exponent << " phi=" << prof.phi << "\n";
    }
  }
  if (f.json) {
    emit(f, dump_sorted(Json{{"group", g->name()}, {"count", count}, {"sections", list}}));
  } else {
    os << count << " sections\n";
    emit(f, os.str());
  }
  return kOk;
}

int cmd_verify(const std::string& text, const CommonFlags& f) {
  auto g = build_group(parse_spec(text), f.build());
  const SubgroupLattice lattice = all_subgroups(g, f.lattice_cap);
  const TheoremReport r = verify_theorem(lattice, f.build());
  if (f.json) {
    emit(f, dump_sorted(to_json(r)));
  } else {
    std::ostringstream os;
    os << std::boolalpha << "group: " << r.group << "\n"
       << "order: " << r.order << "\n"
       << "nilpotent: " << r.nilpotent << "\n"
       << "sections checked: " << r.sections_checked << "\n"
       << "all sections phi != 0: " << r.all_sections_phi_nonzero << "\n"
       << "condition2: " << r.condition2 << "\n"
       << "condition3: " << r.condition3 << "\n";
    if (r.witness) {
      os << "witness: " << r.witness->id() << " order " << r.witness->profile.order
         << " exponent " << r.witness->profile.exponent << " phi " << r.witness->profile.phi
         << "\n";
    } else {
      os << "witness: none\n";
    }
    os << "consistent: " << r.consistent() << "\n";
    emit(f, os.str());
  }
  return r.consistent() ? kOk : kMismatch;
}

int cmd_witness(const std::string& text, const CommonFlags& f) {
  auto g = build_group(parse_spec(text), f.build());
  const SubgroupLattice lattice = all_subgroups(g, f.lattice_cap);
  const auto w = find_witness(lattice, f.build());
  if (f.json) {
    Json j{{"group", g->name()}, {"witness", nullptr}};
    if (w) {
      j["witness"] = Json{{"section", w->id()}, {"profile", to_json(profile(*w->quotient))}};
    }
    emit(f, dump_sorted(j));
  } else if (w) {
    const GroupProfile p = profile(*w->quotient);
    emit(f, "witness: " + w->id() + " order " + std::to_string(p.order) + " exponent " +
                std::to_string(p.exponent) + " phi " + std::to_string(p.phi));
  } else {
    emit(f, "witness: none");
  }
  return kOk;
}

int cmd_suite(const std::string& catalog_path, bool use_default, unsigned jobs,
              const CommonFlags& f) {
  std::vector<SuiteInput> inputs;
  if (use_default) {
    inputs = parse_catalog(default_catalog());
  } else {
    if (catalog_path.empty()) throw InvalidSpec("suite needs a catalog path or --default");
    std::ifstream in(catalog_path);
    if (!in) throw InvalidSpec("cannot open catalog '" + catalog_path + "'");
    inputs = load_catalog(in);
    if (inputs.empty()) std::cerr << "warning: catalog '" << catalog_path << "' lists no groups\n";
  }
  for (const auto& entry : inputs) {
    if (!entry.spec) std::cerr << "error: " << entry.input_error << "\n";
  }
  const SuiteReport report = run_suite(inputs, SuiteOptions{f.build(), f.lattice_cap, jobs});
  emit(f, dump_sorted(to_json(report)));
  return report.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group invariants and the phi nilpotency criterion"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string spec_text;
  std::string catalog;
  bool use_default = false;
  unsigned jobs = 1;

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const std::string&, const CommonFlags&);
  };
  const Sub subs[] = {
      {"analyze", "Profile, nilpotency and Schmidt verdicts for one group", cmd_analyze},
      {"subgroups", "List the subgroup lattice", cmd_subgroups},
      {"sections", "List every section H/N with its quotient profile", cmd_sections},
      {"verify", "Check the phi criterion over all sections", cmd_verify},
      {"witness", "First section whose quotient has phi = 0", cmd_witness},
  };
  std::vector<std::pair<CLI::App*, const Sub*>> commands;
  for (const auto& s : subs) {
    auto* cmd = app.add_subcommand(s.name, s.help);
    cmd->add_option("spec", spec_text, "Group expression, e.g. \"prod(C(6), S(3))\"")->required();
    add_common(cmd, flags);
    commands.emplace_back(cmd, &s);
  }
  auto* suite = app.add_subcommand("suite", "Verify every group of a catalog (JSON report)");
  suite->add_option("catalog", catalog, "File with one group expression per line");
  suite->add_flag("--default", use_default, "Use the built-in catalog");
  suite->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(suite, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (suite->parsed()) return cmd_suite(catalog, use_default, jobs, flags);
    for (const auto& [cmd, sub] : commands) {
      if (cmd->parsed()) return sub->run(spec_text, flags);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const LatticeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const NilpotencyTestDisagreement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const CertificateFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
