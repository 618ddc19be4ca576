#include <sstream>

#include "doctest.h"

#include "phinil/invariants.hpp"
#include "phinil/spec_text.hpp"
#include "phinil/verifier.hpp"
#include "support/sample_groups.hpp"

using namespace phinil;

namespace {

SubgroupLattice lattice_of(const std::string& text) { return all_subgroups(samples::build(text)); }

}  // namespace

TEST_CASE("G375 has a Schmidt witness of order 75") {
  auto lat = lattice_of("G375");
  const auto s = find_witness(lat);
  REQUIRE(s.has_value());
  CHECK(s->quotient->order() == 75);
  CHECK(exponent(*s->quotient) == 15);
  CHECK(phi(*s->quotient) == 0);
  const auto r = verify_theorem(lat);
  CHECK_FALSE(r.nilpotent);
  CHECK(r.condition2);
  CHECK(r.condition3);
  CHECK_FALSE(r.all_sections_phi_nonzero);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->id() == s->id());
  CHECK(r.consistent());
}

TEST_CASE("D10 is its own witness") {
  auto lat = lattice_of("D(10)");
  const auto s = find_witness(lat);
  REQUIRE(s.has_value());
  CHECK(s->h_index == lat.whole_index());
  CHECK(s->n_index == lat.trivial_index());
}

TEST_CASE("nilpotent groups have no witness") {
  for (const char* text : {"C(1)", "C(12)", "D(8)", "E(3^3)", "prod(C(2), C(2))"}) {
    auto lat = lattice_of(text);
    CHECK_FALSE(find_witness(lat).has_value());
    const auto r = verify_theorem(lat);
    CHECK(r.nilpotent);
    CHECK(r.all_sections_phi_nonzero);
    CHECK(r.condition2);
    CHECK(r.condition3);
    CHECK(r.consistent());
  }
}

TEST_CASE("conditions on Z6 x S3") {
  auto lat = lattice_of("prod(C(6), S(3))");
  const auto r = verify_theorem(lat);
  CHECK(r.condition3);
  CHECK_FALSE(r.condition2);
  CHECK_FALSE(check_condition2(lat));
  CHECK_FALSE(r.all_sections_phi_nonzero);
  CHECK(r.consistent());
}

TEST_CASE("condition2 by direct materialization matches the report") {
  for (const auto& text : samples::small_specs()) {
    auto lat = lattice_of(text);
    const auto r = verify_theorem(lat);
    CHECK(r.condition2 == check_condition2(lat));
    CHECK(r.nilpotent == r.all_sections_phi_nonzero);
    CHECK(r.quotient_crosschecks == r.sections_checked);
    CHECK(r.consistent());
  }
}

TEST_CASE("family checks") {
  const auto checks = family_phi_checks(6);
  CHECK_FALSE(checks.empty());
  bool saw_control = false;
  for (const auto& c : checks) {
    CAPTURE(c.instance);
    CHECK(c.pass);
    CHECK(c.expect_zero == (c.phi == 0));
    saw_control |= !c.expect_zero;
  }
  CHECK(saw_control);
  CHECK(family_expects_phi_zero(parse_spec("S(4)")) == true);
  CHECK(family_expects_phi_zero(parse_spec("D(14)")) == true);
  CHECK_FALSE(family_expects_phi_zero(parse_spec("C(4)")).has_value());
}

TEST_CASE("catalog parsing") {
  std::istringstream in("# header\nC(4)\n\n  S(3)  \nprod(C(2)\n");
  const auto cat = load_catalog(in);
  REQUIRE(cat.size() == 3);
  CHECK(cat[0].spec.has_value());
  CHECK(cat[1].text == "S(3)");
  CHECK_FALSE(cat[2].spec.has_value());
  CHECK(cat[2].input_error.rfind("line 5:", 0) == 0);
}

TEST_CASE("run_suite") {
  SUBCASE("trivial group") {
    const auto r = run_suite(std::vector{parse_spec("C(1)")});
    REQUIRE(r.entries.size() == 1);
    CHECK(r.failures == 0);
    CHECK(r.exit_status() == 0);
    REQUIRE(r.entries[0].report.has_value());
    CHECK(r.entries[0].report->nilpotent);
  }
  SUBCASE("bad entries are reported and the rest continue") {
    std::istringstream in("file(" PHINIL_TEST_DATA "/broken.cayley)\nS(3)\nprod(C(2)\n");
    const auto r = run_suite(load_catalog(in));
    REQUIRE(r.entries.size() == 3);
    CHECK(r.errors == 2);
    CHECK(r.failures == 0);
    CHECK(r.entries[0].error_kind == "axiom");
    CHECK(r.entries[1].report.has_value());
    CHECK(r.entries[1].schmidt);
    CHECK(r.entries[2].error_kind == "parse");
  }
  SUBCASE("cap errors") {
    SuiteOptions opts;
    opts.build.cap = 50;
    const auto r = run_suite(std::vector{parse_spec("S(5)"), parse_spec("C(5)")}, opts);
    CHECK(r.entries[0].error_kind == "cap");
    CHECK(r.entries[1].report.has_value());
  }
  SUBCASE("empty catalog") {
    const auto r = run_suite(std::vector<GroupSpec>{});
    CHECK(r.entries.empty());
    CHECK(r.exit_status() == 0);
  }
}
