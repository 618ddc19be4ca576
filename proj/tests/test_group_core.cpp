#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"

#include "phinil/build.hpp"
#include "phinil/errors.hpp"
#include "phinil/invariants.hpp"
#include "phinil/spec_text.hpp"
#include "phinil/subgroup.hpp"
#include "support/oracles.hpp"
#include "support/sample_groups.hpp"

using namespace phinil;

TEST_CASE("permutation basics") {
  const auto c = Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}});
  CHECK(c.order() == 6);
  CHECK((c * c.inverse()).is_identity());
  CHECK((c.inverse() * c).is_identity());
  CHECK(c.to_cycle_string() == "(0 1 2)(3 4)");
  CHECK_FALSE(c.is_even());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  // Left-to-right composition: apply (0 1) first, then (0 2).
  const auto x = Permutation::from_cycles(3, {{0, 1}});
  const auto y = Permutation::from_cycles(3, {{0, 2}});
  CHECK((x * y) == Permutation::from_cycles(3, {{0, 1, 2}}));
}

TEST_CASE("permutation inverse property") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Permutation::Point> images(1 + trial % 9);
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<Permutation::Point>(i);
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation p(images);
    CHECK((p * p.inverse()).is_identity());
  }
}

TEST_CASE("close_generators") {
  SUBCASE("identity only") {
    const Permutation id = Permutation::identity(3);
    CHECK(close_generators(std::vector{id}, 10).size() == 1);
  }
  SUBCASE("S3 from a 3-cycle and a transposition matches the naive closure") {
    const std::vector gens{Permutation::from_cycles(3, {{0, 1, 2}}),
                           Permutation::from_cycles(3, {{0, 1}})};
    const auto elems = close_generators(gens, 100);
    CHECK(elems.size() == oracle::naive_closure(gens).size());
    CHECK(elems.size() == 6);
    CHECK(elems.front().is_identity());
  }
  SUBCASE("cap exceeded") {
    const std::vector gens{Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})};
    CHECK_THROWS_AS(close_generators(gens, 3), CapExceeded);
  }
  SUBCASE("breadth-first order is deterministic") {
    const std::vector gens{Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                           Permutation::from_cycles(4, {{0, 1}})};
    CHECK(close_generators(gens, 100) == close_generators(gens, 100));
  }
}

TEST_CASE("build_group orders") {
  CHECK(samples::build("C(7)")->order() == 7);
  CHECK(samples::build("D(10)")->order() == 10);
  CHECK(samples::build("D(2)")->order() == 2);
  CHECK(samples::build("S(3)")->order() == 6);
  CHECK(samples::build("S(5)")->order() == 120);
  CHECK(samples::build("A(5)")->order() == 60);
  CHECK(samples::build("A(1)")->order() == 1);
  CHECK(samples::build("E(5^3)")->order() == 125);
  CHECK(samples::build("prod(C(6), S(3))")->order() == 36);
  CHECK(samples::build("semi(C(7), C(3), action=pow2)")->order() == 21);
  CHECK(samples::build("G375")->order() == 375);
}

TEST_CASE("representation threshold") {
  CHECK(samples::build("A(6)")->is_table_backed());
  auto s6 = samples::build("S(6)");
  CHECK_FALSE(s6->is_table_backed());
  CHECK(s6->has_permutations());
  BuildOptions small;
  small.table_threshold = 4;
  auto c6 = build_group(parse_spec("prod(C(2), C(3))"), small);
  CHECK_FALSE(c6->is_table_backed());
  verify_axioms(*c6);
}

TEST_CASE("group axioms hold for every sample group") {
  for (const auto& text : samples::small_specs()) {
    CAPTURE(text);
    auto g = samples::build(text);
    CHECK_NOTHROW(verify_axioms(*g));
  }
  CHECK_NOTHROW(verify_axioms(*samples::build("G375")));
  CHECK_NOTHROW(verify_axioms(*samples::build("S(6)")));
}

TEST_CASE("build_group is deterministic") {
  for (const auto& text : samples::small_specs()) {
    auto a = samples::build(text);
    auto b = samples::build(text);
    REQUIRE(a->order() == b->order());
    bool same = a->generators() == b->generators();
    for (Element x = 0; x < a->order() && same; ++x) {
      for (Element y = 0; y < a->order(); ++y) same = same && a->mul(x, y) == b->mul(x, y);
    }
    CHECK_MESSAGE(same, text);
  }
}

TEST_CASE("semidirect product") {
  SUBCASE("C7 by C3 acting by squaring is non-abelian") {
    auto g = samples::build("semi(C(7), C(3), action=pow2)");
    bool found = false;
    for (Element x = 0; x < g->order(); ++x) {
      for (Element y = 0; y < g->order(); ++y) found |= g->mul(x, y) != g->mul(y, x);
    }
    CHECK(found);
  }
  SUBCASE("normal copy is closed and conjugation invariant") {
    auto g = samples::build("G375");
    std::vector<Element> copy;
    for (Element x = 0; x < 125; ++x) copy.push_back(x);
    ElementSet set(g->order());
    for (auto x : copy) set.insert(x);
    CHECK(is_subgroup(*g, set));
    CHECK(oracle::normal_by_all_conjugations(*g, copy));
  }
  SUBCASE("trivial acting group gives the same profile") {
    for (const char* n : {"C(6)", "S(3)", "E(3^3)"}) {
      auto base = samples::build(n);
      auto semi = semidirect_product(base, samples::build("C(1)"), ActionSpec{});
      CHECK(profile(*semi) == profile(*base));
    }
  }
  SUBCASE("E(5^3) by rot3 is Group375") {
    auto a = samples::build("semi(E(5^3), C(3), action=rot3)");
    auto b = samples::build("G375");
    REQUIRE(a->order() == b->order());
    bool same = true;
    for (Element x = 0; x < a->order(); ++x) {
      for (Element y = 0; y < a->order(); ++y) same = same && a->mul(x, y) == b->mul(x, y);
    }
    CHECK(same);
  }
  SUBCASE("invalid actions") {
    auto c7 = samples::build("C(7)");
    auto c3 = samples::build("C(3)");
    auto c2 = samples::build("C(2)");
    // Squaring has order 3 mod 7, so it cannot be the action of an involution.
    CHECK_THROWS_AS(semidirect_product(c7, c2, ActionSpec{{{2}}}), InvalidAction);
    // x -> x^7 = e is not bijective.
    CHECK_THROWS_AS(semidirect_product(c7, c3, ActionSpec{{{0}}}), InvalidAction);
    // Wrong number of maps.
    CHECK_THROWS_AS(semidirect_product(c7, c3, ActionSpec{}), InvalidAction);
    // Squaring is not a homomorphism of S3.
    CHECK_THROWS_AS(samples::build("semi(S(3), C(2), action=pow2)"), InvalidAction);
    CHECK_THROWS_AS(samples::build("semi(C(7), C(3), action=spin)"), InvalidAction);
  }
}

TEST_CASE("rot3 on E(5^3) fixes the commutator") {
  auto e = samples::build("E(5^3)");
  auto c3 = samples::build("C(3)");
  const ActionSpec act = resolve_action("rot3", *e, *c3);
  const Element x = e->generators()[0], y = e->generators()[1];
  const Element xi = act.images[0][0], yi = act.images[0][1];
  CHECK(commutator(*e, xi, yi) == commutator(*e, x, y));
}

TEST_CASE("commutator") {
  auto s3 = samples::build("S(3)");
  for (Element y = 0; y < s3->order(); ++y) CHECK(commutator(*s3, 0, y) == 0);
  const Element x = *s3->index_of(Permutation::from_cycles(3, {{0, 1}}));
  const Element y = *s3->index_of(Permutation::from_cycles(3, {{0, 2}}));
  const auto& px = s3->permutations()[x];
  const auto& py = s3->permutations()[y];
  const Permutation direct = px.inverse() * py.inverse() * px * py;
  CHECK(s3->permutations()[commutator(*s3, x, y)] == direct);
  CHECK(direct == Permutation::from_cycles(3, {{0, 2, 1}}));
  auto c12 = samples::build("C(12)");
  for (Element a = 0; a < 12; ++a) {
    for (Element b = 0; b < 12; ++b) CHECK(commutator(*c12, a, b) == 0);
  }
}

TEST_CASE("extraspecial group has a center of order p") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    auto e = extraspecial_group(p);
    CHECK(e->order() == p * p * p);
    CHECK(oracle::center_by_pairs(*e).size() == p);
  }
}

TEST_CASE("spec constraints") {
  CHECK_THROWS_AS(samples::build("D(7)"), InvalidSpec);
  CHECK_THROWS_AS(samples::build("E(4^3)"), InvalidSpec);
  CHECK_THROWS_AS(samples::build("C(0)"), InvalidSpec);
  BuildOptions tiny;
  tiny.cap = 100;
  CHECK_THROWS_AS(build_group(parse_spec("S(5)"), tiny), CapExceeded);
  CHECK_THROWS_AS(build_group(parse_spec("prod(C(10), C(11))"), tiny), CapExceeded);
}

TEST_CASE("Cayley tables") {
  SUBCASE("round trip") {
    auto s3 = samples::build("S(3)");
    std::stringstream ss;
    write_cayley(*s3, ss);
    auto back = read_cayley(ss, "s3");
    CHECK(profile(*back) == profile(*s3));
  }
  SUBCASE("file on disk") {
    auto k4 = read_cayley_file(PHINIL_TEST_DATA "/klein4.cayley");
    CHECK(k4->order() == 4);
    CHECK(exponent(*k4) == 2);
  }
  SUBCASE("non-associative table") {
    CHECK_THROWS_AS(read_cayley_file(PHINIL_TEST_DATA "/broken.cayley"), AxiomViolation);
  }
  SUBCASE("malformed input") {
    std::istringstream bad_count("2\n0 1\n1\n");
    CHECK_THROWS_AS(read_cayley(bad_count, "x"), InvalidSpec);
    std::istringstream bad_token("2\n0 1\n1 zero\n");
    CHECK_THROWS_AS(read_cayley(bad_token, "x"), InvalidSpec);
    std::istringstream no_identity("2\n1 0\n0 1\n");
    CHECK_THROWS_AS(read_cayley(no_identity, "x"), AxiomViolation);
    std::istringstream out_of_range("2\n0 1\n1 2\n");
    CHECK_THROWS_AS(read_cayley(out_of_range, "x"), AxiomViolation);
    CHECK_THROWS_AS(read_cayley_file("/nonexistent/table"), InvalidSpec);
  }
}

TEST_CASE("random permutation groups satisfy the axioms") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = samples::random_permutation_group(rng, 3 + trial % 3);
    CAPTURE(g->order());
    CHECK_NOTHROW(verify_axioms(*g));
    for (Element x = 0; x < g->order(); ++x) CHECK(g->mul(x, g->inv(x)) == 0);
  }
}
