#include "phinil/nilpotency.hpp"

#include "phinil/build.hpp"
#include "phinil/invariants.hpp"
#include "phinil/numeric.hpp"

namespace phinil {

bool is_nilpotent_sylow(const SubgroupLattice& lattice, std::size_t i) {
  for (const auto& [p, e] : factorize(lattice[i].order())) {
    if (sylow_within(lattice, i, p).size() != 1) return false;
  }
  return true;
}

bool is_nilpotent_sylow(const SubgroupLattice& lattice) {
  return is_nilpotent_sylow(lattice, lattice.whole_index());
}

bool is_nilpotent_sylow(const FiniteGroup& g, const std::vector<std::uint64_t>& orders) {
  for (const auto& [p, e] : factorize(g.order())) {
    std::uint64_t p_elements = 0;
    for (auto o : orders) {
      if (prime_part(o, p) == o) ++p_elements;
    }
    if (p_elements != prime_part(g.order(), p)) return false;
  }
  return true;
}

bool is_nilpotent_sylow(const FiniteGroup& g) { return is_nilpotent_sylow(g, element_orders(g)); }

namespace {

// [A, B] for subsets given as element lists; returns the generated subgroup.
ElementSet commutator_subgroup(const FiniteGroup& g, const std::vector<Element>& a,
                               const std::vector<Element>& b) {
  ElementSet comms(g.order());
  for (auto x : a) {
    for (auto y : b) comms.insert(commutator(g, x, y));
  }
  const auto gens = comms.to_vector();
  return close(g, gens);
}

}  // namespace

LowerCentralSeries lower_central_series(const FiniteGroup& g) {
  LowerCentralSeries out;
  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;

  ElementSet gamma = ElementSet::full(g.order());
  out.orders.push_back(gamma.count());
  unsigned steps = 0;
  while (gamma.count() > 1) {
    ElementSet next = commutator_subgroup(g, gamma.to_vector(), all);
    ++steps;
    out.orders.push_back(next.count());
    if (next == gamma) return out;
    gamma = std::move(next);
  }
  out.nilpotent = true;
  out.nilpotency_class = steps;
  return out;
}

bool is_nilpotent_lcs(const FiniteGroup& g) { return lower_central_series(g).nilpotent; }

std::vector<std::size_t> derived_series_orders(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  ElementSet cur = ElementSet::full(g.order());
  out.push_back(cur.count());
  while (cur.count() > 1) {
    const auto elems = cur.to_vector();
    ElementSet next = commutator_subgroup(g, elems, elems);
    if (next == cur) break;
    out.push_back(next.count());
    cur = std::move(next);
  }
  return out;
}

bool is_solvable(const FiniteGroup& g) { return derived_series_orders(g).back() == 1; }

bool is_schmidt(const SubgroupLattice& lattice) {
  if (is_nilpotent_sylow(lattice)) return false;
  for (auto i : maximal_within(lattice, lattice.whole_index())) {
    if (!is_nilpotent_sylow(lattice, i)) return false;
  }
  return true;
}

}  // namespace phinil
