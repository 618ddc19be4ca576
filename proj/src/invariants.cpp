#include "phinil/invariants.hpp"

#include <numeric>
#include <stdexcept>

#include "phinil/build.hpp"

namespace phinil {

std::uint64_t element_order_by_powers(const FiniteGroup& g, Element x) {
  std::uint64_t k = 1;
  for (Element cur = x; cur != FiniteGroup::identity(); cur = g.mul(cur, x)) ++k;
  return k;
}

std::uint64_t element_order_by_cycles(const FiniteGroup& g, Element x) {
  if (!g.has_permutations()) throw std::logic_error("group has no permutation representation");
  return g.permutations()[x].order();
}

std::uint64_t element_order(const FiniteGroup& g, Element x) {
  if (!g.is_table_backed() && g.has_permutations()) return element_order_by_cycles(g, x);
  return element_order_by_powers(g, x);
}

std::vector<std::uint64_t> element_orders(const FiniteGroup& g) {
  std::vector<std::uint64_t> out(g.order());
  for (Element x = 0; x < g.order(); ++x) out[x] = element_order(g, x);
  return out;
}

GroupProfile profile_from_orders(const std::vector<std::uint64_t>& orders) {
  GroupProfile p;
  p.order = orders.size();
  p.exponent = 1;
  for (auto o : orders) {
    ++p.histogram[o];
    p.exponent = std::lcm(p.exponent, o);
  }
  auto it = p.histogram.find(p.exponent);
  p.phi = it == p.histogram.end() ? 0 : it->second;
  return p;
}

GroupProfile profile(const FiniteGroup& g) { return profile_from_orders(element_orders(g)); }

std::uint64_t exponent(const FiniteGroup& g) { return profile(g).exponent; }

std::uint64_t phi(const FiniteGroup& g) { return profile(g).phi; }

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (auto a : gens) {
    for (auto b : gens) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

Subgroup center_of(const Subgroup& h) {
  const FiniteGroup& g = *h.parent();
  ElementSet z(g.order());
  for (auto x : h.elements()) {
    bool central = true;
    for (auto s : h.generators()) {
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    }
    if (central) z.insert(x);
  }
  return Subgroup(h.parent(), std::move(z));
}

Subgroup derived_subgroup_of(const Subgroup& h) {
  const FiniteGroup& g = *h.parent();
  ElementSet comms(g.order());
  for (auto x : h.elements()) {
    for (auto y : h.elements()) comms.insert(commutator(g, x, y));
  }
  const auto gens = comms.to_vector();
  return Subgroup::generated_by(h.parent(), gens);
}

bool is_abelian(const Subgroup& h) {
  const FiniteGroup& g = *h.parent();
  for (auto a : h.generators()) {
    for (auto b : h.generators()) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

Subgroup center(const GroupPtr& g) { return center_of(Subgroup::whole(g)); }

Subgroup derived_subgroup(const GroupPtr& g) { return derived_subgroup_of(Subgroup::whole(g)); }

}  // namespace phinil
