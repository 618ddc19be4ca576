#include "phinil/subgroup.hpp"

#include <unordered_set>

namespace phinil {

Subgroup::Subgroup(GroupPtr parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  elements_ = members_.to_vector();
  generators_ = greedy_generators(*parent_, members_);
}

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const Element> gens) {
  ElementSet members = close(*parent, gens);
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  ElementSet members(parent->order());
  members.insert(FiniteGroup::identity());
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  ElementSet members = ElementSet::full(parent->order());
  return Subgroup(std::move(parent), std::move(members));
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& members) {
  if (!members.contains(FiniteGroup::identity())) return false;
  const auto elems = members.to_vector();
  for (auto a : elems) {
    for (auto b : elems) {
      if (!members.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (auto x : g.generators()) {
    const Element xi = g.inv(x);
    for (auto s : h.generators()) {
      if (!h.contains(g.mul(g.mul(xi, s), x))) return false;
    }
  }
  return true;
}

bool is_normal_in(const Subgroup& n, const Subgroup& h) {
  const FiniteGroup& g = *h.parent();
  if (!n.is_subset_of(h)) return false;
  for (auto x : h.generators()) {
    const Element xi = g.inv(x);
    for (auto s : n.generators()) {
      if (!n.contains(g.mul(g.mul(xi, s), x))) return false;
    }
  }
  return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  return Subgroup(a.parent(), a.members() & b.members());
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  return Subgroup(a.parent(), join(*a.parent(), a.members(), a.generators(), b.generators()));
}

Subgroup conjugate(const Subgroup& h, Element g) {
  const FiniteGroup& G = *h.parent();
  const Element gi = G.inv(g);
  ElementSet out(G.order());
  for (auto x : h.elements()) out.insert(G.mul(G.mul(gi, x), g));
  return Subgroup(h.parent(), std::move(out));
}

std::vector<Subgroup> conjugates(const Subgroup& h) {
  const FiniteGroup& G = *h.parent();
  std::vector<Subgroup> orbit{h};
  std::unordered_set<ElementSet, ElementSetHash> seen{h.members()};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto g : G.generators()) {
      Subgroup c = conjugate(orbit[i], g);
      if (seen.insert(c.members()).second) orbit.push_back(std::move(c));
    }
  }
  return orbit;
}

}  // namespace phinil
