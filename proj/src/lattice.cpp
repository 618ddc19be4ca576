#include "phinil/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "phinil/errors.hpp"
#include "phinil/invariants.hpp"
#include "phinil/numeric.hpp"

namespace phinil {

std::optional<std::size_t> SubgroupLattice::index_of(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SubgroupLattice::includes(std::size_t small, std::size_t big) const {
  const auto& b = below_[big];
  return std::binary_search(b.begin(), b.end(), static_cast<std::uint32_t>(small));
}

std::vector<std::pair<std::size_t, std::size_t>> SubgroupLattice::inclusion_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < below_.size(); ++j) {
    for (auto i : below_[j]) {
      if (i != j) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupLattice all_subgroups(GroupPtr g, std::size_t cap) {
  const FiniteGroup& G = *g;
  const std::size_t n = G.order();

  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  std::vector<std::size_t> reps;  // one per conjugacy class, in discovery order

  auto add_class = [&](Subgroup h) {
    if (index.contains(h.members())) return;
    reps.push_back(found.size());
    for (auto& c : conjugates(h)) {
      if (index.contains(c.members())) continue;
      if (found.size() >= cap) {
        throw LatticeCapExceeded("more than " + std::to_string(cap) + " subgroups in " + G.name());
      }
      index.emplace(c.members(), found.size());
      found.push_back(std::move(c));
    }
  };

  add_class(Subgroup::trivial(g));

  // Seeds: cyclic subgroups. Joins only use those of prime-power order.
  const auto orders = element_orders(G);
  std::vector<Element> seed_gens;
  {
    std::unordered_map<ElementSet, bool, ElementSetHash> cyclic_seen;
    for (Element x = 1; x < n; ++x) {
      const Element gens[] = {x};
      ElementSet c = close(G, gens);
      if (cyclic_seen.contains(c)) continue;
      cyclic_seen.emplace(c, true);
      if (is_prime_power(orders[x])) seed_gens.push_back(x);
      add_class(Subgroup(g, std::move(c)));
    }
  }

  for (std::size_t r = 0; r < reps.size(); ++r) {
    // Copy: `found` may reallocate while this class is processed.
    const Subgroup rep = found[reps[r]];
    for (auto x : seed_gens) {
      if (rep.contains(x)) continue;
      const Element extra[] = {x};
      ElementSet joined = join(G, rep.members(), rep.generators(), extra);
      if (index.contains(joined)) continue;
      add_class(Subgroup(g, std::move(joined)));
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });

  SubgroupLattice lattice;
  lattice.group_ = g;
  lattice.subgroups_ = std::move(found);
  const std::size_t m = lattice.subgroups_.size();
  for (std::size_t i = 0; i < m; ++i) lattice.index_.emplace(lattice.subgroups_[i].members(), i);

  lattice.below_.assign(m, {});
  lattice.above_.assign(m, {});
  for (std::size_t j = 0; j < m; ++j) {
    const Subgroup& big = lattice.subgroups_[j];
    for (std::size_t i = 0; i <= j; ++i) {
      const Subgroup& small = lattice.subgroups_[i];
      if (big.order() % small.order() != 0) continue;
      if (small.is_subset_of(big)) {
        lattice.below_[j].push_back(static_cast<std::uint32_t>(i));
        lattice.above_[i].push_back(static_cast<std::uint32_t>(j));
      }
    }
  }

  const std::size_t whole = m - 1;
  for (std::size_t i = 0; i < m; ++i) {
    auto& h = lattice.subgroups_[i];
    h.set_normal(is_normal(G, h));
    // Maximal iff the only proper overgroup is G itself.
    h.set_maximal(i != whole && lattice.above_[i].size() == 2);
  }
  return lattice;
}

std::vector<std::size_t> maximal_within(const SubgroupLattice& lattice, std::size_t i) {
  std::vector<std::size_t> out;
  const auto& below = lattice.contained_in(i);
  for (auto j : below) {
    if (j == i) continue;
    // j is maximal in i iff no k strictly between them.
    bool maximal = true;
    for (auto k : lattice.containing(j)) {
      if (k != j && k != i && lattice.includes(k, i)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(j);
  }
  return out;
}

std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lattice) {
  std::vector<Subgroup> out;
  for (auto j : maximal_within(lattice, lattice.whole_index())) out.push_back(lattice[j]);
  return out;
}

Subgroup frattini_within(const SubgroupLattice& lattice, std::size_t i) {
  ElementSet acc = lattice[i].members();
  for (auto j : maximal_within(lattice, i)) acc &= lattice[j].members();
  return Subgroup(lattice.group(), std::move(acc));
}

Subgroup frattini(const SubgroupLattice& lattice) {
  return frattini_within(lattice, lattice.whole_index());
}

std::vector<std::size_t> sylow_within(const SubgroupLattice& lattice, std::size_t i,
                                      std::uint64_t p) {
  const std::uint64_t target = prime_part(lattice[i].order(), p);
  std::vector<std::size_t> out;
  for (auto j : lattice.contained_in(i)) {
    if (lattice[j].order() == target) out.push_back(j);
  }
  return out;
}

std::vector<Subgroup> sylow_subgroups(const SubgroupLattice& lattice, std::uint64_t p) {
  std::vector<Subgroup> out;
  for (auto j : sylow_within(lattice, lattice.whole_index(), p)) out.push_back(lattice[j]);
  return out;
}

bool verify_schmidt_lattice(const SubgroupLattice& lattice, const Subgroup& p1,
                            const Subgroup& q1) {
  const FiniteGroup& S = *lattice.group();
  const std::uint64_t n = S.order();
  const std::uint64_t q = q1.order();
  if (!is_prime(q) || p1.order() * q != n) return false;
  const auto pf = factorize(p1.order());
  if (pf.size() != 1 || pf[0].first == q) return false;
  const std::uint64_t p = pf[0].first;

  if (!is_normal(S, p1) || is_normal(S, q1)) return false;
  if (!is_abelian(p1)) return false;
  for (auto x : p1.elements()) {
    if (x != FiniteGroup::identity() && element_order(S, x) != p) return false;
  }

  std::vector<bool> is_conj(lattice.size(), false);
  for (const auto& c : conjugates(q1)) {
    auto idx = lattice.index_of(c);
    if (!idx) return false;
    is_conj[*idx] = true;
  }
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subgroup& k = lattice[i];
    if (k.is_subset_of(p1) || is_conj[i] || i == lattice.whole_index()) continue;
    return false;
  }
  return true;
}

}  // namespace phinil
