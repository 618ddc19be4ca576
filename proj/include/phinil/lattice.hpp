#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "phinil/finite_group.hpp"
#include "phinil/subgroup.hpp"

namespace phinil {

inline constexpr std::size_t kDefaultLatticeCap = 100000;

// Every subgroup of a group, sorted by order and then by bit vector. Index 0
// is the trivial subgroup and the last index is the whole group.
class SubgroupLattice {
 public:
  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }

  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return subgroups_.size() - 1; }

  std::optional<std::size_t> index_of(const ElementSet& members) const;
  std::optional<std::size_t> index_of(const Subgroup& h) const { return index_of(h.members()); }

  // Indices j with subgroup j contained in subgroup i (including i), ascending.
  const std::vector<std::uint32_t>& contained_in(std::size_t i) const { return below_[i]; }
  // Indices j with subgroup i contained in subgroup j (including i), ascending.
  const std::vector<std::uint32_t>& containing(std::size_t i) const { return above_[i]; }
  bool includes(std::size_t small, std::size_t big) const;
  // All pairs (i, j), i != j, with subgroup i inside subgroup j.
  std::vector<std::pair<std::size_t, std::size_t>> inclusion_pairs() const;

 private:
  friend SubgroupLattice all_subgroups(GroupPtr g, std::size_t cap);

  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<std::vector<std::uint32_t>> below_;
  std::vector<std::vector<std::uint32_t>> above_;
};

// Join closure seeded with the cyclic subgroups. Every subgroup is a join of
// cyclic subgroups of prime-power order, so joining each conjugacy-class
// representative with those cyclic subgroups (and adding all conjugates of
// every new subgroup) reaches the whole lattice. Throws LatticeCapExceeded
// when more than `cap` subgroups appear.
SubgroupLattice all_subgroups(GroupPtr g, std::size_t cap = kDefaultLatticeCap);

// Maximal subgroups of the whole group.
std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lattice);
// Lattice indices of the maximal subgroups of subgroup i.
std::vector<std::size_t> maximal_within(const SubgroupLattice& lattice, std::size_t i);

// Intersection of all maximal subgroups (the whole group when there are none).
Subgroup frattini(const SubgroupLattice& lattice);
Subgroup frattini_within(const SubgroupLattice& lattice, std::size_t i);

// Subgroups of order |G|_p. For p not dividing |G| this is the trivial subgroup.
std::vector<Subgroup> sylow_subgroups(const SubgroupLattice& lattice, std::uint64_t p);
std::vector<std::size_t> sylow_within(const SubgroupLattice& lattice, std::size_t i,
                                      std::uint64_t p);

// Checks L(S) = L(P1) u {conjugates of Q1} u {S} for a group S of order
// p^r q, together with the shape that makes it meaningful: P1 a normal
// elementary abelian Sylow p-subgroup, Q1 a non-normal subgroup of prime
// order q != p.
bool verify_schmidt_lattice(const SubgroupLattice& lattice, const Subgroup& p1,
                            const Subgroup& q1);

}  // namespace phinil
