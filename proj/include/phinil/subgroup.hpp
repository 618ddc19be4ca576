#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "phinil/element_set.hpp"
#include "phinil/finite_group.hpp"

namespace phinil {

enum class Tri { unknown, no, yes };

// A subgroup of a parent group, stored as a membership bit vector over the
// parent's element indices.
class Subgroup {
 public:
  // Empty placeholder with no parent; order() == 0.
  Subgroup() = default;
  // `members` must already be a subgroup (see is_subgroup()).
  Subgroup(GroupPtr parent, ElementSet members);

  static Subgroup generated_by(GroupPtr parent, std::span<const Element> gens);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Element x) const noexcept { return members_.contains(x); }
  bool is_subset_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }
  // Canonical generating set (see greedy_generators()).
  const std::vector<Element>& generators() const noexcept { return generators_; }

  Tri normal() const noexcept { return normal_; }
  Tri maximal() const noexcept { return maximal_; }
  void set_normal(bool v) noexcept { normal_ = v ? Tri::yes : Tri::no; }
  void set_maximal(bool v) noexcept { maximal_ = v ? Tri::yes : Tri::no; }

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

 private:
  GroupPtr parent_;
  ElementSet members_;
  std::vector<Element> elements_;
  std::vector<Element> generators_;
  Tri normal_ = Tri::unknown;
  Tri maximal_ = Tri::unknown;
};

// Closure test for an arbitrary subset (identity, products).
bool is_subgroup(const FiniteGroup& g, const ElementSet& members);

// true iff g^-1 H g = H for all g; checked on generators of G and H.
bool is_normal(const FiniteGroup& g, const Subgroup& h);
// Normality of `n` inside the subgroup `h` (both in the same parent).
bool is_normal_in(const Subgroup& n, const Subgroup& h);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
// <A, B>
Subgroup join(const Subgroup& a, const Subgroup& b);
// g^-1 H g
Subgroup conjugate(const Subgroup& h, Element g);
// Every distinct conjugate of h in its parent, h first.
std::vector<Subgroup> conjugates(const Subgroup& h);

}  // namespace phinil
