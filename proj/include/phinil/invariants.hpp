#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "phinil/finite_group.hpp"
#include "phinil/subgroup.hpp"

namespace phinil {

// Invariant fingerprint of a group. Histogram keys are element orders,
// ascending.
struct GroupProfile {
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  std::uint64_t phi = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;

  bool operator==(const GroupProfile&) const = default;
};

// Least k >= 1 with x^k = e. Table-backed groups use repeated
// multiplication; permutation-backed groups use the cycle structure.
std::uint64_t element_order(const FiniteGroup& g, Element x);
std::uint64_t element_order_by_powers(const FiniteGroup& g, Element x);
// Requires g.has_permutations().
std::uint64_t element_order_by_cycles(const FiniteGroup& g, Element x);
std::vector<std::uint64_t> element_orders(const FiniteGroup& g);

std::uint64_t exponent(const FiniteGroup& g);
// Number of elements whose order equals the exponent.
std::uint64_t phi(const FiniteGroup& g);
GroupProfile profile(const FiniteGroup& g);
GroupProfile profile_from_orders(const std::vector<std::uint64_t>& orders);

bool is_abelian(const FiniteGroup& g);

Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);

// Z(H) and [H, H] for a subgroup H, as subgroups of H's parent.
Subgroup center_of(const Subgroup& h);
Subgroup derived_subgroup_of(const Subgroup& h);
bool is_abelian(const Subgroup& h);

}  // namespace phinil
