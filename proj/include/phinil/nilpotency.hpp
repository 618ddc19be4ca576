#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "phinil/finite_group.hpp"
#include "phinil/lattice.hpp"

namespace phinil {

// Nilpotent iff every Sylow subgroup is unique, read off the lattice.
bool is_nilpotent_sylow(const SubgroupLattice& lattice);
// Same test for the subgroup at lattice index i.
bool is_nilpotent_sylow(const SubgroupLattice& lattice, std::size_t i);
// Lattice-free form of the same characterization: the Sylow p-subgroup is
// unique iff G has exactly |G|_p elements of p-power order.
bool is_nilpotent_sylow(const FiniteGroup& g);
bool is_nilpotent_sylow(const FiniteGroup& g, const std::vector<std::uint64_t>& element_orders);

struct LowerCentralSeries {
  bool nilpotent = false;
  // Number of steps to reach the trivial group (0 for the trivial group).
  // Meaningful only when nilpotent.
  unsigned nilpotency_class = 0;
  // |gamma_1|, |gamma_2|, ... until the series becomes trivial or stalls.
  std::vector<std::size_t> orders;
};

// gamma_1 = G, gamma_{k+1} = [gamma_k, G], built from all commutators.
LowerCentralSeries lower_central_series(const FiniteGroup& g);
bool is_nilpotent_lcs(const FiniteGroup& g);

// Derived series G, G', G'', ... until it stabilizes.
std::vector<std::size_t> derived_series_orders(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

// Not nilpotent, and every maximal subgroup nilpotent.
bool is_schmidt(const SubgroupLattice& lattice);

}  // namespace phinil
