#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "phinil/finite_group.hpp"
#include "phinil/group_spec.hpp"
#include "phinil/permutation.hpp"

namespace phinil {

// Breadth-first closure from the identity, generators applied in the given
// order. Throws CapExceeded once more than `cap` elements are found.
std::vector<Permutation> close_generators(std::span<const Permutation> gens, std::size_t cap);

GroupPtr build_group(const GroupSpec& spec, const BuildOptions& options = {});

GroupPtr cyclic_group(unsigned n, const BuildOptions& options = {});
GroupPtr dihedral_group(unsigned order, const BuildOptions& options = {});
GroupPtr symmetric_group(unsigned n, const BuildOptions& options = {});
GroupPtr alternating_group(unsigned n, const BuildOptions& options = {});
GroupPtr extraspecial_group(unsigned p, const BuildOptions& options = {});
// E(5^3) extended by an order-3 automorphism fixing the commutator [x,y].
GroupPtr group375(const BuildOptions& options = {});

// Element (a, b) has index a + |A| * b.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const BuildOptions& options = {},
                        std::string name = {});

// Element (n, h) has index n + |N| * h, with (n1,h1)(n2,h2) = (n1 * h1(n2), h1 h2).
// The action is validated: every generator map must extend to an
// automorphism of N, and the generator assignment must extend to a
// homomorphism H -> Aut(N). Throws InvalidAction otherwise.
GroupPtr semidirect_product(const GroupPtr& normal, const GroupPtr& acting,
                            const ActionSpec& action, const BuildOptions& options = {},
                            std::string name = {});

// Built-in actions by name:
//   trivial  every acting generator acts as the identity
//   pow<k>   every acting generator sends each generator of N to its k-th power
//   rot3     N has generators g1, g2; g1 -> g2, g2 -> g1^-1 g2^-1
ActionSpec resolve_action(const std::string& name, const FiniteGroup& normal,
                          const FiniteGroup& acting);

// x^-1 y^-1 x y
Element commutator(const FiniteGroup& g, Element x, Element y);

// Checks identity, inverses, closure and associativity. Associativity is
// exhaustive up to order 200 and sampled (10 n^2 triples) above.
void verify_axioms(const FiniteGroup& g);

// Plain-text Cayley table: first line n, then n rows of n indices; '#' lines
// are comments; element 0 must be the identity. All axioms are re-checked.
GroupPtr read_cayley(std::istream& in, std::string name, const BuildOptions& options = {});
GroupPtr read_cayley_file(const std::string& path, const BuildOptions& options = {});
void write_cayley(const FiniteGroup& g, std::ostream& out);

}  // namespace phinil
