#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phinil/finite_group.hpp"
#include "phinil/lattice.hpp"
#include "phinil/subgroup.hpp"

namespace phinil {

// A subgroup re-indexed as a standalone group. Local element i is the
// parent element to_parent[i]; to_parent is ascending, so local 0 is the
// identity.
struct MaterializedSubgroup {
  GroupPtr group;
  std::vector<Element> to_parent;
  // Parent index -> local index, or kNotMember.
  std::vector<Element> to_local;

  static constexpr Element kNotMember = static_cast<Element>(-1);

  // Maps a subgroup of the parent that lies inside this one.
  Subgroup localize(const Subgroup& inner) const;
};

MaterializedSubgroup materialize(const Subgroup& h, const BuildOptions& options = {});

struct Quotient {
  GroupPtr group;
  // Element of H -> coset index (an element of `group`).
  std::vector<Element> coset_of;
  // Least element of each coset.
  std::vector<Element> representatives;
};

// H / N with left cosets aN. Throws NotNormal unless N is normal in H.
Quotient quotient(const GroupPtr& h, const Subgroup& n, const BuildOptions& options = {});

// H/N for a subgroup H of G and N normal in H.
struct Section {
  GroupPtr parent;
  std::size_t h_index = 0;
  std::size_t n_index = 0;
  Subgroup h;
  Subgroup n;
  GroupPtr quotient;
  // Parallel arrays: elements of H (parent indices, ascending) and the coset
  // each one maps to.
  std::vector<Element> h_elements;
  std::vector<Element> coset_of;

  // "H#<i>/N#<j>" using lattice indices.
  std::string id() const;
};

std::string section_id(std::size_t h_index, std::size_t n_index);

// Lazily yields every (H, N) with H in the lattice and N a lattice member
// normal in H, ordered by H index then N index.
class SectionStream {
 public:
  explicit SectionStream(const SubgroupLattice& lattice, BuildOptions options = {});

  std::optional<Section> next();

 private:
  bool advance_to_next_pair();

  const SubgroupLattice* lattice_;
  BuildOptions options_;
  std::size_t h_ = 0;
  std::size_t pos_ = 0;  // position in contained_in(h_)
  bool started_ = false;
  std::optional<MaterializedSubgroup> current_h_;
};

// Convenience: drain a SectionStream.
std::vector<Section> all_sections(const SubgroupLattice& lattice, const BuildOptions& options = {});

}  // namespace phinil
