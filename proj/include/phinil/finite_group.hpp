#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "phinil/element_set.hpp"
#include "phinil/permutation.hpp"

namespace phinil {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr std::size_t kDefaultCap = 5000;
inline constexpr std::size_t kDefaultTableThreshold = 512;

struct BuildOptions {
  // Maximum number of elements any constructed group may have.
  std::size_t cap = kDefaultCap;
  // Groups up to this order store an explicit multiplication table.
  std::size_t table_threshold = kDefaultTableThreshold;
};

// A fully enumerated finite group. Elements are the indices 0..n-1 and the
// identity is always element 0. Immutable once constructed.
class FiniteGroup {
 public:
  using MulFn = std::function<Element(Element, Element)>;

  // `table` is row-major: table[a * n + b] = a * b. The table is trusted here;
  // use verify_axioms() for untrusted input. Empty `gens` means "compute".
  static GroupPtr from_table(std::string name, std::size_t n, std::vector<Element> table,
                             std::vector<Element> gens = {});
  // Multiplication given as a function; materialized into a table when
  // n <= table_threshold.
  static GroupPtr from_function(std::string name, std::size_t n, MulFn mul,
                                std::vector<Element> gens = {},
                                std::size_t table_threshold = kDefaultTableThreshold);
  // `elements` must be closed under composition with the identity first.
  static GroupPtr from_permutations(std::string name, std::vector<Permutation> elements,
                                    std::vector<Element> gens = {},
                                    std::size_t table_threshold = kDefaultTableThreshold);

  std::size_t order() const noexcept { return n_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const {
    return table_.empty() ? mul_fn_(a, b) : table_[static_cast<std::size_t>(a) * n_ + b];
  }
  Element inv(Element a) const { return inverse_[a]; }
  Element pow(Element a, std::uint64_t k) const;

  const std::vector<Element>& generators() const noexcept { return generators_; }
  const std::string& name() const noexcept { return name_; }

  bool is_table_backed() const noexcept { return !table_.empty() || n_ == 0; }
  bool has_permutations() const noexcept { return !perms_.empty(); }
  const std::vector<Permutation>& permutations() const noexcept { return perms_; }
  std::optional<Element> index_of(const Permutation& p) const;

  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
  std::string label(Element x) const;

 private:
  FiniteGroup() = default;
  void finish(std::vector<Element> gens);

  std::string name_;
  std::size_t n_ = 0;
  std::vector<Element> table_;
  MulFn mul_fn_;
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
  std::vector<Permutation> perms_;
  std::shared_ptr<const std::unordered_map<Permutation, Element, PermutationHash>> perm_index_;
  std::vector<std::string> labels_;
};

// Smallest subset closed under multiplication containing `gens` and the
// identity. Uses right multiplication by generators.
ElementSet close(const FiniteGroup& g, std::span<const Element> gens);

// <H, extra...> where H is a subgroup given by its member set and generators.
// The result is assembled as a union of left cosets of H.
ElementSet join(const FiniteGroup& g, const ElementSet& h_members,
                std::span<const Element> h_generators, std::span<const Element> extra);

// Deterministic small generating set for the subgroup with the given members:
// walk members ascending, keep each one not already generated.
std::vector<Element> greedy_generators(const FiniteGroup& g, const ElementSet& members);

}  // namespace phinil
