#include "phinil/finite_group.hpp"

#include "phinil/errors.hpp"

namespace phinil {

GroupPtr FiniteGroup::from_table(std::string name, std::size_t n, std::vector<Element> table,
                                 std::vector<Element> gens) {
  if (n == 0 || table.size() != n * n) {
    throw InvalidSpec("multiplication table has wrong size");
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->n_ = n;
  g->table_ = std::move(table);
  g->finish(std::move(gens));
  return g;
}

GroupPtr FiniteGroup::from_function(std::string name, std::size_t n, MulFn mul,
                                    std::vector<Element> gens, std::size_t table_threshold) {
  if (n == 0) throw InvalidSpec("group order must be positive");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->n_ = n;
  if (n <= table_threshold) {
    g->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        g->table_[a * n + b] = mul(static_cast<Element>(a), static_cast<Element>(b));
      }
    }
  } else {
    g->mul_fn_ = std::move(mul);
  }
  g->finish(std::move(gens));
  return g;
}

GroupPtr FiniteGroup::from_permutations(std::string name, std::vector<Permutation> elements,
                                        std::vector<Element> gens, std::size_t table_threshold) {
  if (elements.empty() || !elements.front().is_identity()) {
    throw InvalidSpec("permutation list must start with the identity");
  }
  auto index = std::make_shared<std::unordered_map<Permutation, Element, PermutationHash>>();
  index->reserve(elements.size() * 2);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index->emplace(elements[i], static_cast<Element>(i)).second) {
      throw InvalidSpec("duplicate permutation in element list");
    }
  }
  auto perms = std::make_shared<const std::vector<Permutation>>(std::move(elements));
  std::shared_ptr<const std::unordered_map<Permutation, Element, PermutationHash>> cindex = index;
  MulFn mul = [perms, cindex](Element a, Element b) -> Element {
    auto it = cindex->find((*perms)[a] * (*perms)[b]);
    if (it == cindex->end()) throw AxiomViolation("permutation set is not closed");
    return it->second;
  };
  const std::size_t n = perms->size();
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->n_ = n;
  g->perms_ = *perms;
  g->perm_index_ = cindex;
  if (n <= table_threshold) {
    g->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        g->table_[a * n + b] = mul(static_cast<Element>(a), static_cast<Element>(b));
      }
    }
  } else {
    g->mul_fn_ = std::move(mul);
  }
  g->finish(std::move(gens));
  return g;
}

void FiniteGroup::finish(std::vector<Element> gens) {
  inverse_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    const auto x = static_cast<Element>(a);
    Element prev = identity();
    Element cur = x;
    std::size_t steps = 0;
    while (cur != identity()) {
      prev = cur;
      cur = mul(cur, x);
      if (++steps > n_) throw AxiomViolation("element " + std::to_string(a) + " has no finite order");
    }
    inverse_[a] = prev;
  }
  for (auto x : gens) {
    if (x >= n_) throw InvalidSpec("generator index out of range");
  }
  if (gens.empty() && n_ > 1) {
    generators_ = greedy_generators(*this, ElementSet::full(n_));
  } else {
    generators_ = std::move(gens);
  }
}

Element FiniteGroup::pow(Element a, std::uint64_t k) const {
  Element result = identity();
  Element base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Element> FiniteGroup::index_of(const Permutation& p) const {
  if (!perm_index_) return std::nullopt;
  auto it = perm_index_->find(p);
  if (it == perm_index_->end()) return std::nullopt;
  return it->second;
}

std::string FiniteGroup::label(Element x) const {
  if (x < labels_.size()) return labels_[x];
  if (!perms_.empty()) return perms_[x].to_cycle_string();
  return "#" + std::to_string(x);
}

ElementSet close(const FiniteGroup& g, std::span<const Element> gens) {
  ElementSet trivial(g.order());
  trivial.insert(FiniteGroup::identity());
  return join(g, trivial, {}, gens);
}

ElementSet join(const FiniteGroup& g, const ElementSet& h_members,
                std::span<const Element> h_generators, std::span<const Element> extra) {
  const std::vector<Element> h_elems = h_members.to_vector();
  std::vector<Element> gens(h_generators.begin(), h_generators.end());
  for (auto x : extra) {
    if (!h_members.contains(x)) gens.push_back(x);
  }
  ElementSet result = h_members;
  if (gens.size() == h_generators.size()) return result;

  // result is a union of left cosets tH; close it under left multiplication
  // by the generators, one coset representative at a time.
  std::vector<Element> reps{FiniteGroup::identity()};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Element r = reps[i];
    for (auto s : gens) {
      const Element t = g.mul(s, r);
      if (result.contains(t)) continue;
      for (auto h : h_elems) result.insert(g.mul(t, h));
      reps.push_back(t);
    }
  }
  return result;
}

std::vector<Element> greedy_generators(const FiniteGroup& g, const ElementSet& members) {
  std::vector<Element> gens;
  ElementSet current(g.order());
  current.insert(FiniteGroup::identity());
  members.for_each([&](Element x) {
    if (current.contains(x)) return;
    const Element extra[] = {x};
    current = join(g, current, gens, extra);
    gens.push_back(x);
  });
  return gens;
}

}  // namespace phinil
