#include "phinil/sections.hpp"

#include <algorithm>

#include "phinil/errors.hpp"

namespace phinil {

Subgroup MaterializedSubgroup::localize(const Subgroup& inner) const {
  ElementSet members(group->order());
  for (auto x : inner.elements()) {
    const Element local = to_local[x];
    if (local == kNotMember) throw std::invalid_argument("subgroup is not contained in H");
    members.insert(local);
  }
  return Subgroup(group, std::move(members));
}

MaterializedSubgroup materialize(const Subgroup& h, const BuildOptions& options) {
  const GroupPtr parent = h.parent();
  auto to_parent = std::make_shared<const std::vector<Element>>(h.elements());
  auto to_local = std::make_shared<std::vector<Element>>(parent->order(),
                                                         MaterializedSubgroup::kNotMember);
  for (std::size_t i = 0; i < to_parent->size(); ++i) {
    (*to_local)[(*to_parent)[i]] = static_cast<Element>(i);
  }
  std::shared_ptr<const std::vector<Element>> local = to_local;
  auto mul = [parent, to_parent, local](Element a, Element b) -> Element {
    return (*local)[parent->mul((*to_parent)[a], (*to_parent)[b])];
  };
  std::vector<Element> gens;
  for (auto x : h.generators()) gens.push_back((*local)[x]);
  MaterializedSubgroup out;
  out.group = FiniteGroup::from_function("sub(" + parent->name() + ")", to_parent->size(), mul,
                                         std::move(gens), options.table_threshold);
  out.to_parent = *to_parent;
  out.to_local = *local;
  return out;
}

Quotient quotient(const GroupPtr& hp, const Subgroup& n, const BuildOptions& options) {
  const FiniteGroup& H = *hp;
  if (n.parent().get() != hp.get()) {
    throw std::invalid_argument("quotient: N is not a subgroup of H");
  }
  if (!is_normal(H, n)) throw NotNormal("N is not normal in " + H.name());

  const std::size_t size = H.order();
  auto coset_of = std::make_shared<std::vector<Element>>(size, MaterializedSubgroup::kNotMember);
  auto reps = std::make_shared<std::vector<Element>>();
  for (Element x = 0; x < size; ++x) {
    if ((*coset_of)[x] != MaterializedSubgroup::kNotMember) continue;
    const auto c = static_cast<Element>(reps->size());
    reps->push_back(x);
    for (auto y : n.elements()) (*coset_of)[H.mul(x, y)] = c;
  }
  const std::size_t k = reps->size();
  std::shared_ptr<const std::vector<Element>> cc = coset_of;
  std::shared_ptr<const std::vector<Element>> cr = reps;
  auto mul = [hp, cc, cr](Element a, Element b) -> Element {
    return (*cc)[hp->mul((*cr)[a], (*cr)[b])];
  };
  std::vector<Element> gens;
  for (auto g : H.generators()) {
    const Element c = (*coset_of)[g];
    if (c != FiniteGroup::identity() && std::find(gens.begin(), gens.end(), c) == gens.end()) {
      gens.push_back(c);
    }
  }
  Quotient q;
  q.group = FiniteGroup::from_function(H.name() + "/N", k, mul, std::move(gens),
                                       options.table_threshold);
  q.coset_of = *coset_of;
  q.representatives = *reps;
  return q;
}

std::string section_id(std::size_t h_index, std::size_t n_index) {
  return "H#" + std::to_string(h_index) + "/N#" + std::to_string(n_index);
}

std::string Section::id() const { return section_id(h_index, n_index); }

SectionStream::SectionStream(const SubgroupLattice& lattice, BuildOptions options)
    : lattice_(&lattice), options_(options) {}

bool SectionStream::advance_to_next_pair() {
  const auto& lat = *lattice_;
  if (!started_) {
    started_ = true;
    h_ = 0;
    pos_ = 0;
  } else {
    ++pos_;
  }
  while (h_ < lat.size()) {
    const auto& below = lat.contained_in(h_);
    while (pos_ < below.size()) {
      if (is_normal_in(lat[below[pos_]], lat[h_])) return true;
      ++pos_;
    }
    ++h_;
    pos_ = 0;
    current_h_.reset();
  }
  return false;
}

std::optional<Section> SectionStream::next() {
  if (!advance_to_next_pair()) return std::nullopt;
  const auto& lat = *lattice_;
  if (!current_h_) current_h_ = materialize(lat[h_], options_);
  const std::size_t n_index = lat.contained_in(h_)[pos_];

  Section s;
  s.parent = lat.group();
  s.h_index = h_;
  s.n_index = n_index;
  s.h = lat[h_];
  s.n = lat[n_index];
  Quotient q = quotient(current_h_->group, current_h_->localize(s.n), options_);
  s.quotient = q.group;
  s.h_elements = current_h_->to_parent;
  s.coset_of = std::move(q.coset_of);
  return s;
}

std::vector<Section> all_sections(const SubgroupLattice& lattice, const BuildOptions& options) {
  std::vector<Section> out;
  SectionStream stream(lattice, options);
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace phinil
