#include "phinil/build.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_map>

#include "phinil/errors.hpp"

namespace phinil {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_cap(std::size_t n, const BuildOptions& options) {
  if (n > options.cap) {
    throw CapExceeded("group order " + std::to_string(n) + " exceeds enumeration cap " +
                      std::to_string(options.cap));
  }
}

GroupPtr from_perm_gens(std::string name, std::size_t degree, std::vector<Permutation> gens,
                        const BuildOptions& options) {
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  auto elements = close_generators(gens, options.cap);
  std::unordered_map<Permutation, Element, PermutationHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<Element>(i));
  std::vector<Element> gen_idx;
  for (const auto& p : gens) {
    const Element idx = index.at(p);
    if (idx != FiniteGroup::identity() &&
        std::find(gen_idx.begin(), gen_idx.end(), idx) == gen_idx.end()) {
      gen_idx.push_back(idx);
    }
  }
  return FiniteGroup::from_permutations(std::move(name), std::move(elements), std::move(gen_idx),
                                        options.table_threshold);
}

// Extends generator images to a map on all of `g`, requiring
// f(x s) = f(x) * step(s) along every edge of the Cayley graph. Returns an
// empty vector if the assignment is inconsistent.
template <typename Image, typename Compose>
std::vector<Image> extend_along_generators(const FiniteGroup& g, const Image& identity_image,
                                           const std::vector<Image>& gen_images, Compose compose) {
  const auto& gens = g.generators();
  std::vector<Image> image(g.order());
  std::vector<bool> assigned(g.order(), false);
  image[0] = identity_image;
  assigned[0] = true;
  std::queue<Element> todo;
  todo.push(FiniteGroup::identity());
  while (!todo.empty()) {
    const Element x = todo.front();
    todo.pop();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = g.mul(x, gens[i]);
      Image candidate = compose(image[x], gen_images[i]);
      if (!assigned[y]) {
        image[y] = std::move(candidate);
        assigned[y] = true;
        todo.push(y);
      } else if (image[y] != candidate) {
        return {};
      }
    }
  }
  return image;
}

}  // namespace

std::vector<Permutation> close_generators(std::span<const Permutation> gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("close_generators needs at least one generator");
  const std::size_t degree = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generators differ in degree");
  }
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<Permutation, Element, PermutationHash> seen;
  seen.emplace(elements.front(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = elements[i] * g;
      if (seen.contains(next)) continue;
      if (elements.size() >= cap) {
        throw CapExceeded("permutation closure exceeds cap " + std::to_string(cap));
      }
      seen.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

GroupPtr cyclic_group(unsigned n, const BuildOptions& options) {
  if (n < 1) throw InvalidSpec("C(n) requires n >= 1");
  check_cap(n, options);
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  }
  std::vector<Element> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup::from_table("C(" + std::to_string(n) + ")", n, std::move(table),
                                 std::move(gens));
}

GroupPtr dihedral_group(unsigned order, const BuildOptions& options) {
  if (order < 2 || order % 2 != 0) throw InvalidSpec("D(m) requires m even and >= 2");
  check_cap(order, options);
  const unsigned m = order / 2;
  // r^i s^a has index i + m a; (r^i s^a)(r^j s^b) = r^(i + (-1)^a j) s^(a+b).
  auto mul = [m](Element x, Element y) -> Element {
    const unsigned i = x % m, a = x / m, j = y % m, b = y / m;
    const unsigned rot = a == 0 ? (i + j) % m : (i + m - j) % m;
    return static_cast<Element>(rot + m * ((a + b) % 2));
  };
  std::vector<Element> gens;
  if (m > 1) gens.push_back(1);
  gens.push_back(m);
  return FiniteGroup::from_function("D(" + std::to_string(order) + ")", order, mul,
                                    std::move(gens), options.table_threshold);
}

GroupPtr symmetric_group(unsigned n, const BuildOptions& options) {
  if (n < 1) throw InvalidSpec("S(n) requires n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Permutation::Point> cycle(n);
    for (unsigned i = 0; i < n; ++i) cycle[i] = static_cast<Permutation::Point>((i + 1) % n);
    if (n >= 3) gens.emplace_back(std::move(cycle));
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  }
  return from_perm_gens("S(" + std::to_string(n) + ")", n, std::move(gens), options);
}

GroupPtr alternating_group(unsigned n, const BuildOptions& options) {
  if (n < 1) throw InvalidSpec("A(n) requires n >= 1");
  std::vector<Permutation> gens;
  for (unsigned i = 2; i < n; ++i) {
    std::vector<Permutation::Point> images(n);
    for (unsigned k = 0; k < n; ++k) images[k] = static_cast<Permutation::Point>(k);
    images[0] = 1;
    images[1] = static_cast<Permutation::Point>(i);
    images[i] = 0;
    gens.emplace_back(std::move(images));
  }
  return from_perm_gens("A(" + std::to_string(n) + ")", n, std::move(gens), options);
}

GroupPtr extraspecial_group(unsigned p, const BuildOptions& options) {
  if (p < 2) throw InvalidSpec("E(p^3) requires p prime");
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InvalidSpec("E(p^3) requires p prime");
  }
  const std::size_t n = static_cast<std::size_t>(p) * p * p;
  check_cap(n, options);
  // (a,b,c) has index a + p b + p^2 c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  auto mul = [p](Element x, Element y) -> Element {
    const unsigned a = x % p, b = (x / p) % p, c = x / (p * p);
    const unsigned a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
    return static_cast<Element>((a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p));
  };
  auto g = std::const_pointer_cast<FiniteGroup>(FiniteGroup::from_function(
      "E(" + std::to_string(p) + "^3)", n, mul, {1, p}, options.table_threshold));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + std::to_string(x % p) + "," + std::to_string((x / p) % p) + "," +
                std::to_string(x / (static_cast<std::size_t>(p) * p)) + ")";
  }
  g->set_labels(std::move(labels));
  return g;
}

GroupPtr group375(const BuildOptions& options) {
  auto e = extraspecial_group(5, options);
  auto c3 = cyclic_group(3, options);
  return semidirect_product(e, c3, resolve_action("rot3", *e, *c3), options, "G375");
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const BuildOptions& options,
                        std::string name) {
  const std::size_t na = a->order(), nb = b->order();
  check_cap(na * nb, options);
  if (name.empty()) name = "prod(" + a->name() + ", " + b->name() + ")";
  auto mul = [a, b, na](Element x, Element y) -> Element {
    return static_cast<Element>(a->mul(x % na, y % na) + na * b->mul(x / na, y / na));
  };
  std::vector<Element> gens;
  for (auto x : a->generators()) gens.push_back(x);
  for (auto y : b->generators()) gens.push_back(static_cast<Element>(na * y));
  return FiniteGroup::from_function(std::move(name), na * nb, mul, std::move(gens),
                                    options.table_threshold);
}

GroupPtr semidirect_product(const GroupPtr& normal, const GroupPtr& acting,
                            const ActionSpec& action, const BuildOptions& options,
                            std::string name) {
  const FiniteGroup& N = *normal;
  const FiniteGroup& H = *acting;
  const std::size_t nn = N.order(), nh = H.order();
  if (action.images.size() != H.generators().size()) {
    throw InvalidAction("action must give one map per acting generator");
  }
  using Map = std::vector<Element>;
  Map id(nn);
  for (std::size_t i = 0; i < nn; ++i) id[i] = static_cast<Element>(i);

  // Each generator map must extend to an automorphism of N.
  std::vector<Map> automorphisms;
  for (const auto& imgs : action.images) {
    if (imgs.size() != N.generators().size()) {
      throw InvalidAction("action map must give one image per normal generator");
    }
    for (auto v : imgs) {
      if (v >= nn) throw InvalidAction("action image out of range");
    }
    auto extended = extend_along_generators<Element>(
        N, FiniteGroup::identity(), imgs, [&](Element acc, Element s) { return N.mul(acc, s); });
    if (extended.empty()) throw InvalidAction("action map does not extend to a homomorphism");
    ElementSet image(nn);
    for (auto v : extended) image.insert(v);
    if (image.count() != nn) throw InvalidAction("action map is not bijective");
    automorphisms.push_back(std::move(extended));
  }

  // act[h h'] = act[h] o act[h'] along every edge of H's Cayley graph.
  auto acts = extend_along_generators<Map>(H, id, automorphisms, [&](const Map& f, const Map& t) {
    Map out(nn);
    for (std::size_t x = 0; x < nn; ++x) out[x] = f[t[x]];
    return out;
  });
  if (acts.empty()) throw InvalidAction("action does not respect the acting group's relations");

  check_cap(nn * nh, options);
  if (name.empty()) name = "semi(" + N.name() + ", " + H.name() + ")";
  auto act = std::make_shared<const std::vector<Map>>(std::move(acts));
  auto mul = [normal, acting, act, nn](Element x, Element y) -> Element {
    const Element n1 = x % nn, h1 = x / nn, n2 = y % nn, h2 = y / nn;
    return static_cast<Element>(normal->mul(n1, (*act)[h1][n2]) + nn * acting->mul(h1, h2));
  };
  std::vector<Element> gens;
  for (auto s : N.generators()) gens.push_back(s);
  for (auto t : H.generators()) gens.push_back(static_cast<Element>(nn * t));
  return FiniteGroup::from_function(std::move(name), nn * nh, mul, std::move(gens),
                                    options.table_threshold);
}

ActionSpec resolve_action(const std::string& name, const FiniteGroup& normal,
                          const FiniteGroup& acting) {
  const auto& ngens = normal.generators();
  std::vector<Element> images;
  if (name == "trivial") {
    images = ngens;
  } else if (name == "rot3") {
    if (ngens.size() != 2) throw InvalidAction("rot3 needs a normal subgroup with two generators");
    images = {ngens[1], normal.mul(normal.inv(ngens[0]), normal.inv(ngens[1]))};
  } else if (name.rfind("pow", 0) == 0 && name.size() > 3) {
    std::uint64_t k = 0;
    for (std::size_t i = 3; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') throw InvalidAction("unknown action '" + name + "'");
      k = k * 10 + static_cast<std::uint64_t>(name[i] - '0');
    }
    for (auto g : ngens) images.push_back(normal.pow(g, k));
  } else {
    throw InvalidAction("unknown action '" + name + "'");
  }
  return ActionSpec{std::vector<std::vector<Element>>(acting.generators().size(), images)};
}

Element commutator(const FiniteGroup& g, Element x, Element y) {
  return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
}

void verify_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) {
      throw AxiomViolation("element 0 is not an identity for element " + std::to_string(x));
    }
    if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0) {
      throw AxiomViolation("element " + std::to_string(x) + " has no inverse");
    }
    for (Element y = 0; y < n; ++y) {
      if (g.mul(x, y) >= n) {
        throw AxiomViolation("product " + std::to_string(x) + "*" + std::to_string(y) +
                             " out of range");
      }
    }
  }
  auto check = [&](Element a, Element b, Element c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
      throw AxiomViolation("associativity fails for (" + std::to_string(a) + ", " +
                           std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  };
  if (n <= 200) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) check(a, b, c);
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    const std::size_t samples = 10 * n * n;
    for (std::size_t i = 0; i < samples; ++i) check(pick(rng), pick(rng), pick(rng));
  }
}

GroupPtr read_cayley(std::istream& in, std::string name, const BuildOptions& options) {
  std::vector<long long> values;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        values.push_back(v);
      } catch (const std::exception&) {
        throw InvalidSpec("Cayley table: bad token '" + tok + "'");
      }
    }
  }
  if (values.empty() || values[0] < 1) throw InvalidSpec("Cayley table: missing or bad order");
  const auto n = static_cast<std::size_t>(values[0]);
  check_cap(n, options);
  if (values.size() != 1 + n * n) {
    throw InvalidSpec("Cayley table: expected " + std::to_string(n * n) + " entries, found " +
                      std::to_string(values.size() - 1));
  }
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const long long v = values[i + 1];
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw AxiomViolation("Cayley table: entry " + std::to_string(v) + " out of range");
    }
    table[i] = static_cast<Element>(v);
  }
  // Every row and column of a group table is a permutation.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (row[table[i * n + j]] || col[table[j * n + i]]) {
        throw AxiomViolation("Cayley table: row or column " + std::to_string(i) +
                             " repeats an element");
      }
      row[table[i * n + j]] = true;
      col[table[j * n + i]] = true;
    }
    if (table[i] != i || table[i * n] != i) {
      throw AxiomViolation("Cayley table: element 0 is not the identity");
    }
  }
  auto g = FiniteGroup::from_table(std::move(name), n, std::move(table));
  verify_axioms(*g);
  return g;
}

GroupPtr read_cayley_file(const std::string& path, const BuildOptions& options) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open Cayley file '" + path + "'");
  return read_cayley(in, "file(" + path + ")", options);
}

void write_cayley(const FiniteGroup& g, std::ostream& out) {
  const std::size_t n = g.order();
  out << "# " << g.name() << "\n" << n << "\n";
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
}

GroupPtr build_group(const GroupSpec& spec, const BuildOptions& options) {
  validate(spec);
  GroupPtr g = std::visit(
      Overloaded{
          [&](const CyclicSpec& s) { return cyclic_group(s.n, options); },
          [&](const DihedralSpec& s) { return dihedral_group(s.order, options); },
          [&](const SymmetricSpec& s) { return symmetric_group(s.n, options); },
          [&](const AlternatingSpec& s) { return alternating_group(s.n, options); },
          [&](const ExtraspecialSpec& s) { return extraspecial_group(s.p, options); },
          [&](const Group375Spec&) { return group375(options); },
          [&](const DirectProductSpec& s) {
            return direct_product(build_group(*s.left, options), build_group(*s.right, options),
                                  options, to_string(spec));
          },
          [&](const SemidirectSpec& s) {
            auto n = build_group(*s.normal, options);
            auto h = build_group(*s.acting, options);
            return semidirect_product(n, h, resolve_action(s.action, *n, *h), options,
                                      to_string(spec));
          },
          [&](const CayleyFileSpec& s) { return read_cayley_file(s.path, options); },
      },
      spec.node);
  return g;
}

}  // namespace phinil
