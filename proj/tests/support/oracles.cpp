#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::set<std::vector<Element>> all_subgroups_by_subsets(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 24) throw std::invalid_argument("subset oracle limited to order 24");
  std::set<std::vector<Element>> out;
  // Masks over the non-identity elements 1..n-1.
  const std::uint32_t others = static_cast<std::uint32_t>(n - 1);
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const std::size_t pick = d - 1;
    // Gosper's hack over masks with `pick` bits among `others`.
    if (pick == 0) {
      out.insert({0});
      continue;
    }
    std::uint32_t mask = (1u << pick) - 1;
    const std::uint32_t limit = 1u << others;
    while (mask < limit) {
      const std::uint32_t full = (mask << 1) | 1u;  // bit 0 = identity
      bool closed = true;
      for (std::size_t a = 0; a < n && closed; ++a) {
        if (!(full >> a & 1u)) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (!(full >> b & 1u)) continue;
          if (!(full >> g.mul(static_cast<Element>(a), static_cast<Element>(b)) & 1u)) {
            closed = false;
            break;
          }
        }
      }
      if (closed) {
        std::vector<Element> elems;
        for (std::size_t a = 0; a < n; ++a) {
          if (full >> a & 1u) elems.push_back(static_cast<Element>(a));
        }
        out.insert(std::move(elems));
      }
      const std::uint32_t c = mask & (~mask + 1);
      const std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return out;
}

std::set<phinil::Permutation> naive_closure(const std::vector<phinil::Permutation>& gens) {
  std::set<phinil::Permutation> set(gens.begin(), gens.end());
  set.insert(phinil::Permutation::identity(gens.front().degree()));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<phinil::Permutation> snapshot(set.begin(), set.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) grew |= set.insert(a * b).second;
    }
  }
  return set;
}

std::uint64_t order_by_steps(const FiniteGroup& g, Element x) {
  Element cur = x;
  std::uint64_t k = 1;
  while (cur != 0) {
    cur = g.mul(cur, x);
    ++k;
  }
  return k;
}

std::uint64_t phi_z6_times_s3() {
  std::vector<std::array<int, 3>> s3;
  std::array<int, 3> p{0, 1, 2};
  do {
    s3.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto perm_order = [](std::array<int, 3> q) {
    std::array<int, 3> cur = q;
    std::uint64_t k = 1;
    while (!(cur[0] == 0 && cur[1] == 1 && cur[2] == 2)) {
      std::array<int, 3> next{};
      for (int i = 0; i < 3; ++i) next[i] = q[cur[i]];
      cur = next;
      ++k;
    }
    return k;
  };
  std::vector<std::uint64_t> orders;
  for (int a = 0; a < 6; ++a) {
    const std::uint64_t oa = static_cast<std::uint64_t>(6 / std::gcd(a, 6));
    for (const auto& q : s3) orders.push_back(std::lcm(oa, perm_order(q)));
  }
  std::uint64_t exp = 1;
  for (auto o : orders) exp = std::lcm(exp, o);
  return static_cast<std::uint64_t>(std::count(orders.begin(), orders.end(), exp));
}

bool normal_by_all_conjugations(const FiniteGroup& g, const std::vector<Element>& h) {
  std::set<Element> hs(h.begin(), h.end());
  for (Element x = 0; x < g.order(); ++x) {
    for (auto y : h) {
      if (!hs.contains(g.mul(g.mul(x, y), g.inv(x)))) return false;
    }
  }
  return true;
}

std::size_t count_sections(const FiniteGroup& g) {
  const auto subs = all_subgroups_by_subsets(g);
  std::size_t count = 0;
  for (const auto& h : subs) {
    std::set<Element> hs(h.begin(), h.end());
    for (const auto& n : subs) {
      std::set<Element> ns(n.begin(), n.end());
      if (!std::includes(hs.begin(), hs.end(), ns.begin(), ns.end())) continue;
      bool normal = true;
      for (auto x : h) {
        for (auto y : n) {
          if (!ns.contains(g.mul(g.mul(x, y), g.inv(x)))) normal = false;
        }
      }
      if (normal) ++count;
    }
  }
  return count;
}

std::vector<Element> center_by_pairs(const FiniteGroup& g) {
  std::vector<Element> out;
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element x = 0; x < g.order(); ++x) {
      if (g.mul(z, x) != g.mul(x, z)) central = false;
    }
    if (central) out.push_back(z);
  }
  return out;
}

}  // namespace oracle
