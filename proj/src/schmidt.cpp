#include "phinil/schmidt.hpp"

#include "phinil/errors.hpp"
#include "phinil/invariants.hpp"
#include "phinil/nilpotency.hpp"
#include "phinil/numeric.hpp"
#include "phinil/sections.hpp"

namespace phinil {

bool SchmidtCertificate::all_passed() const {
  if (checklist.size() != 13) return false;
  for (const auto& [name, ok] : checklist) {
    if (!ok) return false;
  }
  return true;
}

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

}  // namespace

SchmidtCertificate schmidt_certificate(const SubgroupLattice& lattice, const BuildOptions& options,
                                       std::size_t lattice_cap) {
  if (!is_schmidt(lattice)) throw NotSchmidt(lattice.group()->name() + " is not a Schmidt group");

  const GroupPtr& gp = lattice.group();
  const FiniteGroup& G = *gp;
  SchmidtCertificate cert;
  auto record = [&](const char* entry, bool ok, const std::string& detail) {
    cert.checklist.emplace_back(entry, ok);
    if (!ok) throw CertificateFailure(entry, detail);
  };

  const auto primes = factorize(G.order());
  record("a", primes.size() == 2, "order is not divisible by exactly two primes");

  std::size_t p_slot = 2;
  for (std::size_t k = 0; k < 2; ++k) {
    if (sylow_within(lattice, lattice.whole_index(), primes[k].first).size() == 1) {
      p_slot = p_slot == 2 ? k : 3;
    }
  }
  record("b", p_slot < 2, "no single prime with a unique Sylow subgroup");
  cert.p = primes[p_slot].first;
  cert.m = primes[p_slot].second;
  cert.q = primes[1 - p_slot].first;
  cert.n = primes[1 - p_slot].second;
  const std::size_t p_index = sylow_within(lattice, lattice.whole_index(), cert.p).front();
  cert.P = lattice[p_index];

  cert.Q = lattice[sylow_within(lattice, lattice.whole_index(), cert.q).front()];
  bool found_generator = false;
  for (auto x : cert.Q.elements()) {
    if (element_order(G, x) == cert.Q.order()) {
      cert.y = x;
      found_generator = true;
      break;
    }
  }
  record("c", found_generator, "Sylow q-subgroup is not cyclic");

  cert.Z = center(gp);
  const Element yq = G.pow(cert.y, cert.q);
  record("d", cert.Z.contains(yq), "y^q is not central");

  cert.Phi = frattini(lattice);
  record("e", cert.Z == cert.Phi, "Z(G) differs from the Frattini subgroup");

  const Subgroup phi_p = frattini_within(lattice, p_index);
  const Element yq_gen[] = {yq};
  const Subgroup yq_group = Subgroup::generated_by(gp, yq_gen);
  bool commute = true;
  for (auto a : phi_p.elements()) {
    for (auto b : yq_group.elements()) {
      if (G.mul(a, b) != G.mul(b, a)) commute = false;
    }
  }
  const bool trivial_meet = intersect(phi_p, yq_group).order() == 1;
  record("f", trivial_meet && commute && join(phi_p, yq_group) == cert.Z,
         "Z(G) is not the internal direct product of Frattini(P) and <y^q>");

  cert.Gprime = derived_subgroup(gp);
  record("g", cert.Gprime == cert.P, "G' differs from P");

  const Subgroup p_derived = derived_subgroup_of(cert.P);
  record("h", p_derived == phi_p, "P' differs from Frattini(P)");

  cert.r = multiplicative_order(cert.p, cert.q);
  const std::uint64_t p_to_r = ipow(cert.p, cert.r);
  record("i", cert.P.order() / p_derived.order() == p_to_r, "|P/P'| differs from p^r");

  cert.p_abelian = is_abelian(cert.P);
  if (cert.p_abelian) {
    bool elementary = true;
    for (auto x : cert.P.elements()) {
      if (x != FiniteGroup::identity() && element_order(G, x) != cert.p) elementary = false;
    }
    bool minimal_normal = true;
    for (auto k : lattice.contained_in(p_index)) {
      const Subgroup& sub = lattice[k];
      if (sub.order() > 1 && sub.order() < cert.P.order() && sub.normal() == Tri::yes) {
        minimal_normal = false;
      }
    }
    record("j", elementary && cert.P.order() == p_to_r && minimal_normal,
           "abelian P is not elementary abelian of order p^r and minimal normal");
    record("k", true, "");
  } else {
    record("j", true, "");
    const Subgroup zp = center_of(cert.P);
    record("k", zp == p_derived && p_derived == phi_p && cert.P.order() / zp.order() == p_to_r,
           "non-abelian P fails Z(P) = P' = Frattini(P) with |P/Z(P)| = p^r");
  }

  Quotient s = quotient(gp, cert.Z, options);
  cert.quotient_S = s.group;
  const auto s_profile = profile(*s.group);
  record("l",
         s_profile.order == p_to_r * cert.q && s_profile.exponent == cert.p * cert.q &&
             s_profile.phi == 0,
         "G/Z(G) does not have order p^r q, exponent pq and phi = 0");

  auto image = [&](const Subgroup& h) {
    ElementSet members(s.group->order());
    for (auto x : h.elements()) members.insert(s.coset_of[x]);
    return Subgroup(s.group, std::move(members));
  };
  cert.P1 = image(cert.P);
  cert.Q1 = image(cert.Q);
  const SubgroupLattice s_lattice = all_subgroups(s.group, lattice_cap);
  cert.quotient_subgroup_count = s_lattice.size();
  record("m", verify_schmidt_lattice(s_lattice, cert.P1, cert.Q1),
         "lattice of G/Z(G) does not decompose as L(P1) u {Q1^x} u {S}");
  return cert;
}

}  // namespace phinil
