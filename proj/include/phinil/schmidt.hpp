#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "phinil/finite_group.hpp"
#include "phinil/lattice.hpp"
#include "phinil/subgroup.hpp"

namespace phinil {

// Structure record for a minimal non-nilpotent group G of order p^m q^n
// with normal Sylow p-subgroup P and cyclic Sylow q-subgroup Q = <y>.
//
// Checklist entries, in order:
//   a  |G| = p^m q^n for two distinct primes
//   b  unique Sylow p-subgroup P
//   c  Sylow q-subgroup Q cyclic, generated by y
//   d  y^q in Z(G)
//   e  Z(G) = Frattini(G)
//   f  Z(G) = Frattini(P) x <y^q> (trivial intersection, commuting, generating)
//   g  G' = P
//   h  P' = Frattini(P)
//   i  |P/P'| = p^r with r the order of p mod q
//   j  P abelian => P elementary abelian of order p^r and minimal normal
//   k  P non-abelian => Z(P) = P' = Frattini(P) and |P/Z(P)| = p^r
//   l  S = G/Z(G) has order p^r q, exponent pq and phi(S) = 0
//   m  L(S) = L(P1) u {Q1^x} u {S} with P1, Q1 the images of P, Q
struct SchmidtCertificate {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned m = 0;
  unsigned n = 0;
  unsigned r = 0;
  Subgroup P;
  Subgroup Q;
  Element y = 0;
  Subgroup Z;
  Subgroup Phi;
  Subgroup Gprime;
  bool p_abelian = false;
  std::vector<std::pair<std::string, bool>> checklist;
  GroupPtr quotient_S;
  Subgroup P1;
  Subgroup Q1;
  std::size_t quotient_subgroup_count = 0;

  bool all_passed() const;
};

// Throws NotSchmidt if the lattice's group is not a Schmidt group and
// CertificateFailure naming the first failing entry otherwise.
SchmidtCertificate schmidt_certificate(const SubgroupLattice& lattice,
                                       const BuildOptions& options = {},
                                       std::size_t lattice_cap = kDefaultLatticeCap);

}  // namespace phinil
