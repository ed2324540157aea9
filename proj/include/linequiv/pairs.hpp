#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linequiv/gset.hpp"
#include "linequiv/subgroups.hpp"

namespace linequiv {

enum class Construction { ElementaryAbelian, Metacyclic, InducedFrom, InflatedFrom, KernelSearch };

const char* to_string(Construction c);

struct ProvenanceStep {
  Construction kind;
  std::string detail;
};

// Linearly equivalent G-sets with different orbit-size multisets.
struct UnbalancedPair {
  GSet x;
  GSet y;
  std::vector<ProvenanceStep> provenance;  // base construction first, then lifts in order
};

// Checks both defining properties directly from fixed points and orbits.
bool is_verified_unbalanced(const GSet& x, const GSet& y);

// Result of building the (Z/n)^2 line construction; equivalent only for prime n.
struct CandidatePair {
  GSet x;
  GSet y;
  bool linearly_equivalent = false;
  bool unbalanced = false;
};

// X = union of G/H_l over the n+1 "lines" H_l = {(t, l t)} and H_inf = {(0, t)} of
// Z/n x Z/n, Y = n copies of the point plus the regular set. Built over P(C(n),C(n)).
CandidatePair elementary_abelian_analogue(long n);

// The above for a prime p, verified. Throws InvalidArgument when p is not prime.
UnbalancedPair pair_elementary_abelian(long p);

// X = p copies of G/P plus G/Q, Y = p points plus the regular set, over the
// nonabelian group Z/q x| Z/p. Throws InvalidArgument unless p, q prime and q = 1 mod p.
UnbalancedPair pair_metacyclic(long p, long q);

struct Classification {
  enum class Kind { ElementaryAbelianRank2, NonabelianPQ } kind;
  long p = 0;  // the prime of Z/p x Z/p, or the smaller prime of pq
  long q = 0;  // the larger prime for pq, 0 otherwise
};

// Z/p x Z/p or nonabelian of order pq, recognized by order, commutativity and element orders.
std::optional<Classification> recognize_elementary_or_pq(const Group& g);

// The two base constructions on any group recognized as above.
UnbalancedPair base_pair(const Group& g);

UnbalancedPair lift_by_induction(const SubgroupEmbedding& emb, const UnbalancedPair& pair);
UnbalancedPair lift_by_inflation(const Quotient& q, const UnbalancedPair& pair);

// Structural search following the non-cyclic Sylow / metacyclic descent. nullopt iff cyclic.
std::optional<UnbalancedPair> find_unbalanced_pair(const Group& g);

// Any unbalanced kernel basis vector, realized as a reduced pair.
std::optional<UnbalancedPair> unbalanced_pair_from_kernel(const SubgroupLattice& lattice);

}  // namespace linequiv
