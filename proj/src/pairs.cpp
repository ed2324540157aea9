#include "linequiv/pairs.hpp"

#include <algorithm>

#include "linequiv/burnside.hpp"
#include "linequiv/errors.hpp"

namespace linequiv {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long smallest_prime_factor(long n) {
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long d = 2; d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  return out;
}

long powmod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  for (; e > 0; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

void require_verified(const GSet& x, const GSet& y, const char* where) {
  if (!is_verified_unbalanced(x, y))
    throw VerificationFailure(std::string(where) + ": result is not an unbalanced pair");
}

GSet points_and_regular(const Group& g, std::size_t points) {
  return disjoint_union(repeat(one_point(g), points), regular_gset(g));
}

}  // namespace

const char* to_string(Construction c) {
  switch (c) {
    case Construction::ElementaryAbelian: return "ElementaryAbelian";
    case Construction::Metacyclic: return "Metacyclic";
    case Construction::InducedFrom: return "InducedFrom";
    case Construction::InflatedFrom: return "InflatedFrom";
    case Construction::KernelSearch: return "KernelSearch";
  }
  return "?";
}

bool is_verified_unbalanced(const GSet& x, const GSet& y) {
  return linearly_equivalent(x, y) && orbit_sizes(x) != orbit_sizes(y);
}

CandidatePair elementary_abelian_analogue(long n) {
  if (n < 2) throw InvalidArgument("need n >= 2");
  GroupPtr g = construct(GroupSpec::product(GroupSpec::cyclic(n), GroupSpec::cyclic(n)));
  Element a = g->generators().at(0), b = g->generators().at(1);
  auto coords = [&](long s, long t) { return g->product(g->power(a, s), g->power(b, t)); };

  GSet x = empty_gset(*g);
  for (long lambda = 0; lambda < n; ++lambda) {
    Element gen[] = {coords(1, lambda)};
    x = disjoint_union(x, coset_space(*g, generate_subgroup(*g, gen)));
  }
  Element inf[] = {coords(0, 1)};
  x = disjoint_union(x, coset_space(*g, generate_subgroup(*g, inf)));
  GSet y = points_and_regular(*g, static_cast<std::size_t>(n));
  CandidatePair out{x, y, linearly_equivalent(x, y), orbit_sizes(x) != orbit_sizes(y)};
  return out;
}

UnbalancedPair pair_elementary_abelian(long p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  CandidatePair c = elementary_abelian_analogue(p);
  require_verified(c.x, c.y, "pair_elementary_abelian");
  return {c.x, c.y, {{Construction::ElementaryAbelian, "Z/" + std::to_string(p) + " x Z/" + std::to_string(p)}}};
}

UnbalancedPair pair_metacyclic(long p, long q) {
  if (!is_prime(p) || !is_prime(q)) throw InvalidArgument("p and q must be prime");
  if (q % p != 1) throw InvalidArgument("need q = 1 mod p");
  long r = 2;
  while (powmod(r, p, q) != 1) ++r;  // an element of order p in (Z/q)^*
  GroupPtr g = construct(GroupSpec::metacyclic(q, p, r));
  Element a[] = {g->generators().at(0)};
  Element b[] = {g->generators().at(1)};
  GSet x = disjoint_union(repeat(coset_space(*g, generate_subgroup(*g, b)), static_cast<std::size_t>(p)),
                          coset_space(*g, generate_subgroup(*g, a)));
  GSet y = points_and_regular(*g, static_cast<std::size_t>(p));
  require_verified(x, y, "pair_metacyclic");
  return {x, y,
          {{Construction::Metacyclic, "Z/" + std::to_string(q) + " x| Z/" + std::to_string(p) + " as M(" +
                                          std::to_string(q) + "," + std::to_string(p) + "," + std::to_string(r) + ")"}}};
}

std::optional<Classification> recognize_elementary_or_pq(const Group& g) {
  auto n = static_cast<long>(g.order());
  if (n < 4) return std::nullopt;
  long p = smallest_prime_factor(n);
  long rest = n / p;
  if (rest == p && g.is_abelian() && !g.is_cyclic())
    return Classification{Classification::Kind::ElementaryAbelianRank2, p, 0};
  if (rest != p && is_prime(rest) && !g.is_abelian())
    return Classification{Classification::Kind::NonabelianPQ, p, rest};
  return std::nullopt;
}

UnbalancedPair base_pair(const Group& g) {
  auto cls = recognize_elementary_or_pq(g);
  if (!cls) throw InvalidArgument("group is neither Z/p x Z/p nor nonabelian of order pq");
  const auto p = static_cast<std::size_t>(cls->p);
  if (cls->kind == Classification::Kind::ElementaryAbelianRank2) {
    std::vector<Subgroup> lines;
    for (Element e = 1; e < g.order(); ++e) {
      Element gen[] = {e};
      Subgroup h = generate_subgroup(g, gen);
      if (std::find(lines.begin(), lines.end(), h) == lines.end()) lines.push_back(std::move(h));
    }
    std::sort(lines.begin(), lines.end(), canonical_less);
    if (lines.size() != p + 1) throw VerificationFailure("expected p+1 subgroups of order p");
    GSet x = empty_gset(g);
    for (const auto& h : lines) x = disjoint_union(x, coset_space(g, h));
    GSet y = points_and_regular(g, p);
    require_verified(x, y, "base_pair");
    return {x, y, {{Construction::ElementaryAbelian, "Z/" + std::to_string(p) + " x Z/" + std::to_string(p)}}};
  }
  std::optional<Element> of_p, of_q;
  for (Element e = 1; e < g.order(); ++e) {
    if (!of_p && g.element_order(e) == p) of_p = e;
    if (!of_q && g.element_order(e) == static_cast<std::size_t>(cls->q)) of_q = e;
  }
  Element pe[] = {*of_p};
  Element qe[] = {*of_q};
  GSet x = disjoint_union(repeat(coset_space(g, generate_subgroup(g, pe)), p),
                          coset_space(g, generate_subgroup(g, qe)));
  GSet y = points_and_regular(g, p);
  require_verified(x, y, "base_pair");
  return {x, y,
          {{Construction::Metacyclic, "Z/" + std::to_string(cls->q) + " x| Z/" + std::to_string(cls->p)}}};
}

UnbalancedPair lift_by_induction(const SubgroupEmbedding& emb, const UnbalancedPair& pair) {
  UnbalancedPair out{induce(emb, pair.x), induce(emb, pair.y), pair.provenance};
  require_verified(out.x, out.y, "lift_by_induction");
  const std::size_t index = emb.image.index();
  if (out.x.size() != index * pair.x.size() || out.y.size() != index * pair.y.size())
    throw VerificationFailure("induced sizes are not multiplied by the index");
  out.provenance.push_back({Construction::InducedFrom, "subgroup " + emb.image.describe_words() + " of order " +
                                                           std::to_string(emb.image.order()) + ", index " +
                                                           std::to_string(index)});
  return out;
}

UnbalancedPair lift_by_inflation(const Quotient& q, const UnbalancedPair& pair) {
  UnbalancedPair out{inflate(q, pair.x), inflate(q, pair.y), pair.provenance};
  require_verified(out.x, out.y, "lift_by_inflation");
  if (orbit_sizes(out.x) != orbit_sizes(pair.x) || orbit_sizes(out.y) != orbit_sizes(pair.y))
    throw VerificationFailure("inflation changed orbit sizes");
  out.provenance.push_back({Construction::InflatedFrom, "quotient by " + q.kernel.describe_words() + " of order " +
                                                            std::to_string(q.kernel.order())});
  return out;
}

namespace {

// Subgroup of emb.sub corresponding to a subgroup of the parent contained in the image.
Subgroup pull_back(const SubgroupEmbedding& emb, const Subgroup& h) {
  std::vector<Element> members;
  for (Element s = 0; s < emb.into_parent.size(); ++s)
    if (h.contains(emb.into_parent[s])) members.push_back(s);
  return subgroup_from_members(*emb.sub, std::move(members));
}

// For an embedding of the whole group: the same G-set over the parent object.
GSet onto_parent(const SubgroupEmbedding& emb, const GSet& x) {
  const Group& g = *emb.parent;
  std::vector<Point> table(g.order() * x.size());
  for (Element e = 0; e < emb.sub->order(); ++e)
    for (Point p = 0; p < x.size(); ++p) table[emb.into_parent[e] * x.size() + p] = x.act(e, p);
  return GSet(emb.parent, x.size(), std::move(table));
}

// A non-cyclic Sylow P contains Phi(P) <= K <= P with K/Phi(P) = Z/p x Z/p.
std::optional<UnbalancedPair> via_noncyclic_sylow(const Group& g) {
  auto subgroups = all_subgroups(g);
  for (long p : prime_divisors(static_cast<long>(g.order()))) {
    std::size_t pk = 1;
    while (g.order() % (pk * p) == 0) pk *= p;
    auto sylow = std::find_if(subgroups.begin(), subgroups.end(), [&](const Subgroup& h) { return h.order() == pk; });
    bool cyclic = std::any_of(sylow->members.begin(), sylow->members.end(),
                              [&](Element e) { return g.element_order(e) == pk; });
    if (cyclic) continue;

    std::vector<const Subgroup*> inside;
    for (const auto& h : subgroups)
      if (h.set.is_subset_of(sylow->set)) inside.push_back(&h);
    ElementSet frattini = sylow->set;
    for (const Subgroup* h : inside)
      if (h->order() * p == pk) frattini = frattini.intersect(h->set);
    Subgroup phi = subgroup_from_members(g, frattini.to_vector());
    auto k = std::find_if(inside.begin(), inside.end(), [&](const Subgroup* h) {
      return h->order() == phi.order() * p * p && phi.set.is_subset_of(h->set);
    });
    if (k == inside.end()) throw VerificationFailure("no Z/p x Z/p section above the Frattini subgroup");

    SubgroupEmbedding emb = embed_subgroup(g, **k);
    const Group& kg = *emb.sub;
    UnbalancedPair pair;
    if (phi.order() == 1) {
      pair = base_pair(kg);
    } else {
      Quotient q = quotient_group(kg, pull_back(emb, phi));
      pair = lift_by_inflation(q, base_pair(*q.quotient));
    }
    if ((*k)->order() == g.order()) {
      // K is all of G; move the pair from the copy back onto g itself.
      pair.x = onto_parent(emb, pair.x);
      pair.y = onto_parent(emb, pair.y);
      require_verified(pair.x, pair.y, "non-cyclic Sylow route");
      return pair;
    }
    return lift_by_induction(emb, pair);
  }
  return std::nullopt;
}

Element commutator(const Group& g, Element x, Element y) {
  return g.product(g.product(g.inverse(x), g.inverse(y)), g.product(x, y));
}

// All Sylow subgroups cyclic: G = <a> x| <b> with a^m = b^n = e, b^-1 a b = a^r.
// Descent: quotient by the central <b^k> (k = order of r mod m), then pass to a prime
// power of b, then to an element of prime order in <a>.
std::optional<UnbalancedPair> via_metacyclic_descent(const Group& g) {
  std::vector<Element> comms;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) comms.push_back(commutator(g, x, y));
  Subgroup derived = generate_subgroup(g, comms);
  const std::size_t m = derived.order();
  const std::size_t n = g.order() / m;
  if (m == 1) return std::nullopt;
  Element a = *std::find_if(derived.members.begin(), derived.members.end(),
                            [&](Element e) { return g.element_order(e) == m; });
  std::optional<Element> b;
  for (Element e = 0; e < g.order() && !b; ++e) {
    if (g.element_order(e) != n) continue;
    Element gen[] = {e};
    if (generate_subgroup(g, gen).set.intersect(derived.set).count() == 1) b = e;
  }
  if (!b) throw VerificationFailure("no complement to the derived subgroup");
  Element conj = g.product(g.product(g.inverse(*b), a), *b);
  long r = 0;
  while (g.power(a, r) != conj) ++r;
  long k = 1;
  while (powmod(r, k, static_cast<long>(m)) != 1 % static_cast<long>(m)) ++k;

  GroupPtr work = g.ptr();
  Element wa = a, wb = *b;
  std::optional<Quotient> central;
  if (static_cast<std::size_t>(k) < n) {
    Element cgen[] = {g.power(*b, k)};
    central = quotient_group(g, generate_subgroup(g, cgen));
    work = central->quotient;
    wa = central->projection[a];
    wb = central->projection[*b];
  }
  long ell = smallest_prime_factor(k);
  long q = smallest_prime_factor(static_cast<long>(m));
  Element gens[] = {work->power(wa, static_cast<long>(m) / q), work->power(wb, k / ell)};
  Subgroup s = generate_subgroup(*work, gens);

  SubgroupEmbedding emb = embed_subgroup(*work, s);
  UnbalancedPair pair = base_pair(*emb.sub);
  if (s.order() != work->order()) {
    pair = lift_by_induction(emb, pair);
  } else {
    pair.x = onto_parent(emb, pair.x);
    pair.y = onto_parent(emb, pair.y);
  }
  if (central) pair = lift_by_inflation(*central, pair);
  require_verified(pair.x, pair.y, "metacyclic descent");
  return pair;
}

}  // namespace

std::optional<UnbalancedPair> find_unbalanced_pair(const Group& g) {
  if (g.is_cyclic()) return std::nullopt;
  if (auto pair = via_noncyclic_sylow(g)) return pair;
  if (auto pair = via_metacyclic_descent(g)) return pair;
  return unbalanced_pair_from_kernel(SubgroupLattice(g.ptr()));
}

std::optional<UnbalancedPair> unbalanced_pair_from_kernel(const SubgroupLattice& lattice) {
  CharacterMatrix m = character_matrix(lattice);
  auto basis = kernel_basis(m);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!is_unbalanced(lattice, m, basis[i])) continue;
    ReducedPair rp = to_reduced_pair(lattice, basis[i]);
    require_verified(rp.x, rp.y, "kernel search");
    return UnbalancedPair{rp.x, rp.y, {{Construction::KernelSearch, "kernel basis vector " + std::to_string(i)}}};
  }
  return std::nullopt;
}

}  // namespace linequiv
