#include "linequiv/subgroups.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "linequiv/errors.hpp"

namespace linequiv {

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Element> ElementSet::to_vector() const {
  std::vector<Element> out;
  for (Element e = 0; e < universe_; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
  return h;
}

std::string Subgroup::describe() const {
  if (generators.empty()) return "<()>";
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += parent->element(generators[i]).to_cycle_string();
  }
  return out + ">";
}

std::string Subgroup::describe_words() const {
  if (generators.empty()) return "<e>";
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += parent->word(generators[i]);
  }
  return out + ">";
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.parent == b.parent && a.set == b.set;
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members < b.members;
}

namespace {

Subgroup make_subgroup(const Group& g, ElementSet set, std::vector<Element> generators) {
  Subgroup h;
  h.parent = &g;
  h.members = set.to_vector();
  h.set = std::move(set);
  h.generators = std::move(generators);
  return h;
}

ElementSet closure_of(const Group& g, std::span<const Element> gens) {
  ElementSet set(g.order());
  set.insert(Group::identity());
  std::vector<Element> members{Group::identity()};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element k : gens) {
      Element y = g.product(members[i], k);
      if (!set.contains(y)) {
        set.insert(y);
        members.push_back(y);
      }
    }
  }
  return set;
}

// Drop generators already generated by the earlier ones.
std::vector<Element> prune_generators(const Group& g, std::span<const Element> gens) {
  std::vector<Element> kept;
  ElementSet closure = closure_of(g, kept);
  for (Element x : gens) {
    if (closure.contains(x)) continue;
    kept.push_back(x);
    closure = closure_of(g, kept);
  }
  return kept;
}

}  // namespace

Subgroup generate_subgroup(const Group& g, std::span<const Element> generators) {
  for (Element x : generators)
    if (x >= g.order()) throw InvalidArgument("element index out of range");
  return make_subgroup(g, closure_of(g, generators), prune_generators(g, generators));
}

Subgroup trivial_subgroup(const Group& g) { return generate_subgroup(g, {}); }

Subgroup whole_group(const Group& g) { return generate_subgroup(g, g.generators()); }

Subgroup subgroup_from_members(const Group& g, std::vector<Element> members) {
  ElementSet set(g.order());
  for (Element x : members) {
    if (x >= g.order()) throw InvalidArgument("element index out of range");
    set.insert(x);
  }
  if (!set.contains(Group::identity())) throw InvalidArgument("subset does not contain the identity");
  for (Element x : members)
    for (Element y : members)
      if (!set.contains(g.product(x, g.inverse(y))))
        throw InvalidArgument("subset is not closed under products and inverses");
  auto sorted = set.to_vector();
  return generate_subgroup(g, sorted);
}

Subgroup conjugate_subgroup(const Subgroup& h, Element x) {
  const Group& g = *h.parent;
  ElementSet set(g.order());
  for (Element m : h.members) set.insert(g.conjugate(x, m));
  std::vector<Element> gens;
  for (Element m : h.generators) gens.push_back(g.conjugate(x, m));
  return make_subgroup(g, std::move(set), std::move(gens));
}

bool is_normal(const Subgroup& h) {
  const Group& g = *h.parent;
  for (Element x : g.generators())
    for (Element m : h.generators)
      if (!h.contains(g.conjugate(x, m))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const Group& g) {
  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<Element> cyclic_generators;

  auto add = [&](Subgroup h) -> bool {
    if (seen.count(h.set)) return false;
    seen.emplace(h.set, found.size());
    found.push_back(std::move(h));
    return true;
  };

  for (Element x = 0; x < g.order(); ++x) {
    Element gen[] = {x};
    if (add(generate_subgroup(g, gen))) cyclic_generators.push_back(x);
  }
  // Join every subgroup with every cyclic subgroup until nothing new appears; each
  // subgroup is the join of its cyclic subgroups, so this reaches all of them.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element c : cyclic_generators) {
      if (found[i].contains(c)) continue;
      std::vector<Element> gens = found[i].generators;
      gens.push_back(c);
      add(generate_subgroup(g, gens));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<SubgroupClass> subgroup_classes(const Group& g) {
  return SubgroupLattice(g.ptr()).classes();
}

std::optional<Element> are_conjugate(const Group& g, const Subgroup& h, const Subgroup& k) {
  if (h.parent != &g || k.parent != &g) throw InvalidArgument("subgroup of a different group");
  if (h.order() != k.order()) return std::nullopt;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Element m : h.generators)
      if (!k.contains(g.conjugate(x, m))) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

SubgroupLattice::SubgroupLattice(GroupPtr group) : group_(std::move(group)) {
  const Group& g = *group_;
  subgroups_ = all_subgroups(g);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) lookup_.emplace(subgroups_[i].set, i);
  class_of_subgroup_.assign(subgroups_.size(), SIZE_MAX);
  // Subgroups are sorted canonically, so the first unassigned one is the minimal
  // conjugate of its class and classes come out in canonical order.
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (class_of_subgroup_[i] != SIZE_MAX) continue;
    std::size_t c = classes_.size();
    std::vector<std::size_t> members;
    for (Element x = 0; x < g.order(); ++x) {
      std::size_t j = lookup_.at(conjugate_subgroup(subgroups_[i], x).set);
      if (class_of_subgroup_[j] == SIZE_MAX) {
        class_of_subgroup_[j] = c;
        members.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back({subgroups_[i], members.size(), c});
    members_of_class_.push_back(std::move(members));
  }
}

std::size_t SubgroupLattice::subgroup_index(const Subgroup& h) const {
  if (h.parent != group_.get()) throw InvalidArgument("subgroup of a different group");
  auto it = lookup_.find(h.set);
  if (it == lookup_.end()) throw InvalidArgument("not a subgroup");
  return it->second;
}

std::size_t SubgroupLattice::class_index(const Subgroup& h) const {
  return class_of_subgroup_[subgroup_index(h)];
}

SubgroupEmbedding embed_subgroup(const Group& g, const Subgroup& h) {
  if (h.parent != &g) throw InvalidArgument("subgroup of a different group");
  std::vector<Permutation> gens;
  std::vector<std::string> names;
  for (Element x : h.generators) {
    gens.push_back(g.element(x));
    std::string w = g.word(x);
    names.push_back(w.find('*') == std::string::npos ? w : "(" + w + ")");
  }
  SubgroupEmbedding emb;
  emb.parent = g.ptr();
  emb.sub = Group::from_generators(g.degree(), std::move(gens), std::move(names), g.order());
  emb.image = h;
  emb.into_parent.resize(emb.sub->order());
  for (Element x = 0; x < emb.sub->order(); ++x) emb.into_parent[x] = *g.find(emb.sub->element(x));
  if (emb.sub->order() != h.order()) throw VerificationFailure("embedded subgroup order mismatch");
  return emb;
}

Quotient quotient_group(const Group& g, const Subgroup& n) {
  if (n.parent != &g) throw InvalidArgument("subgroup of a different group");
  if (!is_normal(n)) throw InvalidArgument("subgroup is not normal");
  std::vector<std::uint32_t> coset(g.order(), UINT32_MAX);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset[x] != UINT32_MAX) continue;
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Element m : n.members) coset[g.product(x, m)] = id;
  }
  auto act = [&](Element x) {
    std::vector<Point> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = coset[g.product(x, reps[c])];
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  for (Element x : g.generators()) gens.push_back(act(x));
  Quotient q;
  q.parent = g.ptr();
  q.kernel = n;
  q.quotient = Group::from_generators(reps.size(), std::move(gens), g.generator_names(), g.order());
  q.projection.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) q.projection[x] = *q.quotient->find(act(x));
  if (q.quotient->order() * n.order() != g.order())
    throw VerificationFailure("quotient order mismatch");
  return q;
}

}  // namespace linequiv
