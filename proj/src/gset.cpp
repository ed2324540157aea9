#include "linequiv/gset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "linequiv/errors.hpp"

namespace linequiv {

GSet::GSet(GroupPtr group, std::size_t size, std::vector<Point> table)
    : group_(std::move(group)), size_(size), table_(std::move(table)) {
  if (!group_) throw InvalidArgument("G-set needs a group");
  if (table_.size() != group_->order() * size_) throw InvalidArgument("action table has wrong size");
  for (Point x = 0; x < size_; ++x)
    if (table_[x] != x) throw InvalidArgument("identity does not act trivially");
  std::vector<bool> seen(size_);
  for (Element g = 0; g < group_->order(); ++g) {
    std::fill(seen.begin(), seen.end(), false);
    for (Point x = 0; x < size_; ++x) {
      Point y = table_[g * size_ + x];
      if (y >= size_ || seen[y]) throw InvalidArgument("action row is not a permutation");
      seen[y] = true;
    }
  }
}

bool satisfies_action_axioms(const GSet& x) {
  const Group& g = x.group();
  for (Point p = 0; p < x.size(); ++p)
    if (x.act(Group::identity(), p) != p) return false;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      for (Point p = 0; p < x.size(); ++p)
        if (x.act(a, x.act(b, p)) != x.act(g.product(a, b), p)) return false;
  return true;
}

namespace {

void require_same_group(const GSet& x, const GSet& y) {
  if (x.group_ptr() != y.group_ptr()) throw InvalidArgument("G-sets over different groups");
}

}  // namespace

GSet empty_gset(const Group& g) { return GSet(g.ptr(), 0, {}); }

GSet one_point(const Group& g) { return GSet(g.ptr(), 1, std::vector<Point>(g.order(), 0)); }

GSet regular_gset(const Group& g) { return coset_space(g, trivial_subgroup(g)); }

GSet coset_space(const Group& g, const Subgroup& h) {
  if (h.parent != &g) throw InvalidArgument("subgroup of a different group");
  std::vector<Point> coset(g.order(), UINT32_MAX);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset[x] != UINT32_MAX) continue;
    auto id = static_cast<Point>(reps.size());
    reps.push_back(x);
    for (Element m : h.members) coset[g.product(x, m)] = id;
  }
  const std::size_t n = reps.size();
  std::vector<Point> table(g.order() * n);
  for (Element a = 0; a < g.order(); ++a)
    for (std::size_t c = 0; c < n; ++c) table[a * n + c] = coset[g.product(a, reps[c])];
  return GSet(g.ptr(), n, std::move(table));
}

GSet disjoint_union(const GSet& x, const GSet& y) {
  require_same_group(x, y);
  const std::size_t n = x.size() + y.size();
  const auto off = static_cast<Point>(x.size());
  std::vector<Point> table(x.group().order() * n);
  for (Element g = 0; g < x.group().order(); ++g) {
    for (Point p = 0; p < x.size(); ++p) table[g * n + p] = x.act(g, p);
    for (Point p = 0; p < y.size(); ++p) table[g * n + off + p] = off + y.act(g, p);
  }
  return GSet(x.group_ptr(), n, std::move(table));
}

GSet repeat(const GSet& x, std::size_t copies) {
  GSet out = empty_gset(x.group());
  for (std::size_t i = 0; i < copies; ++i) out = disjoint_union(out, x);
  return out;
}

GSet cartesian_product(const GSet& x, const GSet& y) {
  require_same_group(x, y);
  const std::size_t n = x.size() * y.size();
  std::vector<Point> table(x.group().order() * n);
  for (Element g = 0; g < x.group().order(); ++g)
    for (Point a = 0; a < x.size(); ++a)
      for (Point b = 0; b < y.size(); ++b)
        table[g * n + a * y.size() + b] = static_cast<Point>(x.act(g, a) * y.size() + y.act(g, b));
  return GSet(x.group_ptr(), n, std::move(table));
}

TensorProduct tensor(const GSet& x, const GSet& y) {
  require_same_group(x, y);
  GSet prod = cartesian_product(x, y);
  TensorProduct out;
  out.point_of_pair.assign(prod.size(), SIZE_MAX);
  for (Point p = 0; p < prod.size(); ++p) {
    if (out.point_of_pair[p] != SIZE_MAX) continue;
    for (Element g = 0; g < prod.group().order(); ++g) out.point_of_pair[prod.act(g, p)] = out.size;
    ++out.size;
  }
  return out;
}

GSet induce(const SubgroupEmbedding& emb, const GSet& x) {
  if (x.group_ptr() != emb.sub) throw InvalidArgument("G-set is not over the embedded subgroup");
  const Group& g = *emb.parent;
  const Subgroup& h = emb.image;
  std::unordered_map<Element, Element> to_sub;
  for (Element s = 0; s < emb.into_parent.size(); ++s) to_sub.emplace(emb.into_parent[s], s);

  std::vector<std::size_t> coset(g.order(), SIZE_MAX);
  std::vector<Element> reps;
  for (Element a = 0; a < g.order(); ++a) {
    if (coset[a] != SIZE_MAX) continue;
    std::size_t id = reps.size();
    reps.push_back(a);
    for (Element m : h.members) coset[g.product(a, m)] = id;
  }
  const std::size_t k = reps.size();
  const std::size_t n = k * x.size();
  std::vector<Point> table(g.order() * n);
  for (Element a = 0; a < g.order(); ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      // a t_i = t_j h with h in H
      Element at = g.product(a, reps[i]);
      std::size_t j = coset[at];
      Element hh = to_sub.at(g.product(g.inverse(reps[j]), at));
      for (Point p = 0; p < x.size(); ++p)
        table[a * n + i * x.size() + p] = static_cast<Point>(j * x.size() + x.act(hh, p));
    }
  }
  return GSet(emb.parent, n, std::move(table));
}

GSet restrict_to(const SubgroupEmbedding& emb, const GSet& y) {
  if (y.group_ptr() != emb.parent) throw InvalidArgument("G-set is not over the parent group");
  const std::size_t n = y.size();
  std::vector<Point> table(emb.sub->order() * n);
  for (Element s = 0; s < emb.sub->order(); ++s)
    for (Point p = 0; p < n; ++p) table[s * n + p] = y.act(emb.into_parent[s], p);
  return GSet(emb.sub, n, std::move(table));
}

GSet inflate(const Quotient& q, const GSet& x) {
  if (x.group_ptr() != q.quotient) throw InvalidArgument("G-set is not over the quotient group");
  const std::size_t n = x.size();
  std::vector<Point> table(q.parent->order() * n);
  for (Element g = 0; g < q.parent->order(); ++g)
    for (Point p = 0; p < n; ++p) table[g * n + p] = x.act(q.projection[g], p);
  return GSet(q.parent, n, std::move(table));
}

GSet function_gset(const GSet& x, std::size_t s, std::size_t size_cap) {
  if (s == 0) throw InvalidArgument("function set needs a nonempty codomain");
  double nominal = std::pow(static_cast<double>(s), static_cast<double>(x.size()));
  if (nominal > static_cast<double>(size_cap)) throw CapExceeded("function G-set too large");
  std::size_t n = 1;
  for (std::size_t i = 0; i < x.size(); ++i) n *= s;
  const Group& g = x.group();
  std::vector<Point> table(g.order() * n);
  std::vector<std::size_t> digits(x.size()), moved(x.size());
  for (Element a = 0; a < g.order(); ++a) {
    Element ainv = g.inverse(a);
    for (std::size_t f = 0; f < n; ++f) {
      std::size_t rest = f;
      for (std::size_t i = 0; i < x.size(); ++i) {
        digits[i] = rest % s;
        rest /= s;
      }
      std::size_t out = 0;
      for (std::size_t i = x.size(); i-- > 0;) out = out * s + digits[x.act(ainv, static_cast<Point>(i))];
      table[a * n + f] = static_cast<Point>(out);
    }
  }
  return GSet(g.ptr(), n, std::move(table));
}

std::size_t fixed_points(const GSet& x, Element g) {
  if (g >= x.group().order()) throw InvalidArgument("element index out of range");
  std::size_t n = 0;
  for (Point p = 0; p < x.size(); ++p)
    if (x.act(g, p) == p) ++n;
  return n;
}

PermCharacter perm_character(const GSet& x) {
  const Group& g = x.group();
  PermCharacter chi;
  for (const auto& c : g.conjugacy_classes()) {
    auto v = static_cast<std::int64_t>(fixed_points(x, c.representative));
    for (Element m : c.members)
      if (static_cast<std::int64_t>(fixed_points(x, m)) != v)
        throw VerificationFailure("fixed-point count not constant on a conjugacy class");
    chi.values.push_back(v);
  }
  return chi;
}

bool linearly_equivalent(const GSet& x, const GSet& y) {
  require_same_group(x, y);
  return perm_character(x) == perm_character(y);
}

std::vector<std::vector<Point>> orbits(const GSet& x) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(x.size(), false);
  for (Point p = 0; p < x.size(); ++p) {
    if (seen[p]) continue;
    std::vector<Point> orbit;
    for (Element g = 0; g < x.group().order(); ++g) {
      Point q = x.act(g, p);
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup stabilizer(const GSet& x, Point p) {
  if (p >= x.size()) throw InvalidArgument("point out of range");
  std::vector<Element> members;
  for (Element g = 0; g < x.group().order(); ++g)
    if (x.act(g, p) == p) members.push_back(g);
  return generate_subgroup(x.group(), members);
}

std::size_t OrbitType::size(const SubgroupLattice& lattice) const {
  std::size_t n = 0;
  for (auto [c, mult] : terms) n += mult * lattice.classes()[c].representative.index();
  return n;
}

OrbitType orbit_decomposition(const GSet& x, const SubgroupLattice& lattice) {
  if (x.group_ptr() != lattice.group_ptr()) throw InvalidArgument("G-set over a different group");
  std::vector<std::size_t> counts(lattice.rank(), 0);
  for (const auto& orbit : orbits(x)) ++counts[lattice.class_index(stabilizer(x, orbit.front()))];
  OrbitType t;
  for (std::size_t c = 0; c < counts.size(); ++c)
    if (counts[c]) t.terms.emplace_back(c, counts[c]);
  return t;
}

GSet realize(const OrbitType& t, const SubgroupLattice& lattice) {
  const Group& g = lattice.group();
  GSet out = empty_gset(g);
  for (auto [c, mult] : t.terms)
    out = disjoint_union(out, repeat(coset_space(g, lattice.classes().at(c).representative), mult));
  return out;
}

bool isomorphic(const GSet& x, const GSet& y) {
  require_same_group(x, y);
  if (x.size() != y.size()) return false;
  const Group& g = x.group();
  std::vector<Subgroup> xs, ys;
  for (const auto& o : orbits(x)) xs.push_back(stabilizer(x, o.front()));
  for (const auto& o : orbits(y)) ys.push_back(stabilizer(y, o.front()));
  if (xs.size() != ys.size()) return false;
  std::vector<bool> used(ys.size(), false);
  for (const auto& h : xs) {
    bool matched = false;
    for (std::size_t j = 0; j < ys.size() && !matched; ++j) {
      if (used[j] || ys[j].order() != h.order()) continue;
      if (are_conjugate(g, h, ys[j])) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::vector<std::size_t> orbit_sizes(const GSet& x) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits(x)) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct HomSearch {
  const GSet& x;
  const GSet& y;
  std::vector<Point> image;
  std::size_t count = 0;

  bool consistent(Point p) const {
    const Group& g = x.group();
    for (Element a = 0; a < g.order(); ++a) {
      Point q = x.act(a, p);
      if (q <= p && image[q] != y.act(a, image[p])) return false;
    }
    return true;
  }

  void run(Point p) {
    if (p == x.size()) {
      ++count;
      return;
    }
    for (Point v = 0; v < y.size(); ++v) {
      image[p] = v;
      if (consistent(p)) run(p + 1);
    }
  }
};

}  // namespace

std::size_t hom_count(const GSet& x, const GSet& y, double search_cap) {
  require_same_group(x, y);
  double nominal = std::pow(static_cast<double>(y.size()), static_cast<double>(x.size()));
  if (nominal > search_cap) throw CapExceeded("hom search space exceeds cap");
  HomSearch s{x, y, std::vector<Point>(x.size(), 0)};
  s.run(0);
  return s.count;
}

}  // namespace linequiv
