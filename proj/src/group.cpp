#include "linequiv/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "linequiv/errors.hpp"

namespace linequiv {

GroupPtr Group::from_generators(std::size_t degree, std::vector<Permutation> generators,
                                std::vector<std::string> names, std::size_t order_cap) {
  for (const auto& p : generators)
    if (p.degree() != degree) throw InvalidArgument("generators of mismatched degree");
  if (names.empty())
    for (std::size_t i = 0; i < generators.size(); ++i) names.push_back("g" + std::to_string(i + 1));
  if (names.size() != generators.size()) throw InvalidArgument("one name per generator required");

  std::shared_ptr<Group> g(new Group());
  g->degree_ = degree;
  g->names_ = std::move(names);
  g->elements_.push_back(Permutation::identity(degree));
  g->words_.emplace_back();
  g->index_.emplace(g->elements_.front(), 0);

  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    std::map<Permutation, std::vector<std::uint16_t>> layer;
    for (Element x : frontier) {
      for (std::size_t k = 0; k < generators.size(); ++k) {
        Permutation y = g->elements_[x] * generators[k];
        if (g->index_.count(y) || layer.count(y)) continue;
        auto w = g->words_[x];
        w.push_back(static_cast<std::uint16_t>(k));
        layer.emplace(std::move(y), std::move(w));
      }
    }
    frontier.clear();
    for (auto& [perm, word] : layer) {
      if (g->elements_.size() >= order_cap)
        throw CapExceeded("group order exceeds cap " + std::to_string(order_cap));
      auto idx = static_cast<Element>(g->elements_.size());
      g->index_.emplace(perm, idx);
      g->elements_.push_back(perm);
      g->words_.push_back(std::move(word));
      frontier.push_back(idx);
    }
  }

  for (const auto& p : generators) g->generators_.push_back(g->index_.at(p));

  const std::size_t n = g->order();
  g->table_.resize(n * n);
  g->inverse_.resize(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) g->table_[a * n + b] = g->index_.at(g->elements_[a] * g->elements_[b]);
    g->inverse_[a] = g->index_.at(g->elements_[a].inverse());
  }

  g->element_orders_.resize(n);
  for (Element a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (Element x = a; x != 0; x = g->product(x, a)) ++k;
    g->element_orders_[a] = k;
  }

  g->classes_ = linequiv::conjugacy_classes(*g);
  g->class_of_.resize(n);
  for (std::size_t c = 0; c < g->classes_.size(); ++c)
    for (Element m : g->classes_[c].members) g->class_of_[m] = c;
  return g;
}

Element Group::power(Element g, long k) const {
  if (k < 0) {
    g = inverse(g);
    k = -k;
  }
  Element out = identity();
  for (long i = 0; i < k; ++i) out = product(out, g);
  return out;
}

std::optional<Element> Group::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Group::word(Element g) const {
  const auto& w = words_.at(g);
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += names_[w[i]];
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool Group::is_abelian() const { return classes_.size() == order(); }

bool Group::is_cyclic() const {
  return std::any_of(element_orders_.begin(), element_orders_.end(),
                     [&](std::size_t k) { return k == order(); });
}

std::vector<ConjClass> conjugacy_classes(const Group& g) {
  std::vector<ConjClass> out;
  std::vector<bool> seen(g.order(), false);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ConjClass c;
    c.representative = x;
    for (Element h = 0; h < g.order(); ++h) {
      Element y = g.conjugate(h, x);
      if (!seen[y]) {
        seen[y] = true;
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Element> centralizer(const Group& group, Element g) {
  if (g >= group.order()) throw InvalidArgument("element index out of range");
  std::vector<Element> out;
  for (Element h = 0; h < group.order(); ++h)
    if (group.product(h, g) == group.product(g, h)) out.push_back(h);
  return out;
}

namespace {

long inverse_mod(long a, long m) {
  a = ((a % m) + m) % m;
  for (long x = 0; x < m; ++x)
    if ((a * x) % m == 1 % m) return x;
  throw InvalidArgument("no modular inverse");
}

struct Realized {
  std::size_t degree;
  std::vector<Permutation> gens;
  std::vector<std::string> names;
  std::size_t expected_order;  // 0 when unknown in advance
};

Realized realize(const GroupSpec& s, std::size_t cap);

Realized realize_product(const spec::Product& p, std::size_t cap) {
  Realized a = realize(*p.left, cap);
  Realized b = realize(*p.right, cap);
  // Each factor's order is needed to state the expected product order.
  std::size_t oa = Group::from_generators(a.degree, a.gens, a.names, cap)->order();
  std::size_t ob = Group::from_generators(b.degree, b.gens, b.names, cap)->order();
  Realized out{a.degree + b.degree, {}, {}, oa * ob};
  if (out.expected_order > cap)
    throw CapExceeded("group order exceeds cap " + std::to_string(cap));
  for (std::size_t i = 0; i < a.gens.size(); ++i) {
    std::vector<Point> img(out.degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point x = 0; x < a.degree; ++x) img[x] = a.gens[i](x);
    out.gens.emplace_back(std::move(img));
    out.names.push_back(a.names[i] + "1");
  }
  for (std::size_t i = 0; i < b.gens.size(); ++i) {
    std::vector<Point> img(out.degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point x = 0; x < b.degree; ++x)
      img[a.degree + x] = static_cast<Point>(a.degree) + b.gens[i](x);
    out.gens.emplace_back(std::move(img));
    out.names.push_back(b.names[i] + "2");
  }
  return out;
}

Realized realize(const GroupSpec& s, std::size_t cap) {
  return std::visit(
      [cap](const auto& x) -> Realized {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, spec::Cyclic>) {
          auto n = static_cast<std::size_t>(x.n);
          std::vector<Point> img(n);
          for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
          return {n, {Permutation(std::move(img))}, {"a"}, n};
        } else if constexpr (std::is_same_v<T, spec::Dihedral>) {
          auto n = static_cast<std::size_t>(x.n);
          // n-gon action is unfaithful for n <= 2; two extra points swapped by the
          // reflection restore faithfulness.
          std::size_t deg = n >= 3 ? n : n + 2;
          std::vector<Point> rot(deg), ref(deg);
          std::iota(rot.begin(), rot.end(), Point{0});
          std::iota(ref.begin(), ref.end(), Point{0});
          for (std::size_t i = 0; i < n; ++i) {
            rot[i] = static_cast<Point>((i + 1) % n);
            ref[i] = static_cast<Point>((n - i) % n);
          }
          if (n < 3) std::swap(ref[n], ref[n + 1]);
          return {deg, {Permutation(std::move(rot)), Permutation(std::move(ref))}, {"s", "t"}, 2 * n};
        } else if constexpr (std::is_same_v<T, spec::Metacyclic>) {
          auto m = static_cast<std::size_t>(x.m);
          auto n = static_cast<std::size_t>(x.n);
          // a translates Z/m; b multiplies Z/m by r^-1 (so b^-1 a b = a^r) and cycles n
          // extra points.
          long rinv = inverse_mod(x.r, x.m);
          std::vector<Point> a(m + n), b(m + n);
          std::iota(a.begin(), a.end(), Point{0});
          std::iota(b.begin(), b.end(), Point{0});
          for (std::size_t i = 0; i < m; ++i) {
            a[i] = static_cast<Point>((i + 1) % m);
            b[i] = static_cast<Point>((static_cast<long>(i) * rinv) % x.m);
          }
          for (std::size_t i = 0; i < n; ++i) b[m + i] = static_cast<Point>(m + (i + 1) % n);
          return {m + n, {Permutation(std::move(a)), Permutation(std::move(b))}, {"a", "b"}, m * n};
        } else if constexpr (std::is_same_v<T, spec::Product>) {
          return realize_product(x, cap);
        } else {
          std::vector<std::string> names;
          for (std::size_t i = 0; i < x.perms.size(); ++i) names.push_back("g" + std::to_string(i + 1));
          return {x.degree, x.perms, std::move(names), 0};
        }
      },
      s.node);
}

}  // namespace

GroupPtr construct(const GroupSpec& spec, std::size_t order_cap) {
  validate(spec);
  Realized r = realize(spec, order_cap);
  if (r.expected_order > order_cap)
    throw CapExceeded("group order exceeds cap " + std::to_string(order_cap));
  GroupPtr g = Group::from_generators(r.degree, std::move(r.gens), std::move(r.names), order_cap);
  if (r.expected_order != 0 && g->order() != r.expected_order)
    throw VerificationFailure("constructed " + to_string(spec) + " has order " +
                              std::to_string(g->order()) + ", expected " +
                              std::to_string(r.expected_order));
  return g;
}

}  // namespace linequiv
