#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>

#include "linequiv/cli.hpp"
#include "linequiv/pairs.hpp"
#include "linequiv/qform.hpp"
#include "linequiv/spectral.hpp"
#include "linequiv/subgroups.hpp"

namespace linequiv::cli {

using Json = nlohmann::ordered_json;

GSetExpr expr_of(const OrbitType& t) {
  GSetExpr e;
  for (auto [c, m] : t.terms)
    if (m) e.terms.emplace_back(c, m);
  return e;
}

GSet realize(const GSetExpr& e, const SubgroupLattice& lattice) {
  OrbitType t;
  for (auto [c, m] : e.terms) {
    if (c >= lattice.rank())
      throw InvalidArgument("coset(" + std::to_string(c) + "): the group has " + std::to_string(lattice.rank()) +
                            " subgroup classes");
    t.terms.emplace_back(c, m);
  }
  return linequiv::realize(t, lattice);
}

BurnsideElement difference(const GSetExpr& x, const GSetExpr& y, std::size_t rank) {
  BurnsideElement v{std::vector<std::int64_t>(rank, 0)};
  for (auto [c, m] : x.terms) v.coeffs.at(c) += static_cast<std::int64_t>(m);
  for (auto [c, m] : y.terms) v.coeffs.at(c) -= static_cast<std::int64_t>(m);
  return v;
}

std::string Report::render(bool as_json) const {
  if (as_json) return json.dump(2) + "\n";
  return text;
}

namespace {

struct Context {
  GroupPtr group;
  SubgroupLattice lattice;

  explicit Context(GroupPtr g) : group(g), lattice(std::move(g)) {}
  const Group& g() const { return *group; }
};

Json header(const Command& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = to_string(c);
  if (c.group) j["group"] = to_string(*c.group);
  return j;
}

std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json class_json(const Context& ctx, std::size_t i) {
  const auto& cls = ctx.lattice.classes()[i];
  const auto& h = cls.representative;
  Json gens = Json::array();
  for (Element e : h.generators) gens.push_back(ctx.g().element(e).to_cycle_string());
  return Json{{"index", i},
              {"order", h.order()},
              {"group_index", h.index()},
              {"class_size", cls.class_size},
              {"generators", gens},
              {"words", h.describe_words()}};
}

Json gset_json(const Context& ctx, const GSet& x) {
  return Json{{"expr", to_string(expr_of(orbit_decomposition(x, ctx.lattice)))},
              {"size", x.size()},
              {"orbit_sizes", orbit_sizes(x)}};
}

std::string gset_line(const Context& ctx, const GSet& x) {
  return to_string(expr_of(orbit_decomposition(x, ctx.lattice))) + "  size " + std::to_string(x.size()) +
         ", orbits {" + join(orbit_sizes(x)) + "}";
}

Report info(const Command& c, const Context& ctx) {
  const Group& g = ctx.g();
  Report r;
  r.json = header(c);
  r.json["order"] = g.order();
  r.json["degree"] = g.degree();
  r.json["abelian"] = g.is_abelian();
  r.json["cyclic"] = g.is_cyclic();
  Json gens = Json::array();
  std::ostringstream t;
  t << "group   " << to_string(*c.group) << "\norder   " << g.order() << "\ndegree  " << g.degree()
    << "\nabelian " << (g.is_abelian() ? "yes" : "no") << ", cyclic " << (g.is_cyclic() ? "yes" : "no")
    << "\ngenerators\n";
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    std::string cyc = g.element(g.generators()[i]).to_cycle_string();
    gens.push_back(Json{{"name", g.generator_names()[i]}, {"cycles", cyc}});
    t << "  " << g.generator_names()[i] << " = " << cyc << "\n";
  }
  r.json["generators"] = gens;
  Json classes = Json::array();
  t << "conjugacy classes\n  " << std::left << std::setw(4) << "#" << std::setw(6) << "size" << std::setw(7)
    << "order" << std::setw(8) << "|C(g)|"
    << "representative\n";
  const auto& cc = g.conjugacy_classes();
  for (std::size_t i = 0; i < cc.size(); ++i) {
    Element rep = cc[i].representative;
    std::size_t cent = g.order() / cc[i].size();
    classes.push_back(Json{{"index", i},
                           {"size", cc[i].size()},
                           {"element_order", g.element_order(rep)},
                           {"centralizer_order", cent},
                           {"representative", g.word(rep)}});
    t << "  " << std::setw(4) << i << std::setw(6) << cc[i].size() << std::setw(7) << g.element_order(rep)
      << std::setw(8) << cent << g.word(rep) << "\n";
  }
  r.json["conjugacy_classes"] = classes;
  Json elements = Json::array();
  t << "elements\n";
  for (Element e = 0; e < g.order(); ++e) {
    elements.push_back(Json{{"index", e}, {"word", g.word(e)}, {"cycles", g.element(e).to_cycle_string()}});
    t << "  " << std::setw(4) << e << std::setw(16) << g.word(e) << g.element(e).to_cycle_string() << "\n";
  }
  r.json["elements"] = elements;
  r.text = t.str();
  return r;
}

Report subgroups(const Command& c, const Context& ctx) {
  Report r;
  r.json = header(c);
  r.json["order"] = ctx.g().order();
  r.json["subgroup_count"] = ctx.lattice.subgroups().size();
  Json classes = Json::array();
  std::ostringstream t;
  t << ctx.lattice.subgroups().size() << " subgroups in " << ctx.lattice.rank() << " conjugacy classes\n  "
    << std::left << std::setw(4) << "#" << std::setw(7) << "order" << std::setw(7) << "index" << std::setw(7)
    << "count"
    << "generators\n";
  for (std::size_t i = 0; i < ctx.lattice.rank(); ++i) {
    classes.push_back(class_json(ctx, i));
    const auto& cls = ctx.lattice.classes()[i];
    t << "  " << std::setw(4) << i << std::setw(7) << cls.representative.order() << std::setw(7)
      << cls.representative.index() << std::setw(7) << cls.class_size << cls.representative.describe_words() << "  "
      << cls.representative.describe() << "\n";
  }
  r.json["classes"] = classes;
  r.text = t.str();
  return r;
}

Report kernel(const Command& c, const Context& ctx) {
  Report r;
  r.json = header(c);
  CharacterMatrix m = character_matrix(ctx.lattice);
  auto basis = kernel_basis(m);
  std::ostringstream t;
  t << "character matrix (" << m.rows << " subgroup classes x " << m.cols << " conjugacy classes)\n";
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    rows.push_back(m.row(i));
    t << "  " << std::left << std::setw(4) << i << join(m.row(i)) << "   " << ctx.lattice.classes()[i].representative.describe_words()
      << "\n";
  }
  Json classes = Json::array();
  for (std::size_t i = 0; i < ctx.lattice.rank(); ++i) classes.push_back(class_json(ctx, i));
  r.json["classes"] = classes;
  r.json["character_matrix"] = rows;
  Json vecs = Json::array();
  t << "kernel rank " << basis.size() << "\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool unbalanced = is_unbalanced(ctx.lattice, m, basis[i]);
    vecs.push_back(Json{{"id", i}, {"coeffs", basis[i].coeffs}, {"unbalanced", unbalanced}});
    t << "  " << std::setw(4) << i << "[" << join(basis[i].coeffs, ",") << "]" << (unbalanced ? "  unbalanced" : "")
      << "\n";
  }
  r.json["kernel"] = Json{{"rank", basis.size()}, {"basis", vecs}};
  r.text = t.str();
  return r;
}

Report pairs(const Command& c, const Context& ctx) {
  Report r;
  r.json = header(c);
  CharacterMatrix m = character_matrix(ctx.lattice);
  auto basis = kernel_basis(m);
  Json out = Json::array();
  std::ostringstream t;
  if (basis.empty()) t << "no linearly equivalent pairs (kernel is trivial)\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    ReducedPair p = to_reduced_pair(ctx.lattice, basis[i]);
    bool unbalanced = is_unbalanced(ctx.lattice, m, basis[i]);
    out.push_back(Json{{"id", i},
                       {"coeffs", basis[i].coeffs},
                       {"x", gset_json(ctx, p.x)},
                       {"y", gset_json(ctx, p.y)},
                       {"linearly_equivalent", linearly_equivalent(p.x, p.y)},
                       {"unbalanced", unbalanced}});
    t << "pair " << i << (unbalanced ? "  unbalanced" : "  balanced") << "\n  X = " << gset_line(ctx, p.x)
      << "\n  Y = " << gset_line(ctx, p.y) << "\n";
  }
  r.json["pairs"] = out;
  r.text = t.str();
  return r;
}

Report find_unbalanced(const Command& c, const Context& ctx) {
  Report r;
  r.json = header(c);
  auto pair = find_unbalanced_pair(ctx.g());
  if (!pair) {
    r.json["pair"] = nullptr;
    r.json["reason"] = "group is cyclic";
    r.text = "none (group is cyclic)\n";
    return r;
  }
  Json prov = Json::array();
  std::ostringstream t;
  t << "unbalanced pair\n  X = " << gset_line(ctx, pair->x) << "\n  Y = " << gset_line(ctx, pair->y)
    << "\nprovenance\n";
  for (const auto& s : pair->provenance) {
    prov.push_back(Json{{"kind", to_string(s.kind)}, {"detail", s.detail}});
    t << "  " << to_string(s.kind) << ": " << s.detail << "\n";
  }
  r.json["pair"] = Json{{"x", gset_json(ctx, pair->x)},
                        {"y", gset_json(ctx, pair->y)},
                        {"linearly_equivalent", linearly_equivalent(pair->x, pair->y)},
                        {"provenance", prov}};
  r.text = t.str();
  return r;
}

Report sunada(const Command& c, const Context& ctx) {
  Report r;
  r.json = header(c);
  auto found = sunada_pairs(ctx.lattice);
  Json out = Json::array();
  std::ostringstream t;
  if (found.empty()) t << "no Sunada pairs\n";
  for (auto [i, j] : found) {
    out.push_back(Json{{"h", class_json(ctx, i)}, {"k", class_json(ctx, j)}});
    t << "coset(" << i << ") ~ coset(" << j << ")   " << ctx.lattice.classes()[i].representative.describe_words()
      << "  vs  " << ctx.lattice.classes()[j].representative.describe_words() << "\n";
  }
  r.json["sunada_pairs"] = out;
  r.text = t.str();
  return r;
}

Report verify(const Command& c, const Context& ctx) {
  Report r;
  r.json = header(c);
  GSet x = realize(*c.x, ctx.lattice);
  GSet y = realize(*c.y, ctx.lattice);
  bool equiv = linearly_equivalent(x, y);
  bool iso = isomorphic(x, y);
  bool unbalanced = equiv && orbit_sizes(x) != orbit_sizes(y);
  auto cx = perm_character(x).values, cy = perm_character(y).values;
  r.json["x"] = gset_json(ctx, x);
  r.json["y"] = gset_json(ctx, y);
  r.json["x"]["character"] = cx;
  r.json["y"]["character"] = cy;
  r.json["linearly_equivalent"] = equiv;
  r.json["isomorphic"] = iso;
  r.json["unbalanced"] = unbalanced;
  std::ostringstream t;
  t << "X = " << gset_line(ctx, x) << "\n    character " << join(cx) << "\nY = " << gset_line(ctx, y)
    << "\n    character " << join(cy) << "\nlinearly equivalent " << (equiv ? "yes" : "no") << "\nisomorphic "
    << (iso ? "yes" : "no") << "\nunbalanced " << (unbalanced ? "yes" : "no") << "\n";
  r.text = t.str();
  r.exit_code = equiv ? kExitOk : kExitNegative;
  return r;
}

Report schreier(const Command& c, const Context& ctx) {
  Report r;
  r.json = header(c);
  const Group& g = ctx.g();
  GSet x, y;
  if (const auto* id = std::get_if<std::size_t>(&c.pair->ref)) {
    auto basis = kernel_basis(ctx.lattice);
    if (*id >= basis.size())
      throw InvalidArgument("--pair " + std::to_string(*id) + ": kernel rank is " + std::to_string(basis.size()));
    ReducedPair p = to_reduced_pair(ctx.lattice, basis[*id]);
    x = p.x;
    y = p.y;
  } else {
    const auto& [ex, ey] = std::get<std::pair<GSetExpr, GSetExpr>>(c.pair->ref);
    x = realize(ex, ctx.lattice);
    y = realize(ey, ctx.lattice);
  }
  r.json["x"] = gset_json(ctx, x);
  r.json["y"] = gset_json(ctx, y);

  std::vector<std::vector<Element>> multisets;
  if (const auto* rnd = std::get_if<GensChoice::Random>(&c.gens->choice)) {
    std::uint64_t seed = rnd->seed.value_or(c.seed);
    r.json["seed"] = seed;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < c.trials; ++i) multisets.push_back(random_generating_multiset(g, rnd->k, rng));
  } else {
    const auto& list = std::get<std::vector<Element>>(c.gens->choice);
    for (Element e : list)
      if (e >= g.order()) throw InvalidArgument("--gens: element " + std::to_string(e) + " out of range");
    multisets.push_back(symmetrize(g, list));
  }

  bool all = true;
  Json trials = Json::array();
  std::ostringstream t;
  t << "X = " << gset_line(ctx, x) << "\nY = " << gset_line(ctx, y) << "\n";
  for (const auto& s : multisets) {
    IntPolynomial px = schreier_char_poly(x, s), py = schreier_char_poly(y, s);
    bool same = px == py;
    all = all && same;
    Json words = Json::array(), jx = Json::array(), jy = Json::array();
    for (Element e : s) words.push_back(g.word(e));
    for (const auto& v : px.coeffs) jx.push_back(big(v));
    for (const auto& v : py.coeffs) jy.push_back(big(v));
    trials.push_back(Json{{"multiset", s}, {"words", words}, {"x_charpoly", jx}, {"y_charpoly", jy}, {"cospectral", same}});
    t << "S = {";
    for (std::size_t i = 0; i < s.size(); ++i) t << (i ? ", " : "") << g.word(s[i]);
    t << "}  " << (same ? "cospectral" : "NOT cospectral") << "\n";
  }
  r.json["trials"] = trials;
  r.json["cospectral"] = all;
  r.text = t.str();
  r.exit_code = all ? kExitOk : kExitNegative;
  return r;
}

std::string form_string(const ReducedForm& f) {
  std::string s = std::to_string(f.a) + "m^2";
  if (f.b) s += " + " + std::to_string(f.b) + "mn";
  return s + " + " + std::to_string(f.c) + "n^2";
}

Report tori(const Command& c) {
  Report r;
  r.json = header(c);
  HeckeVerdict v = hecke_check(c.p, c.bound);
  std::ostringstream t;
  auto side = [&](const char* name, const std::vector<QForm>& forms) {
    Json out = Json::array();
    t << name << ":";
    for (const auto& f : forms) {
      ReducedForm rf = reduce(f);
      out.push_back(Json{{"gram", {f.a, f.b, f.c}}, {"reduced", {rf.a, rf.b, rf.c}}});
      t << "  " << form_string(rf);
    }
    t << "\n";
    return out;
  };
  r.json["p"] = c.p;
  r.json["bound"] = c.bound;
  r.json["x_forms"] = side("X", v.x_forms);
  r.json["y_forms"] = side("Y", v.y_forms);
  r.json["equal"] = v.equal;
  if (v.witness) {
    r.json["witness"] = Json{{"value", *v.witness}, {"x_count", v.x_count}, {"y_count", v.y_count}};
    t << "representation numbers differ at " << *v.witness << ": " << v.x_count << " vs " << v.y_count << "\n";
  } else {
    r.json["witness"] = nullptr;
    t << "representation numbers agree up to " << c.bound << "\n";
  }
  r.text = t.str();
  r.exit_code = v.equal ? kExitOk : kExitNegative;
  return r;
}

Report error_report(const Command& c, const std::string& what, int code) {
  Report r;
  r.json = header(c);
  r.json["error"] = what;
  r.text = "error: " + what + "\n";
  r.exit_code = code;
  return r;
}

}  // namespace

Report run(const Command& c) {
  try {
    if (c.sub == Subcommand::Tori) return tori(c);
    if (!c.group) throw InvalidArgument("missing group spec");
    Context ctx(construct(*c.group, c.cap));
    switch (c.sub) {
      case Subcommand::Info: return info(c, ctx);
      case Subcommand::Subgroups: return subgroups(c, ctx);
      case Subcommand::Kernel: return kernel(c, ctx);
      case Subcommand::Pairs: return pairs(c, ctx);
      case Subcommand::FindUnbalanced: return find_unbalanced(c, ctx);
      case Subcommand::Sunada: return sunada(c, ctx);
      case Subcommand::Verify: return verify(c, ctx);
      case Subcommand::Schreier: return schreier(c, ctx);
      case Subcommand::Tori: break;
    }
    throw InvalidArgument("unknown subcommand");
  } catch (const InvalidArgument& e) {
    return error_report(c, e.what(), kExitUsage);
  } catch (const CapExceeded& e) {
    return error_report(c, e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return error_report(c, e.what(), kExitInternal);
  }
}

}  // namespace linequiv::cli
