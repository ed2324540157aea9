#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "linequiv/cli.hpp"

namespace linequiv::cli {

ParseError::ParseError(std::size_t offset, const std::string& what)
    : InvalidArgument("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      unsigned d = static_cast<unsigned>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint32_t>::max() - d) / 10) throw ParseError(start, "number too large");
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  [[noreturn]] void fail(const std::string& what) {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, what + ", found end of input");
    throw ParseError(pos_, what + ", found '" + text_[pos_] + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Validation is per node so the error offset points at the offending spec.
GroupSpec checked(GroupSpec s, std::size_t at) {
  try {
    validate(s);
  } catch (const InvalidArgument& e) {
    throw ParseError(at, e.what());
  }
  return s;
}

Permutation parse_permutation(Cursor& in, std::size_t degree) {
  in.skip_ws();
  std::size_t start = in.pos();
  std::vector<std::vector<Point>> cycles;
  while (in.peek() == '(') {
    in.expect('(');
    std::vector<Point> cycle;
    while (in.at_digit()) {
      cycle.push_back(static_cast<Point>(in.number()));
      in.accept(',');
    }
    in.expect(')');
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  if (in.pos() == start) in.fail("expected a permutation in cycle notation");
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const InvalidArgument& e) {
    throw ParseError(start, e.what());
  }
}

GroupSpec parse_spec(Cursor& in) {
  in.skip_ws();
  std::size_t start = in.pos();
  if (in.accept_word("gens")) {
    in.expect('(');
    std::size_t degree = in.number();
    if (degree == 0) throw ParseError(start, "generator degree must be >= 1");
    std::vector<Permutation> perms;
    while (in.accept(';')) perms.push_back(parse_permutation(in, degree));
    in.expect(')');
    return checked(GroupSpec::generators(degree, std::move(perms)), start);
  }
  char tag = in.peek();
  if (tag != 'C' && tag != 'D' && tag != 'M' && tag != 'P') in.fail("expected C, D, M, P or gens");
  in.accept(tag);
  in.expect('(');
  GroupSpec out;
  if (tag == 'P') {
    GroupSpec left = parse_spec(in);
    in.expect(',');
    GroupSpec right = parse_spec(in);
    out = GroupSpec::product(std::move(left), std::move(right));
  } else if (tag == 'M') {
    long m = static_cast<long>(in.number());
    in.expect(',');
    long n = static_cast<long>(in.number());
    in.expect(',');
    long r = static_cast<long>(in.number());
    out = checked(GroupSpec::metacyclic(m, n, r), start);
  } else {
    long n = static_cast<long>(in.number());
    out = checked(tag == 'C' ? GroupSpec::cyclic(n) : GroupSpec::dihedral(n), start);
  }
  in.expect(')');
  return out;
}

using Terms = std::map<std::size_t, std::size_t>;

Terms parse_sum(Cursor& in);

Terms parse_term(Cursor& in) {
  if (in.at_digit()) {
    std::size_t at = in.pos();
    std::size_t k = in.number();
    if (!in.accept('*')) {
      if (k != 0) throw ParseError(at, "a bare number must be 0 (the empty G-set)");
      return {};
    }
    Terms inner = parse_term(in);
    Terms out;
    for (auto [c, m] : inner)
      if (k != 0 && m != 0) out[c] = k * m;
    return out;
  }
  if (in.accept('(')) {
    Terms inner = parse_sum(in);
    in.expect(')');
    return inner;
  }
  if (in.accept_word("coset")) {
    in.expect('(');
    std::size_t c = in.number();
    in.expect(')');
    return {{c, 1}};
  }
  in.fail("expected coset(i), k*expr or (expr)");
}

Terms parse_sum(Cursor& in) {
  Terms out = parse_term(in);
  while (in.accept('+'))
    for (auto [c, m] : parse_term(in)) out[c] += m;
  return out;
}

void reject_trailing(Cursor& in) {
  if (!in.at_end()) in.fail("unexpected trailing input");
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  Cursor in(text);
  if (in.at_end()) throw ParseError(0, "empty group spec");
  GroupSpec s = parse_spec(in);
  reject_trailing(in);
  return s;
}

GSetExpr parse_gset_expr(std::string_view text) {
  Cursor in(text);
  if (in.at_end()) throw ParseError(0, "empty G-set expression");
  Terms t = parse_sum(in);
  reject_trailing(in);
  GSetExpr e;
  for (auto [c, m] : t)
    if (m) e.terms.emplace_back(c, m);
  return e;
}

std::string to_string(const GSetExpr& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (auto [c, m] : e.terms) {
    if (!out.empty()) out += "+";
    if (m != 1) out += std::to_string(m) + "*";
    out += "coset(" + std::to_string(c) + ")";
  }
  return out;
}

GensChoice parse_gens_choice(std::string_view text) {
  Cursor in(text);
  if (in.accept_word("random")) {
    GensChoice::Random r;
    in.expect(':');
    in.skip_ws();
    std::size_t at = in.pos();
    r.k = in.number();
    if (r.k == 0) throw ParseError(at, "multiset size must be positive");
    if (in.accept(':')) {
      // Seeds are full 64-bit; the cursor's number() is capped at 32 bits.
      in.skip_ws();
      std::size_t seed_at = in.pos();
      std::string rest(text.substr(seed_at));
      std::uint64_t seed = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), seed);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) throw ParseError(seed_at, "bad seed");
      r.seed = seed;
      return {r};
    }
    reject_trailing(in);
    return {r};
  }
  std::vector<Element> list;
  do list.push_back(static_cast<Element>(in.number()));
  while (in.accept(','));
  reject_trailing(in);
  return {list};
}

std::string to_string(const GensChoice& g) {
  if (const auto* r = std::get_if<GensChoice::Random>(&g.choice))
    return "random:" + std::to_string(r->k) + (r->seed ? ":" + std::to_string(*r->seed) : "");
  std::string out;
  for (Element e : std::get<std::vector<Element>>(g.choice)) out += (out.empty() ? "" : ",") + std::to_string(e);
  return out;
}

PairRef parse_pair_ref(std::string_view text) {
  auto tilde = text.find('~');
  if (tilde == std::string_view::npos) {
    Cursor in(text);
    std::size_t id = in.number();
    reject_trailing(in);
    return {id};
  }
  GSetExpr x, y;
  x = parse_gset_expr(text.substr(0, tilde));
  try {
    y = parse_gset_expr(text.substr(tilde + 1));
  } catch (const ParseError& e) {
    std::string what = e.what();
    throw ParseError(tilde + 1 + e.offset(), what.substr(what.find(": ") + 2));
  }
  return {std::pair{x, y}};
}

std::string to_string(const PairRef& p) {
  if (const auto* id = std::get_if<std::size_t>(&p.ref)) return std::to_string(*id);
  const auto& [x, y] = std::get<std::pair<GSetExpr, GSetExpr>>(p.ref);
  return to_string(x) + "~" + to_string(y);
}

const char* to_string(Subcommand s) {
  switch (s) {
    case Subcommand::Info: return "info";
    case Subcommand::Subgroups: return "subgroups";
    case Subcommand::Kernel: return "kernel";
    case Subcommand::Pairs: return "pairs";
    case Subcommand::FindUnbalanced: return "find-unbalanced";
    case Subcommand::Sunada: return "sunada";
    case Subcommand::Verify: return "verify";
    case Subcommand::Schreier: return "schreier";
    case Subcommand::Tori: return "tori";
  }
  return "?";
}

std::string to_string(const Command& c) {
  std::string out = to_string(c.sub);
  if (c.group) out += " " + to_string(*c.group);
  if (c.x) out += " --x " + to_string(*c.x);
  if (c.y) out += " --y " + to_string(*c.y);
  if (c.pair) out += " --pair " + to_string(*c.pair);
  if (c.gens) out += " --gens " + to_string(*c.gens);
  if (c.trials != 1) out += " --trials " + std::to_string(c.trials);
  if (c.sub == Subcommand::Tori) {
    out += " --p " + std::to_string(c.p);
    if (c.bound != 10000) out += " --bound " + std::to_string(c.bound);
  }
  if (c.seed != 0) out += " --seed " + std::to_string(c.seed);
  if (c.cap != kDefaultOrderCap) out += " --cap " + std::to_string(c.cap);
  if (c.json) out += " --json";
  return out;
}

std::vector<std::string> split_command_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool have = false;
  int depth = 0;
  char quote = 0;
  for (char ch : line) {
    if (quote) {
      if (ch == quote) quote = 0;
      else cur += ch;
      continue;
    }
    if (ch == '\'' || ch == '"') {
      quote = ch;
      have = true;
      continue;
    }
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth <= 0 && std::isspace(static_cast<unsigned char>(ch))) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
      continue;
    }
    cur += ch;
    have = true;
  }
  if (have) out.push_back(cur);
  return out;
}

ParseOutcome parse_command(const std::vector<std::string>& args) {
  CLI::App app{"Burnside-ring kernels, unbalanced pairs and Schreier/torus cospectrality.", "linequiv"};
  app.require_subcommand(1);
  app.fallthrough();

  Command cmd;
  app.add_flag("--json", cmd.json, "Machine-readable output");
  app.add_option("--seed", cmd.seed, "Seed for randomized checks");
  app.add_option("--cap", cmd.cap, "Group order cap")->check(CLI::PositiveNumber);

  std::string group_text, x_text, y_text, pair_text, gens_text;
  const char* group_help = "Group spec: C(n) | D(n) | M(m,n,r) | P(spec,spec) | gens(deg; perms)";
  struct Entry {
    Subcommand sub;
    const char* help;
  };
  const Entry entries[] = {
      {Subcommand::Info, "Order, generators and conjugacy classes"},
      {Subcommand::Subgroups, "Conjugacy classes of subgroups"},
      {Subcommand::Kernel, "Character matrix and reduced basis of the kernel lattice"},
      {Subcommand::Pairs, "Reduced pairs from the kernel basis with unbalanced flags"},
      {Subcommand::FindUnbalanced, "Construct an unbalanced pair"},
      {Subcommand::Sunada, "Non-conjugate subgroup classes with equal permutation characters"},
      {Subcommand::Verify, "Compare two G-sets"},
      {Subcommand::Schreier, "Compare Schreier graph spectra of a pair"},
      {Subcommand::Tori, "Compare torus quotient spectra via representation numbers"},
  };
  std::vector<std::pair<CLI::App*, Subcommand>> subs;
  for (const auto& e : entries) {
    CLI::App* s = app.add_subcommand(to_string(e.sub), e.help);
    subs.emplace_back(s, e.sub);
    if (e.sub != Subcommand::Tori) s->add_option("group", group_text, group_help)->required();
    if (e.sub == Subcommand::Verify) {
      s->add_option("--x", x_text, "G-set expression, e.g. 2*coset(0)+coset(3)")->required();
      s->add_option("--y", y_text, "G-set expression")->required();
    }
    if (e.sub == Subcommand::Schreier) {
      s->add_option("--pair", pair_text, "Kernel basis index, or X~Y")->required();
      s->add_option("--gens", gens_text, "random:k[:seed] or comma-separated element indices")->required();
      s->add_option("--trials", cmd.trials, "Number of random multisets")->check(CLI::PositiveNumber);
    }
    if (e.sub == Subcommand::Tori) {
      s->add_option("--p", cmd.p, "Order of the translation group")->required()->check(CLI::Range(2L, 1000L));
      s->add_option("--bound", cmd.bound, "Largest value compared")->check(CLI::Range(std::int64_t{0}, std::int64_t{10000000}));
    }
  }

  ParseOutcome out;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, err;
    int code = app.exit(e, o, err);
    out.message = o.str() + err.str();
    out.exit_code = code == 0 ? kExitOk : kExitUsage;
    return out;
  }
  for (auto [s, tag] : subs)
    if (s->parsed()) cmd.sub = tag;

  const char* field = "group";
  try {
    if (cmd.sub != Subcommand::Tori) cmd.group = parse_group_spec(group_text);
    field = "--x";
    if (cmd.sub == Subcommand::Verify) cmd.x = parse_gset_expr(x_text);
    field = "--y";
    if (cmd.sub == Subcommand::Verify) cmd.y = parse_gset_expr(y_text);
    field = "--pair";
    if (cmd.sub == Subcommand::Schreier) cmd.pair = parse_pair_ref(pair_text);
    field = "--gens";
    if (cmd.sub == Subcommand::Schreier) cmd.gens = parse_gens_choice(gens_text);
  } catch (const InvalidArgument& e) {
    out.message = std::string(field) + ": " + e.what() + "\n";
    out.exit_code = kExitUsage;
    return out;
  }
  out.command = std::move(cmd);
  return out;
}

}  // namespace linequiv::cli
