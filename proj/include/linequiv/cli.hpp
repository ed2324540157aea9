#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "linequiv/burnside.hpp"
#include "linequiv/errors.hpp"
#include "linequiv/group.hpp"
#include "linequiv/group_spec.hpp"
#include "linequiv/gset.hpp"

namespace linequiv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

inline constexpr int kSchemaVersion = 1;

class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

GroupSpec parse_group_spec(std::string_view text);

// Disjoint union of coset spaces, flattened: multiplicity per subgroup class index.
struct GSetExpr {
  std::vector<std::pair<std::size_t, std::size_t>> terms;  // (class index, multiplicity), sorted, merged
  friend bool operator==(const GSetExpr&, const GSetExpr&) = default;
};

// coset(i) | k*expr | expr + expr | (expr)
GSetExpr parse_gset_expr(std::string_view text);
std::string to_string(const GSetExpr& e);  // "2*coset(0)+coset(9)", "0" for the empty set

GSetExpr expr_of(const OrbitType& t);
GSet realize(const GSetExpr& e, const SubgroupLattice& lattice);
BurnsideElement difference(const GSetExpr& x, const GSetExpr& y, std::size_t rank);

enum class Subcommand { Info, Subgroups, Kernel, Pairs, FindUnbalanced, Sunada, Verify, Schreier, Tori };
const char* to_string(Subcommand s);

// "random:k[:seed]" or an explicit comma-separated list of element indices.
struct GensChoice {
  struct Random {
    std::size_t k = 2;
    std::optional<std::uint64_t> seed;
    friend bool operator==(const Random&, const Random&) = default;
  };
  std::variant<Random, std::vector<Element>> choice;
  friend bool operator==(const GensChoice&, const GensChoice&) = default;
};
GensChoice parse_gens_choice(std::string_view text);
std::string to_string(const GensChoice& g);

// A kernel basis index, or an explicit "X~Y" pair of G-set expressions.
struct PairRef {
  std::variant<std::size_t, std::pair<GSetExpr, GSetExpr>> ref;
  friend bool operator==(const PairRef&, const PairRef&) = default;
};
PairRef parse_pair_ref(std::string_view text);
std::string to_string(const PairRef& p);

struct Command {
  Subcommand sub = Subcommand::Info;
  std::optional<GroupSpec> group;  // every subcommand except tori
  std::optional<GSetExpr> x, y;    // verify
  std::optional<PairRef> pair;     // schreier
  std::optional<GensChoice> gens;  // schreier
  std::size_t trials = 1;          // schreier, random multisets only
  long p = 2;                      // tori
  std::int64_t bound = 10000;      // tori
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultOrderCap;
  bool json = false;

  friend bool operator==(const Command&, const Command&) = default;
};

// Canonical command line, without the program name.
std::string to_string(const Command& c);

// Splits on whitespace outside parentheses and quotes.
std::vector<std::string> split_command_line(std::string_view line);

struct ParseOutcome {
  std::optional<Command> command;
  std::string message;  // help text or error
  int exit_code = kExitOk;
};

// args excludes the program name.
ParseOutcome parse_command(const std::vector<std::string>& args);

struct Report {
  nlohmann::ordered_json json;
  std::string text;
  int exit_code = kExitOk;

  std::string render(bool as_json) const;
};

Report run(const Command& c);

}  // namespace linequiv::cli
