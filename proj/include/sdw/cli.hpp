#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sdw/field.hpp"
#include "sdw/report.hpp"

namespace sdw::cli {

struct Pos {
  int line = 1;
  int column = 1;
};

class SessionError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UndefinedSymbol, Inhomogeneous, Type };

  SessionError(Kind kind, Pos pos, const std::string& msg);
  Kind kind() const { return kind_; }
  Pos pos() const { return pos_; }
  /// The message without the position prefix.
  const std::string& message() const { return msg_; }

 private:
  Kind kind_;
  Pos pos_;
  std::string msg_;
};

/// A call argument: a symbol name, an integer, a polynomial or a bracketed list.
struct Arg {
  enum class Kind { Name, Integer, Poly, List };
  Kind kind = Kind::Name;
  /// Name or integer text, or the polynomial with whitespace removed.
  std::string text;
  std::vector<Arg> items;
  Pos pos;
  std::size_t offset = 0;

  bool operator==(const Arg& o) const { return kind == o.kind && text == o.text && items == o.items; }
};

struct RingDecl {
  std::string name;
  std::optional<std::uint32_t> characteristic;
  std::vector<std::string> vars;
  std::vector<int> weights;
  bool operator==(const RingDecl&) const = default;
};

struct QuotientDecl {
  std::string name, ring, ideal;
  bool operator==(const QuotientDecl&) const = default;
};

struct IdealDecl {
  std::string name, ring;
  std::vector<std::string> polys;
  bool operator==(const IdealDecl&) const = default;
};

/// Rows are generators, columns relations.
struct CokerDecl {
  std::string name, ring;
  std::vector<int> degrees;
  std::vector<std::vector<std::string>> matrix;
  bool operator==(const CokerDecl&) const = default;
};

/// module NAME = FUNC(args) for every constructor other than coker.
struct ModuleDecl {
  std::string name, func;
  std::vector<Arg> args;
  bool operator==(const ModuleDecl&) const = default;
};

struct CheckCmd {
  std::string check;
  std::vector<Arg> args;
  std::optional<Verdict> expect;
  std::optional<int> bound;
  bool operator==(const CheckCmd&) const = default;
};

struct ReportCmd {
  std::string format, path;
  bool operator==(const ReportCmd&) const = default;
};

struct Statement {
  std::variant<RingDecl, QuotientDecl, IdealDecl, CokerDecl, ModuleDecl, CheckCmd, ReportCmd> node;
  Pos pos;

  bool is_declaration() const;
  bool operator==(const Statement& o) const { return node == o.node; }
};

struct Session {
  std::vector<Statement> statements;

  int declarations() const;
  int checks() const;
  bool operator==(const Session&) const = default;
};

/// Parses and validates: names are defined before use and have the right
/// kind, polynomials parse over their ring and are homogeneous, coker columns
/// are homogeneous.  `default_char` applies to rings declared without `char`.
Session parse_session(std::string_view text,
                      std::uint32_t default_char = PrimeField::kDefaultCharacteristic);

/// Canonical source text; parse_session(print_session(s)) == s.
std::string print_session(const Session& s);

struct RunConfig {
  std::uint64_t seed = 1;
  /// Ext bound for checks without a `bound` clause; 0 means dim P + 2.
  int ext_bound = 0;
  /// Per declaration and per check; 0 disables the limit.
  double timeout_s = 0;
  /// Checks evaluated concurrently.
  int jobs = 1;
  std::uint32_t default_char = PrimeField::kDefaultCharacteristic;
};

/// Evaluates declarations in order, then the checks; a failing declaration or
/// check is recorded as unknown with an error and the run continues.  Records
/// follow source order.
CheckReport run_session(const Session& s, const RunConfig& config);

/// Writes the report to every `report FORMAT PATH;` target of the session.
void write_reports(const Session& s, const CheckReport& report);

/// A check failed: it errored, or it contradicts its declared expectation.
bool check_failed(const CheckRecord& r);
/// 0 when no check failed, 1 otherwise.
int exit_code(const CheckReport& report);

std::string to_json(const CheckReport& report, bool timings = true);
/// Throws std::invalid_argument on malformed input.
CheckReport report_from_json(std::string_view text);
std::string to_text(const CheckReport& report);

/// Names of the checks understood by run_session.
std::vector<std::string> check_names();

}  // namespace sdw::cli
