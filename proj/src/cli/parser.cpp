#include <algorithm>
#include <cctype>
#include <map>
#include <memory>

#include "signatures.hpp"
#include "sdw/cli.hpp"
#include "sdw/poly_parse.hpp"

namespace sdw::cli {

SessionError::SessionError(Kind kind, Pos pos, const std::string& msg)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + msg),
      kind_(kind),
      pos_(pos),
      msg_(msg) {}

bool Statement::is_declaration() const {
  return !std::holds_alternative<CheckCmd>(node) && !std::holds_alternative<ReportCmd>(node);
}

int Session::declarations() const {
  int n = 0;
  for (const auto& s : statements) n += s.is_declaration();
  return n;
}

int Session::checks() const {
  int n = 0;
  for (const auto& s : statements) n += std::holds_alternative<CheckCmd>(s.node);
  return n;
}

namespace {

using K = SessionError::Kind;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

bool is_integer(std::string_view s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + i, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!is_space(c)) out += c;
  return out;
}

enum class SymKind { Ring, Ideal, Module };

const char* kind_name(SymKind k) {
  switch (k) {
    case SymKind::Ring: return "ring";
    case SymKind::Ideal: return "ideal";
    case SymKind::Module: return "module";
  }
  return "?";
}

struct Symbol {
  SymKind kind;
  RingPtr ambient;
};

class Parser {
 public:
  Parser(std::string_view src, std::uint32_t default_char) : src_(src), default_char_(default_char) {
    line_starts_.push_back(0);
    for (std::size_t k = 0; k < src_.size(); ++k)
      if (src_[k] == '\n') line_starts_.push_back(k + 1);
  }

  Session run() {
    Session s;
    while (skip(), i_ < src_.size()) s.statements.push_back(statement());
    return s;
  }

 private:
  std::string_view src_;
  std::size_t i_ = 0;
  std::uint32_t default_char_;
  std::vector<std::size_t> line_starts_;
  std::map<std::string, Symbol> symbols_;

  Pos pos_at(std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    int line = static_cast<int>(it - line_starts_.begin());
    return {line, static_cast<int>(offset - line_starts_[line - 1]) + 1};
  }
  Pos here() {
    skip();
    return pos_at(i_);
  }

  [[noreturn]] void fail(K kind, Pos p, const std::string& msg) const { throw SessionError(kind, p, msg); }
  [[noreturn]] void syntax(const std::string& msg) {
    if (skip(), i_ >= src_.size()) fail(K::Syntax, pos_at(i_), msg + " before end of input");
    fail(K::Syntax, pos_at(i_), msg);
  }

  void skip() {
    while (i_ < src_.size()) {
      if (is_space(src_[i_])) {
        ++i_;
      } else if (src_[i_] == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip();
    return i_ < src_.size() && src_[i_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }

  // Reported just after the previous token.
  void expect(char c) {
    if (eat(c)) return;
    std::size_t k = i_;
    while (k > 0 && is_space(src_[k - 1])) --k;
    fail(K::Syntax, pos_at(k), std::string("expected '") + c + "'" + (i_ >= src_.size() ? " before end of input" : ""));
  }

  bool at_ident() { return skip(), i_ < src_.size() && is_ident_start(src_[i_]); }

  std::string ident(const char* what) {
    if (!at_ident()) syntax(std::string("expected ") + what);
    std::size_t start = i_;
    while (i_ < src_.size() && is_ident_char(src_[i_])) ++i_;
    return std::string(src_.substr(start, i_ - start));
  }

  void keyword(const char* kw) {
    Pos p = here();
    if (!at_ident() || ident(kw) != kw) fail(K::Syntax, p, std::string("expected '") + kw + "'");
  }

  long long integer(const char* what, long long lo, long long hi) {
    Pos p = here();
    std::size_t start = i_;
    if (i_ < src_.size() && src_[i_] == '-') ++i_;
    std::size_t digits = i_;
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
    if (i_ == digits) {
      i_ = start;
      syntax(std::string("expected ") + what);
    }
    if (i_ - digits > 12) fail(K::Type, p, "integer out of range");
    long long v = std::stoll(std::string(src_.substr(start, i_ - start)));
    if (v < lo || v > hi) fail(K::Type, p, "integer out of range");
    return v;
  }

  // Raw text up to a ',', ')', ']', '[' or ';' outside parentheses.
  std::pair<std::size_t, std::string_view> raw_item() {
    skip();
    std::size_t start = i_;
    int depth = 0;
    for (; i_ < src_.size(); ++i_) {
      char c = src_[i_];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (depth == 0) break;
        --depth;
      } else if (depth == 0 && (c == ',' || c == ']' || c == '[' || c == ';' || c == '#')) {
        break;
      }
    }
    std::size_t end = i_;
    while (end > start && is_space(src_[end - 1])) --end;
    if (end == start) syntax("expected an expression");
    return {start, src_.substr(start, end - start)};
  }

  const Symbol& lookup(const std::string& name, Pos p) const {
    auto it = symbols_.find(name);
    if (it == symbols_.end()) fail(K::UndefinedSymbol, p, "undefined symbol '" + name + "'");
    return it->second;
  }

  const Symbol& lookup(const std::string& name, Pos p, SymKind kind) const {
    const auto& s = lookup(name, p);
    if (s.kind != kind)
      fail(K::Type, p, "'" + name + "' is a " + kind_name(s.kind) + ", expected a " + kind_name(kind));
    return s;
  }

  void define(const std::string& name, Pos p, Symbol sym) {
    if (symbols_.count(name)) fail(K::Type, p, "'" + name + "' is already defined");
    symbols_.emplace(name, std::move(sym));
  }

  // Validates a homogeneous polynomial at source offset `start`; returns it
  // with whitespace removed and reports its degree (empty for zero).
  std::string polynomial(const RingPtr& P, std::size_t start, std::string_view text,
                         std::optional<int>* degree = nullptr) {
    Polynomial f;
    try {
      f = parse_polynomial(P, text);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      K kind = msg.rfind("unknown variable", 0) == 0 ? K::UndefinedSymbol : K::Syntax;
      fail(kind, pos_at(start + e.offset()), msg);
    } catch (const std::exception& e) {
      fail(K::Type, pos_at(start), e.what());
    }
    if (!f.is_homogeneous())
      fail(K::Inhomogeneous, pos_at(start), "inhomogeneous polynomial '" + std::string(text) + "'");
    if (degree) *degree = f.is_zero() ? std::nullopt : f.homogeneous_degree();
    return strip_spaces(text);
  }

  Statement statement() {
    Statement st;
    st.pos = here();
    std::string kw = ident("a statement keyword");
    if (kw == "ring") {
      std::visit([&](auto&& d) { st.node = std::move(d); }, ring_decl());
    } else if (kw == "ideal") {
      st.node = ideal_decl();
    } else if (kw == "module") {
      std::visit([&](auto&& d) { st.node = std::move(d); }, module_decl());
    } else if (kw == "check") {
      st.node = check_cmd();
    } else if (kw == "report") {
      st.node = report_cmd();
    } else {
      fail(K::Syntax, st.pos, "unknown statement '" + kw + "'");
    }
    expect(';');
    return st;
  }

  template <class T, class F>
  std::vector<T> bracketed(F item) {
    std::vector<T> out;
    expect('[');
    if (eat(']')) return out;
    do out.push_back(item());
    while (eat(','));
    expect(']');
    return out;
  }

  std::vector<int> int_list() {
    return bracketed<int>([&] { return static_cast<int>(integer("an integer", -100000, 100000)); });
  }

  std::variant<RingDecl, QuotientDecl> ring_decl() {
    Pos name_pos = here();
    std::string name = ident("a ring name");
    expect('=');
    Pos ctor_pos = here();
    std::string ctor = ident("polynomial_ring or quotient");
    if (ctor == "quotient") return quotient_rest(name, name_pos);
    if (ctor != "polynomial_ring") fail(K::Syntax, ctor_pos, "expected polynomial_ring or quotient");

    RingDecl d;
    d.name = name;
    expect('(');
    std::size_t save = (skip(), i_);
    if (at_ident() && ident("vars") == "char") {
      Pos p = here();
      long long c = integer("a characteristic", 2, 2147483647LL);
      if (!is_prime(static_cast<std::uint64_t>(c))) fail(K::Type, p, "characteristic must be prime");
      d.characteristic = static_cast<std::uint32_t>(c);
      expect(',');
    } else {
      i_ = save;
    }
    keyword("vars");
    Pos vars_pos = here();
    d.vars = bracketed<std::string>([&] { return ident("a variable name"); });
    if (eat(',')) {
      keyword("weights");
      d.weights = int_list();
    }
    expect(')');
    RingPtr P;
    try {
      P = std::make_shared<PolyRing>(PrimeField(d.characteristic.value_or(default_char_)), d.vars, d.weights);
    } catch (const std::exception& e) {
      fail(K::Type, vars_pos, e.what());
    }
    define(d.name, name_pos, {SymKind::Ring, P});
    return d;
  }

  QuotientDecl quotient_rest(const std::string& name, Pos name_pos) {
    QuotientDecl d;
    d.name = name;
    expect('(');
    Pos rp = here();
    d.ring = ident("a ring name");
    RingPtr P = lookup(d.ring, rp, SymKind::Ring).ambient;
    expect(',');
    Pos ip = here();
    d.ideal = ident("an ideal name");
    if (lookup(d.ideal, ip, SymKind::Ideal).ambient != P)
      fail(K::Type, ip, "ideal '" + d.ideal + "' lives over a different ring");
    expect(')');
    define(d.name, name_pos, {SymKind::Ring, P});
    return d;
  }

  IdealDecl ideal_decl() {
    IdealDecl d;
    Pos name_pos = here();
    d.name = ident("an ideal name");
    expect('=');
    keyword("ideal");
    expect('(');
    Pos rp = here();
    d.ring = ident("a ring name");
    RingPtr P = lookup(d.ring, rp, SymKind::Ring).ambient;
    expect(';');
    do {
      auto [start, text] = raw_item();
      d.polys.push_back(polynomial(P, start, text));
    } while (eat(','));
    expect(')');
    define(d.name, name_pos, {SymKind::Ideal, P});
    return d;
  }

  std::variant<CokerDecl, ModuleDecl> module_decl() {
    Pos name_pos = here();
    std::string name = ident("a module name");
    expect('=');
    Pos fp = here();
    std::string func = ident("a module constructor");
    if (func == "coker") return coker_rest(name, name_pos);
    const Signature* sig = find_signature(kModuleFunctions, func);
    if (!sig) fail(K::Syntax, fp, "unknown module constructor '" + func + "'");
    ModuleDecl d;
    d.name = name;
    d.func = func;
    d.args = call_args();
    RingPtr P = check_args(*sig, d.args, fp);
    define(name, name_pos, {SymKind::Module, P});
    return d;
  }

  CokerDecl coker_rest(const std::string& name, Pos name_pos) {
    CokerDecl d;
    d.name = name;
    expect('(');
    Pos rp = here();
    d.ring = ident("a ring name");
    RingPtr P = lookup(d.ring, rp, SymKind::Ring).ambient;
    expect(';');
    keyword("degrees");
    d.degrees = int_list();
    expect(';');
    keyword("matrix");

    struct Entry {
      std::optional<int> degree;
      Pos pos;
    };
    std::vector<std::vector<Entry>> info;
    auto row = [&] {
      Pos row_pos = here();
      std::vector<Entry> row_info;
      auto entries = bracketed<std::string>([&] {
        auto [start, text] = raw_item();
        std::optional<int> deg;
        auto out = polynomial(P, start, text, &deg);
        row_info.push_back({deg, pos_at(start)});
        return out;
      });
      if (!d.matrix.empty() && entries.size() != d.matrix.front().size())
        fail(K::Type, row_pos, "matrix rows have different lengths");
      d.matrix.push_back(entries);
      info.push_back(std::move(row_info));
      return 0;
    };
    bracketed<int>(row);
    expect(')');

    if (d.matrix.size() != d.degrees.size())
      fail(K::Type, name_pos, "coker '" + name + "': " + std::to_string(d.degrees.size()) + " degrees but " +
                                  std::to_string(d.matrix.size()) + " matrix rows");
    const std::size_t cols = d.matrix.empty() ? 0 : d.matrix.front().size();
    for (std::size_t j = 0; j < cols; ++j) {
      std::optional<int> col_degree;
      for (std::size_t i = 0; i < d.matrix.size(); ++i) {
        const auto& e = info[i][j];
        if (!e.degree) continue;
        int deg = *e.degree + d.degrees[i];
        if (col_degree && *col_degree != deg)
          fail(K::Inhomogeneous, e.pos,
               "inhomogeneous relation in column " + std::to_string(j + 1) + " of '" + name + "'");
        col_degree = deg;
      }
    }
    define(name, name_pos, {SymKind::Module, P});
    return d;
  }

  Arg arg() {
    Arg a;
    a.pos = here();
    a.offset = i_;
    if (peek('[')) {
      a.kind = Arg::Kind::List;
      a.items = bracketed<Arg>([&] { return arg(); });
      return a;
    }
    auto [start, text] = raw_item();
    a.text = strip_spaces(text);
    if (is_identifier(a.text))
      a.kind = Arg::Kind::Name;
    else if (is_integer(a.text))
      a.kind = Arg::Kind::Integer;
    else
      a.kind = Arg::Kind::Poly;
    return a;
  }

  std::vector<Arg> call_args() {
    expect('(');
    std::vector<Arg> out;
    if (eat(')')) return out;
    do out.push_back(arg());
    while (eat(','));
    expect(')');
    return out;
  }

  // Arity and kinds; returns the ambient ring shared by the ring and module arguments.
  RingPtr check_args(const Signature& sig, const std::vector<Arg>& args, Pos call_pos) {
    std::string codes(sig.args);
    const bool variadic = !codes.empty() && codes.back() == '+';
    if (variadic) codes.pop_back();
    const std::size_t need = codes.size();
    if (variadic ? args.size() < need : args.size() != need)
      fail(K::Type, call_pos,
           std::string(sig.name) + " expects " + (variadic ? "at least " : "") + std::to_string(need) +
               " argument" + (need == 1 ? "" : "s") + ", got " + std::to_string(args.size()));
    auto code = [&](std::size_t k) { return codes[std::min(k, codes.size() - 1)]; };

    RingPtr P;
    for (std::size_t k = 0; k < args.size(); ++k) {
      char c = code(k);
      const Arg& a = args[k];
      if (c != 'r' && c != 'm') continue;
      if (a.kind != Arg::Kind::Name) fail(K::Type, a.pos, "expected a name");
      const auto& s = lookup(a.text, a.pos);
      bool ok = c == 'r' ? s.kind == SymKind::Ring : s.kind != SymKind::Ideal;
      if (!ok)
        fail(K::Type, a.pos,
             "'" + a.text + "' is a " + kind_name(s.kind) + ", expected " + (c == 'r' ? "a ring" : "a module"));
      if (!P) P = s.ambient;
      else if (P != s.ambient) fail(K::Type, a.pos, "arguments live over different polynomial rings");
    }
    for (std::size_t k = 0; k < args.size(); ++k) {
      char c = code(k);
      const Arg& a = args[k];
      if (c == 'n') {
        if (a.kind != Arg::Kind::Integer || a.text.size() > 7) fail(K::Type, a.pos, "expected an integer");
      } else if (c == 'd') {
        if (a.kind != Arg::Kind::List) fail(K::Type, a.pos, "expected a list of integers");
        for (const auto& it : a.items)
          if (it.kind != Arg::Kind::Integer || it.text.size() > 7) fail(K::Type, it.pos, "expected an integer");
      } else if (c == 'p') {
        if (a.kind != Arg::Kind::List) fail(K::Type, a.pos, "expected a list of polynomials");
        for (const auto& it : a.items) {
          if (it.kind == Arg::Kind::List) fail(K::Type, it.pos, "expected a polynomial");
          polynomial(P, it.offset, src_.substr(it.offset, raw_length(it.offset)));
        }
      }
    }
    return P;
  }

  std::size_t raw_length(std::size_t start) const {
    int depth = 0;
    std::size_t k = start;
    for (; k < src_.size(); ++k) {
      char c = src_[k];
      if (c == '(') ++depth;
      else if (c == ')' && depth-- == 0) break;
      else if (depth == 0 && (c == ',' || c == ']' || c == '[' || c == ';' || c == '#')) break;
    }
    while (k > start && is_space(src_[k - 1])) --k;
    return k - start;
  }

  CheckCmd check_cmd() {
    CheckCmd c;
    Pos p = here();
    c.check = ident("a check name");
    const Signature* sig = find_signature(kChecks, c.check);
    if (!sig) fail(K::Syntax, p, "unknown check '" + c.check + "'");
    c.args = call_args();
    check_args(*sig, c.args, p);
    while (at_ident()) {
      Pos kp = here();
      std::string kw = ident("expect or bound");
      if (kw == "expect" && !c.expect) {
        Pos vp = here();
        std::string v = ident("a verdict");
        try {
          c.expect = verdict_from_string(v);
        } catch (const std::invalid_argument&) {
          fail(K::Syntax, vp, "unknown verdict '" + v + "'");
        }
      } else if (kw == "bound" && !c.bound) {
        c.bound = static_cast<int>(integer("a bound", 1, 1000));
      } else {
        fail(K::Syntax, kp, "unexpected '" + kw + "'");
      }
    }
    return c;
  }

  ReportCmd report_cmd() {
    ReportCmd r;
    Pos fp = here();
    r.format = ident("a report format");
    if (r.format != "json" && r.format != "text") fail(K::Syntax, fp, "report format must be json or text");
    skip();
    std::size_t start = i_;
    while (i_ < src_.size() && src_[i_] != ';' && src_[i_] != '\n') ++i_;
    std::size_t end = i_;
    while (end > start && is_space(src_[end - 1])) --end;
    if (end == start) syntax("expected a report path");
    r.path = std::string(src_.substr(start, end - start));
    return r;
  }
};

}  // namespace

Session parse_session(std::string_view text, std::uint32_t default_char) {
  return Parser(text, default_char).run();
}

}  // namespace sdw::cli
