#include <sstream>

#include "sdw/cli.hpp"

namespace sdw::cli {

namespace {

template <class T, class F>
std::string join(const std::vector<T>& xs, F show) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += show(xs[i]);
  }
  return out;
}

std::string ints(const std::vector<int>& xs) {
  return "[" + join(xs, [](int v) { return std::to_string(v); }) + "]";
}

std::string same(const std::string& s) { return s; }

std::string arg_text(const Arg& a) {
  if (a.kind == Arg::Kind::List) return "[" + join(a.items, arg_text) + "]";
  return a.text;
}

struct Printer {
  std::ostream& out;

  void operator()(const RingDecl& d) {
    out << "ring " << d.name << " = polynomial_ring(";
    if (d.characteristic) out << "char " << *d.characteristic << ", ";
    out << "vars [" << join(d.vars, same) << "]";
    if (!d.weights.empty()) out << ", weights " << ints(d.weights);
    out << ")";
  }
  void operator()(const QuotientDecl& d) { out << "ring " << d.name << " = quotient(" << d.ring << ", " << d.ideal << ")"; }
  void operator()(const IdealDecl& d) {
    out << "ideal " << d.name << " = ideal(" << d.ring << "; " << join(d.polys, same) << ")";
  }
  void operator()(const CokerDecl& d) {
    out << "module " << d.name << " = coker(" << d.ring << "; degrees " << ints(d.degrees) << "; matrix ["
        << join(d.matrix, [](const std::vector<std::string>& row) { return "[" + join(row, same) + "]"; })
        << "])";
  }
  void operator()(const ModuleDecl& d) {
    out << "module " << d.name << " = " << d.func << "(" << join(d.args, arg_text) << ")";
  }
  void operator()(const CheckCmd& c) {
    out << "check " << c.check << "(" << join(c.args, arg_text) << ")";
    if (c.expect) out << " expect " << to_string(*c.expect);
    if (c.bound) out << " bound " << *c.bound;
  }
  void operator()(const ReportCmd& r) { out << "report " << r.format << " " << r.path; }
};

}  // namespace

std::string print_session(const Session& s) {
  std::ostringstream out;
  for (const auto& st : s.statements) {
    std::visit(Printer{out}, st.node);
    out << ";\n";
  }
  return out.str();
}

}  // namespace sdw::cli
