#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "signatures.hpp"
#include "sdw/cli.hpp"
#include "sdw/deadline.hpp"
#include "sdw/oracle.hpp"
#include "sdw/poly_parse.hpp"
#include "sdw/semidual.hpp"

namespace sdw::cli {

namespace {

struct Value {
  QRingPtr ring;
  RingPtr ambient;
  std::vector<Polynomial> ideal;
  std::optional<PresentedModule> module;
  std::optional<std::string> error;
};

using Env = std::map<std::string, Value>;

std::string arg_text(const Arg& a) {
  if (a.kind != Arg::Kind::List) return a.text;
  std::string out = "[";
  for (std::size_t i = 0; i < a.items.size(); ++i) out += (i ? "," : "") + arg_text(a.items[i]);
  return out + "]";
}

std::string series_string(const HilbertSeries& h) { return h.numerator.to_string(); }

class Evaluator {
 public:
  Evaluator(const Env& env, const RunConfig& config) : env_(env), config_(config) {}

  const Value& value(const Arg& a) const {
    const auto& v = env_.at(a.text);
    if (v.error) throw std::runtime_error("'" + a.text + "' is unavailable: " + *v.error);
    return v;
  }
  const QRingPtr& ring(const Arg& a) const { return value(a).ring; }
  /// Rings are read as cyclic modules over themselves.
  PresentedModule module(const Arg& a) const {
    const auto& v = value(a);
    return v.module ? *v.module : PresentedModule::ring_module(v.ring);
  }
  int integer(const Arg& a) const { return std::stoi(a.text); }
  std::vector<Polynomial> polys(const Arg& a, const RingPtr& P) const {
    std::vector<Polynomial> out;
    for (const auto& it : a.items) out.push_back(parse_polynomial(P, it.text));
    return out;
  }

  int bound(const std::optional<int>& declared, const QRingPtr& R) const {
    if (declared) return *declared;
    if (config_.ext_bound > 0) return config_.ext_bound;
    return R->num_vars() + 2;
  }

  std::optional<PresentedModule> omega_if_cm(const QRingPtr& R) const {
    if (!ring_invariants(R).is_CM) return std::nullopt;
    return canonical_module(R);
  }

 private:
  const Env& env_;
  const RunConfig& config_;
};

void same_ring(const PresentedModule& M, const PresentedModule& N) {
  if (M.ring() != N.ring()) throw std::invalid_argument("modules live over different rings");
}

Value evaluate(const Statement& st, const Env& env, const RunConfig& config) {
  Evaluator ev(env, config);
  Value out;
  auto as_module = [&](PresentedModule M) {
    out.ring = M.ring();
    out.ambient = M.ring()->poly_ring();
    out.module = std::move(M);
  };
  if (const auto* d = std::get_if<RingDecl>(&st.node)) {
    out.ambient = std::make_shared<PolyRing>(PrimeField(d->characteristic.value_or(config.default_char)), d->vars,
                                             d->weights);
    out.ring = QuotientRing::polynomial(out.ambient);
  } else if (const auto* d = std::get_if<IdealDecl>(&st.node)) {
    out.ambient = env.at(d->ring).ambient;
    for (const auto& p : d->polys) out.ideal.push_back(parse_polynomial(out.ambient, p));
  } else if (const auto* d = std::get_if<QuotientDecl>(&st.node)) {
    const auto& base = ev.value(Arg{Arg::Kind::Name, d->ring, {}, {}, 0});
    const auto& ideal = ev.value(Arg{Arg::Kind::Name, d->ideal, {}, {}, 0});
    auto gens = base.ring->generators();
    gens.insert(gens.end(), ideal.ideal.begin(), ideal.ideal.end());
    out.ambient = base.ambient;
    out.ring = QuotientRing::make(out.ambient, gens);
  } else if (const auto* d = std::get_if<CokerDecl>(&st.node)) {
    const auto& R = ev.ring(Arg{Arg::Kind::Name, d->ring, {}, {}, 0});
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& row : d->matrix) {
      rows.emplace_back();
      for (const auto& e : row) rows.back().push_back(parse_polynomial(R->poly_ring(), e));
    }
    as_module(PresentedModule::from_matrix(R, d->degrees, rows));
  } else if (const auto* d = std::get_if<ModuleDecl>(&st.node)) {
    const auto& a = d->args;
    const std::string& f = d->func;
    if (f == "ext") {
      same_ring(ev.module(a[1]), ev.module(a[2]));
      as_module(ext_module(ev.integer(a[0]), ev.module(a[1]), ev.module(a[2])));
    } else if (f == "canonical") {
      as_module(canonical_module(ev.ring(a[0])));
    } else if (f == "jls") {
      as_module(jls_C(ev.ring(a[0]), ev.ring(a[1])));
    } else if (f == "residue_field") {
      as_module(PresentedModule::residue_field(ev.ring(a[0])));
    } else if (f == "free") {
      std::vector<int> degs;
      for (const auto& it : a[1].items) degs.push_back(ev.integer(it));
      as_module(PresentedModule::free(ev.ring(a[0]), degs));
    } else if (f == "syzygy") {
      as_module(minimal_presentation(syzygy_module(ev.module(a[0]), ev.integer(a[1]))).module);
    } else if (f == "transpose") {
      same_ring(ev.module(a[0]), ev.module(a[1]));
      as_module(transpose_C(ev.module(a[0]), ev.module(a[1])));
    } else if (f == "hom") {
      same_ring(ev.module(a[0]), ev.module(a[1]));
      as_module(c_dual(ev.module(a[0]), ev.module(a[1])));
    } else if (f == "restrict") {
      as_module(restrict_to_quotient(ev.module(a[0]), ev.ring(a[1])));
    } else if (f == "twist") {
      as_module(ev.module(a[0]).twist(ev.integer(a[1])));
    } else if (f == "sum") {
      std::vector<PresentedModule> parts;
      for (const auto& x : a) parts.push_back(ev.module(x));
      for (const auto& p : parts) same_ring(parts.front(), p);
      as_module(direct_sum(parts));
    } else if (f == "random") {
      as_module(random_coker(ev.ring(a[0]), static_cast<std::uint64_t>(ev.integer(a[1]))));
    } else {
      throw std::logic_error("unhandled module constructor " + f);
    }
  }
  return out;
}

const std::string& declared_name(const Statement& st) {
  return std::visit(
      [](const auto& d) -> const std::string& {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, CheckCmd>) return d.check;
        else if constexpr (std::is_same_v<T, ReportCmd>) return d.format;
        else return d.name;
      },
      st.node);
}

// Collapses a harness report into one record.  Sub-records rejected for
// missing hypotheses count as skipped.
void aggregate(CheckRecord& rec, const CheckReport& sub) {
  int agree = 0, skipped = 0, unknown = 0;
  std::vector<std::string> failures, errors;
  std::set<std::string> seen;
  for (const auto& c : sub.checks) {
    for (const auto& h : c.hypotheses)
      if (seen.insert(h.name + "|" + std::to_string(h.holds)).second) rec.hypotheses.push_back(h);
    std::string label = c.name;
    for (const auto& in : c.inputs) label += " " + in;
    if (c.error && *c.error == "hypothesis flags missing") {
      ++skipped;
    } else if (c.error) {
      errors.push_back(label + ": " + *c.error);
    } else if (c.verdict == Verdict::False) {
      failures.push_back(label + ": " + c.witness);
    } else if (c.verdict == Verdict::Unknown) {
      ++unknown;
    } else {
      ++agree;
    }
  }
  std::ostringstream w;
  w << sub.checks.size() << " cases: " << agree << " agree";
  if (!failures.empty()) w << ", " << failures.size() << " disagree";
  if (skipped) w << ", " << skipped << " skipped (hypotheses not verified)";
  if (unknown) w << ", " << unknown << " unknown";
  if (!errors.empty()) w << ", " << errors.size() << " errors";
  for (std::size_t i = 0; i < failures.size() && i < 3; ++i) w << "; " << failures[i];
  rec.witness = w.str();
  if (!failures.empty()) rec.verdict = Verdict::False;
  else if (!errors.empty()) rec.error = errors.front();
  else if (sub.checks.empty() || skipped == static_cast<int>(sub.checks.size())) rec.verdict = Verdict::Unsupported;
  else if (unknown || skipped) rec.verdict = Verdict::Unknown;
  else rec.verdict = Verdict::True;
}

void run_check(const CheckCmd& c, const Env& env, const RunConfig& config, CheckRecord& rec) {
  Evaluator ev(env, config);
  const auto& a = c.args;
  const std::string& name = c.check;
  auto std_modules = [&](const QRingPtr& R, const PresentedModule& C) {
    return standard_modules(R, C, ev.omega_if_cm(R), config.seed);
  };
  auto canonical = [&](const QRingPtr& R) { return canonical_module(R); };

  if (name == "semidualizing") {
    const auto& C = ev.module(a[0]);
    int B = ev.bound(c.bound, C.ring());
    auto cert = is_semidualizing(C, B);
    rec.verdict = cert.verdict;
    if (cert.certified()) rec.bound = B;
    rec.witness = cert.witness;
  } else if (name == "isomorphic" || name == "isomorphic_local") {
    same_ring(ev.module(a[0]), ev.module(a[1]));
    auto r = name == "isomorphic" ? is_isomorphic(ev.module(a[0]), ev.module(a[1]), 20, config.seed)
                                  : is_isomorphic_local(ev.module(a[0]), ev.module(a[1]), 20, config.seed);
    rec.verdict = r.verdict == Tri::True ? Verdict::True : r.verdict == Tri::False ? Verdict::False : Verdict::Unknown;
    rec.witness = r.certificate;
  } else if (name == "cohen_macaulay") {
    auto M = ev.module(a[0]);
    if (M.is_zero()) throw std::invalid_argument("zero module");
    int d = depth_graded(M), e = krull_dim(M);
    rec.verdict = from_bool(d == e);
    rec.witness = "depth " + std::to_string(d) + ", dim " + std::to_string(e);
  } else if (name == "gorenstein") {
    const auto& R = ev.ring(a[0]);
    auto inv = ring_invariants(R);
    if (!inv.is_CM) {
      rec.verdict = Verdict::False;
      rec.witness = "not Cohen-Macaulay: depth " + std::to_string(inv.depth) + ", dim " + std::to_string(inv.dim);
    } else {
      int m = mu(canonical(R));
      rec.verdict = from_bool(m == 1);
      rec.witness = "mu(omega) = " + std::to_string(m);
    }
  } else if (name == "locally_gorenstein") {
    const auto& R = ev.ring(a[0]);
    auto p = ev.polys(a[1], R->poly_ring());
    rec.verdict = from_bool(is_locally_gorenstein_at(R, p, canonical(R)));
    rec.witness = rec.verdict == Verdict::True ? "Fitt_1(omega) not contained in p" : "Fitt_1(omega) contained in p";
  } else if (name == "g_condition") {
    const auto& R = ev.ring(a[0]);
    auto g = check_G_condition(R, ev.module(a[1]), ev.integer(a[2]), canonical(R));
    rec.verdict = g.verdict;
    rec.witness = g.detail;
  } else if (name == "dim" || name == "depth" || name == "mu") {
    auto M = ev.module(a[0]);
    int v = name == "dim" ? krull_dim(M) : name == "depth" ? depth_graded(M) : mu(M);
    rec.verdict = from_bool(v == ev.integer(a[1]));
    rec.witness = name + " = " + std::to_string(v);
  } else if (name == "serre") {
    auto s = satisfies_Sn(ev.module(a[0]), ev.integer(a[1]));
    rec.verdict = s.verdict;
    rec.witness = s.detail;
  } else if (name == "torsionfree") {
    same_ring(ev.module(a[0]), ev.module(a[1]));
    int n = ev.integer(a[2]);
    auto t = is_n_C_torsionfree(ev.module(a[0]), ev.module(a[1]), n);
    rec.verdict = t.verdict;
    rec.witness = t.failing_index ? "Ext^" + std::to_string(t.failing_index) + "(Tr_C M, C) != 0"
                                  : "Ext^{1.." + std::to_string(n) + "}(Tr_C M, C) = 0";
  } else if (name == "pushforward") {
    same_ring(ev.module(a[0]), ev.module(a[1]));
    auto pf = universal_pushforward(ev.module(a[0]), ev.module(a[1]), ev.integer(a[2]), true);
    if (!pf.success) {
      rec.verdict = Verdict::False;
      rec.witness = "stage " + std::to_string(pf.failed_stage) + " not injective";
      if (pf.obstruction) rec.witness += ", kernel series " + series_string(pf.obstruction->hilbert_series());
    } else if (pf.certified && pf.chain_exact && pf.dual_exact) {
      rec.verdict = Verdict::True;
      rec.witness = "chain and C-dual exact";
    } else {
      rec.verdict = Verdict::Unknown;
      rec.witness = pf.detail;
    }
  } else if (name == "syzygy") {
    same_ring(ev.module(a[0]), ev.module(a[1]));
    const auto& M = ev.module(a[0]);
    auto s = is_n_C_syzygy(M, ev.module(a[1]), ev.integer(a[2]), ev.omega_if_cm(M.ring()));
    rec.verdict = s.verdict;
    rec.witness = "route: " + s.route + (s.witness.empty() ? "" : "; " + s.witness);
    rec.hypotheses = s.hypotheses;
  } else if (name == "totally_reflexive") {
    same_ring(ev.module(a[0]), ev.module(a[1]));
    int B = ev.bound(c.bound, ev.module(a[0]).ring());
    auto r = is_totally_C_reflexive(ev.module(a[0]), ev.module(a[1]), B);
    rec.verdict = r.verdict;
    if (r.verdict == Verdict::VerifiedUpToBound) rec.bound = r.bound;
    rec.witness = r.witness;
  } else if (name == "ext_vanishing") {
    same_ring(ev.module(a[0]), ev.module(a[1]));
    int B = ev.bound(c.bound, ev.module(a[0]).ring());
    ExtComputer ext(ev.module(a[0]), ev.module(a[1]), B);
    rec.verdict = Verdict::VerifiedUpToBound;
    rec.bound = B;
    rec.witness = "Ext^{1.." + std::to_string(B) + "} = 0";
    for (int i = 1; i <= B; ++i) {
      if (ext.vanishes(i)) continue;
      rec.verdict = Verdict::False;
      rec.bound.reset();
      rec.witness = "Ext^" + std::to_string(i) + " != 0, series numerator " + series_string(ext.series(i));
      break;
    }
  } else if (name == "auslander_buchsbaum") {
    auto M = ev.module(a[0]);
    int pd = projective_dimension_ambient(M), d = depth_by_ext(M), n = M.ring()->num_vars();
    rec.verdict = from_bool(pd + d == n);
    rec.witness = "pd_P = " + std::to_string(pd) + ", depth = " + std::to_string(d) + ", vars = " + std::to_string(n);
  } else if (name == "resolution") {
    auto M = ev.module(a[0]);
    auto res = free_resolution(M, ev.integer(a[1]));
    const auto& cx = res.complex;
    bool dd = cx.d_squared_zero();
    bool exact = true;
    for (int i = 1; i + 1 < static_cast<int>(cx.terms.size()); ++i) exact = exact && cx.is_exact_at(i);
    bool aug = cx.maps.empty() || compose(res.augmentation, cx.maps[0]).is_zero();
    bool h0 = cx.maps.empty() ? true : cokernel(cx.maps[0]).module.hilbert_series() == M.hilbert_series();
    rec.verdict = from_bool(dd && exact && aug && h0);
    std::ostringstream w;
    w << "betti [";
    for (std::size_t i = 0; i < cx.terms.size(); ++i) w << (i ? "," : "") << cx.terms[i].rank();
    w << "], d^2=0 " << dd << ", exact " << exact << ", augmentation " << (aug && h0);
    if (res.finite) w << ", finite";
    rec.witness = w.str();
  } else if (name == "tf_battery") {
    const auto& R = ev.ring(a[0]);
    const auto& C = ev.module(a[1]);
    aggregate(rec, theorem_tf_battery(R, C, std_modules(R, C), ev.integer(a[2]), canonical(R)));
  } else if (name == "lambda_battery") {
    const auto& R = ev.ring(a[0]);
    const auto& C = ev.module(a[1]);
    aggregate(rec, torsionfree_lambda_check(C, std_modules(R, C)));
  } else if (name == "ext_shift") {
    const auto& R = ev.ring(a[0]);
    const auto& C = ev.module(a[1]);
    int B = ev.bound(c.bound, R);
    aggregate(rec, pushforward_ext_shift_check(C, std_modules(R, C), B));
    if (rec.verdict == Verdict::True) {
      rec.verdict = Verdict::VerifiedUpToBound;
      rec.bound = B;
    }
  } else if (name == "lg_check") {
    const auto& R = ev.ring(a[0]);
    auto sub = theorem_lg_check(R, ev.module(a[1]), ev.integer(a[2]), canonical(R));
    aggregate(rec, sub);
    if (sub.checks.size() == 1 && !sub.checks[0].error) rec.witness = sub.checks[0].witness;
  } else if (name == "cross_semidualizing") {
    const auto& R = ev.ring(a[0]);
    const auto& C = ev.module(a[1]);
    aggregate(rec, cross_semidualizing_check(R, C, ev.module(a[2]), std_modules(R, C), ev.integer(a[3]),
                                             canonical(R)));
  } else if (name == "oracle") {
    const auto& R = ev.ring(a[0]);
    auto k = PresentedModule::residue_field(R);
    oracle::Instance inst{"R", R, {{"k", k}, {"R", PresentedModule::ring_module(R)}, {"Omega1(k)", syzygy_module(k, 1)}}};
    aggregate(rec, oracle::differential_test({inst}, ev.integer(a[1])));
  } else {
    throw std::logic_error("unhandled check " + name);
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
void guarded(double timeout_s, F body, std::optional<std::string>& error) {
  try {
    std::optional<Deadline> dl;
    if (timeout_s > 0) dl.emplace(timeout_s);
    body();
  } catch (const TimeoutError& e) {
    error = e.what();
  } catch (const std::exception& e) {
    error = e.what();
  }
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& s : kChecks) out.emplace_back(s.name);
  return out;
}

CheckReport run_session(const Session& s, const RunConfig& config) {
  Env env;
  std::vector<const CheckCmd*> checks;
  for (const auto& st : s.statements) {
    if (const auto* c = std::get_if<CheckCmd>(&st.node)) {
      checks.push_back(c);
      continue;
    }
    if (!st.is_declaration()) continue;
    Value v;
    std::optional<std::string> error;
    guarded(config.timeout_s, [&] { v = evaluate(st, env, config); }, error);
    if (error) v.error = error;
    env[declared_name(st)] = std::move(v);
  }

  CheckReport report;
  report.tool_version = kToolVersion;
  report.seed = config.seed;
  report.checks.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < checks.size();) {
      const CheckCmd& c = *checks[i];
      CheckRecord& rec = report.checks[i];
      rec.name = c.check;
      for (const auto& a : c.args) rec.inputs.push_back(arg_text(a));
      rec.expected = c.expect;
      auto t0 = std::chrono::steady_clock::now();
      guarded(config.timeout_s, [&] { run_check(c, env, config, rec); }, rec.error);
      if (rec.error) {
        rec.verdict = Verdict::Unknown;
        rec.bound.reset();
      }
      rec.timing_ms = elapsed_ms(t0);
    }
  };
  const int jobs = std::max(1, std::min<int>(config.jobs, static_cast<int>(checks.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

void write_reports(const Session& s, const CheckReport& report) {
  for (const auto& st : s.statements) {
    const auto* r = std::get_if<ReportCmd>(&st.node);
    if (!r) continue;
    std::ofstream out(r->path);
    if (!out) throw std::runtime_error("cannot write report to " + r->path);
    out << (r->format == "json" ? to_json(report) : to_text(report));
  }
}

}  // namespace sdw::cli
