#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sdw/cli.hpp"

namespace sdw::cli {

using json = nlohmann::ordered_json;

bool check_failed(const CheckRecord& r) {
  if (r.error) return true;
  return r.expected && !r.passed();
}

int exit_code(const CheckReport& report) {
  for (const auto& c : report.checks)
    if (check_failed(c)) return 1;
  return 0;
}

std::string to_json(const CheckReport& report, bool timings) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json hyps = json::array();
    for (const auto& h : c.hypotheses)
      hyps.push_back({{"name", h.name}, {"provenance", to_string(h.provenance)}, {"holds", h.holds}, {"detail", h.detail}});
    json rec = {{"name", c.name},
                {"inputs", c.inputs},
                {"verdict", to_string(c.verdict)},
                {"bound", c.bound ? json(*c.bound) : json(nullptr)},
                {"witness", c.witness},
                {"hypotheses", hyps},
                {"error", c.error ? json(*c.error) : json(nullptr)},
                {"expected", c.expected ? json(to_string(*c.expected)) : json(nullptr)}};
    if (timings) rec["timing_ms"] = c.timing_ms;
    checks.push_back(std::move(rec));
  }
  json j = {{"tool_version", report.tool_version}, {"seed", report.seed}, {"checks", checks}};
  return j.dump(2) + "\n";
}

CheckReport report_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    CheckReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("checks")) {
      CheckRecord rec;
      rec.name = c.at("name").get<std::string>();
      rec.inputs = c.at("inputs").get<std::vector<std::string>>();
      rec.verdict = verdict_from_string(c.at("verdict").get<std::string>());
      if (!c.at("bound").is_null()) rec.bound = c.at("bound").get<int>();
      rec.witness = c.at("witness").get<std::string>();
      for (const auto& h : c.at("hypotheses"))
        rec.hypotheses.push_back({h.at("name").get<std::string>(),
                                  provenance_from_string(h.at("provenance").get<std::string>()),
                                  h.at("holds").get<bool>(), h.at("detail").get<std::string>()});
      if (c.contains("timing_ms")) rec.timing_ms = c.at("timing_ms").get<double>();
      if (!c.at("error").is_null()) rec.error = c.at("error").get<std::string>();
      if (c.contains("expected") && !c.at("expected").is_null())
        rec.expected = verdict_from_string(c.at("expected").get<std::string>());
      r.checks.push_back(std::move(rec));
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const CheckReport& report) {
  std::ostringstream out;
  out << report.tool_version << ", seed " << report.seed << "\n";
  int failed = 0;
  for (const auto& c : report.checks) {
    bool bad = check_failed(c);
    failed += bad;
    std::string inputs;
    for (std::size_t i = 0; i < c.inputs.size(); ++i) inputs += (i ? ", " : "") + c.inputs[i];
    out << (bad ? "FAIL " : "ok   ") << c.name << "(" << inputs << ") = " << to_string(c.verdict);
    if (c.bound) out << " (B=" << *c.bound << ")";
    if (c.expected) out << ", expected " << to_string(*c.expected);
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", c.timing_ms);
    out << "  [" << ms << " ms]\n";
    if (!c.witness.empty()) out << "     " << c.witness << "\n";
    for (const auto& h : c.hypotheses)
      out << "     " << h.name << ": " << (h.holds ? "holds" : "fails") << " (" << to_string(h.provenance) << ")"
          << (h.detail.empty() ? "" : ", " + h.detail) << "\n";
    if (c.error) out << "     error: " << *c.error << "\n";
  }
  out << report.checks.size() << " checks, " << failed << " failed\n";
  return out.str();
}

}  // namespace sdw::cli
