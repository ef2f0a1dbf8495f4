#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sdw/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Evaluate a session of semidualizing-module checks"};
  sdw::cli::RunConfig config;
  std::string input, format = "text";
  bool no_timings = false, parse_only = false;

  app.add_option("file", input, "session file, - for stdin")->required();
  app.add_option("--char", config.default_char, "characteristic for rings declared without char")
      ->check([](const std::string& s) {
        try {
          auto v = std::stoull(s);
          return v >= 2 && v < (1ULL << 31) && sdw::is_prime(v) ? std::string() : "must be a prime below 2^31";
        } catch (const std::exception&) {
          return std::string("must be an integer");
        }
      })
      ->default_val(sdw::PrimeField::kDefaultCharacteristic);
  app.add_option("--ext-bound", config.ext_bound, "Ext bound B (default: number of variables + 2)")
      ->check(CLI::Range(1, 1000));
  app.add_option("--seed", config.seed, "seed for randomized checks")->default_val(1);
  app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "text"}))->default_val("text");
  app.add_option("--timeout-s", config.timeout_s, "per-check time limit in seconds, 0 for none")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", config.jobs, "checks evaluated concurrently")->check(CLI::Range(1, 256));
  app.add_flag("--no-timings", no_timings, "omit timing_ms from the json report");
  app.add_flag("--parse-only", parse_only, "validate and print the canonical session text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string text;
  {
    std::stringstream buf;
    if (input == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream in(input);
      if (!in) {
        std::cerr << input << ": cannot open\n";
        return 2;
      }
      buf << in.rdbuf();
    }
    text = buf.str();
  }

  sdw::cli::Session session;
  try {
    session = sdw::cli::parse_session(text, config.default_char);
  } catch (const sdw::cli::SessionError& e) {
    std::cerr << input << ":" << e.what() << "\n";
    return 2;
  }
  if (parse_only) {
    std::cout << sdw::cli::print_session(session);
    return 0;
  }

  auto report = sdw::cli::run_session(session, config);
  std::cout << (format == "json" ? sdw::cli::to_json(report, !no_timings) : sdw::cli::to_text(report));
  try {
    sdw::cli::write_reports(session, report);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return sdw::cli::exit_code(report);
}
