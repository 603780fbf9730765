// hermicode: cyclic AG codes on the Hermitian curve.
//
//   hermicode points  --q 4
//   hermicode build   --q 3 --m 2
//   hermicode weights --q 5 --m 3 --method exhaustive
//   hermicode verify  --q 8 --m 3 [--suite all]
//   hermicode report  [--suite all] --jobs 8

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "hermicode/cli.hpp"

int main(int argc, char** argv) {
  using namespace hermicode;

  CLI::App app{"Cyclic AG codes on the Hermitian curve: construction, weight enumerators, claim checks"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.jobs = default_jobs();
  int q = 0;
  int m = 0;
  std::string method = "auto";
  std::string format = "json";
  std::string suite;

  const std::map<std::string, Command> commands{
      {"points", Command::points}, {"build", Command::build}, {"weights", Command::weights},
      {"verify", Command::verify}, {"report", Command::report}};
  const std::map<std::string, std::string> help{
      {"points", "list curve points, chord points and one stabilizer orbit"},
      {"build", "emit the generator matrix"},
      {"weights", "compute the weight enumerator"},
      {"verify", "check the claims for (q, m) or a whole suite"},
      {"report", "consolidated m=2,3 table across q in {3,4,5,7,8}"}};

  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--q", q, "subfield order q (prime power >= 3)");
    sub->add_option("--m", m, "multiplicity, 2 <= m <= q-1");
    sub->add_option("--method", method, "exhaustive|reduced|auto")->check(CLI::IsMember({"exhaustive", "reduced", "auto"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads (default $HERMICODE_JOBS or 1)");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--suite", suite, "'all' runs every claim")->check(CLI::IsMember({"all"}));
    sub->add_option("--orbit", cfg.orbit, "base point index, 0..q-1");
    sub->callback([&cfg, cmd = cmd] { cfg.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  for (const auto* sub : app.get_subcommands()) {
    if (sub->count("--q") > 0) cfg.q = q;
    if (sub->count("--m") > 0) cfg.m = m;
  }
  cfg.method = method_from_string(method);
  cfg.format = format == "csv" ? Format::csv : Format::json;
  cfg.suite_all = suite == "all";
  return run(cfg, std::cout, std::cerr);
}
