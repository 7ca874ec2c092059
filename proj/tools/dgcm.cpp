// Command-line front end: dgcm <command> <input.json> [options]

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "dgcm/cli.hpp"
#include "dgcm/errors.hpp"
#include "dgcm/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Deformed generalized Cartan matrices: construction, inversion and identities"};
  app.require_subcommand(1);

  dgcm::JobSpec job;
  std::string prefix;
  std::string period;
  std::string output = "text";
  std::string mu = "keep";
  int i = 0, j = 0, k = 0, l = 0;

  const std::map<std::string, std::string> commands = {
      {"validate", "check the GCM and print derived constants"},
      {"deform", "print C(q,t,mu)"},
      {"invert", "expand the inverse as a truncated t-series"},
      {"braid-check", "verify the braid relations on every pair"},
      {"longest", "longest element, star involution, Coxeter numbers, T_w0"},
      {"kp", "compare with the mass-deformed Cartan matrix"},
      {"ep", "closed forms of <E_i,S_j> and <S_i,S_j>"},
      {"ext-dim", "Ext^1 dimension between preprojective modules"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", job.input_path, "JSON input file")->required();
    sub->add_option("-N,--trunc", job.trunc, "t-truncation order")->capture_default_str();
    sub->add_option("--output", output, "text or records")
        ->check(CLI::IsMember({"text", "records"}));
    sub->add_option("--mu", mu, "'one' specializes every mass parameter to 1")
        ->check(CLI::IsMember({"keep", "one"}));
    if (name == "invert") {
      sub->add_option("--method", job.method, "series, coxeter, bipartite, word or all")
          ->check(CLI::IsMember({"series", "coxeter", "bipartite", "word", "all"}));
      sub->add_option("--prefix", prefix, "word prefix, 1-based letters");
      sub->add_option("--period", period, "repeating block of the word, 1-based letters");
    }
    if (name == "ep") {
      sub->add_option("--ell", job.ell, "ell >= 1 for <S_i,S_j>");
      sub->add_option("--i", i, "row vertex (1-based)");
      sub->add_option("--j", j, "column vertex (1-based)");
    }
    if (name == "ext-dim") {
      sub->add_option("--i", i, "vertex of M")->required();
      sub->add_option("--k", k, "translate of M")->required();
      sub->add_option("--j", j, "vertex of N")->required();
      sub->add_option("--l", l, "translate of N")->required();
    }
    sub->callback([&job, name = name] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; every other usage problem maps to kExitUsage.
    app.exit(e);
    return e.get_exit_code() == 0 ? dgcm::kExitOk : dgcm::kExitUsage;
  }

  job.output = output == "records" ? dgcm::OutputMode::records : dgcm::OutputMode::text;
  job.mu_one = mu == "one";
  if (i > 0) job.i = i - 1;
  if (j > 0) job.j = j - 1;
  if (job.command == "ext-dim") {
    job.k = k;
    job.l = l;
  }
  try {
    if (!prefix.empty() || !period.empty()) {
      job.word = dgcm::PeriodicWord{dgcm::parse_word(prefix), dgcm::parse_word(period)};
    }
  } catch (const dgcm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return dgcm::kExitParse;
  }
  return dgcm::run(job, std::cout, std::cerr);
}
