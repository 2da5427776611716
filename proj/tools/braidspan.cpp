#include <exception>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "braidspan/cli.hpp"

int main(int argc, char** argv) {
  braidspan::RunConfig cfg;
  CLI::App app{"Dual Garside normal forms and quantum/Lawrence representation matrices of braids"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of strands")->capture_default_str();
    sub->add_option("--out", cfg.out, "write JSON here instead of stdout");
  };
  auto with_word = [&](CLI::App* sub) {
    sub->add_option("--word", cfg.word, "letters k / -k for sigma_k^(+-1), or a:i,j / A:i,j");
  };

  auto* nf = app.add_subcommand("nf", "left normal form with inf, sup and length");
  common(nf);
  with_word(nf);

  auto* rep = app.add_subcommand("rep", "representation matrix of a word");
  common(rep);
  with_word(rep);
  rep->add_option("--m", cfg.m)->capture_default_str();
  rep->add_option("--flavor", cfg.flavor, "V, W or L")->check(CLI::IsMember({"V", "W", "L"}))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "claims table over seeded random words");
  common(verify);
  verify->add_option("--m", cfg.m)->capture_default_str();
  verify->add_option("--count", cfg.count)->capture_default_str();
  verify->add_option("--seed", cfg.seed)->capture_default_str();
  verify->add_option("--maxlen", cfg.maxlen)->capture_default_str();
  verify->add_option("--threads", cfg.threads, "0 uses every core")->capture_default_str();
  verify->add_flag("--report-only", cfg.report_only, "accept m < 2 and never fail");

  auto* simples = app.add_subcommand("simples", "all simple elements of B_n");
  common(simples);

  auto* oracle = app.add_subcommand("oracle", "brute-force inf and sup");
  common(oracle);
  with_word(oracle);
  oracle->add_option("--limit", cfg.limit, "search bound, at most 6")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    const auto res = braidspan::run_command(cfg);
    const std::string text = res.doc.dump() + "\n";
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + cfg.out);
      f << text;
    }
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "braidspan: " << e.what() << "\n";
    return 2;
  }
}
