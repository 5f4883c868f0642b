#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jacal/dsl/executor.hpp"
#include "jacal/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"jacal: exact commutative algebra scripts"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "execute a script");
  std::string file, format = "text", order;
  int s_max = 10;
  run->add_option("file", file, "script path")->required()->check(CLI::ExistingFile);
  run->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--smax", s_max, "largest exponent tried by annihilation_exponent")->check(CLI::PositiveNumber);
  run->add_option("--order", order, "default monomial order")->check(CLI::IsMember({"grevlex", "lex"}));

  auto* corpus = app.add_subcommand("corpus", "run the built-in example corpus");
  corpus->add_option("--smax", s_max, "largest exponent tried by annihilation_exponent")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (*corpus) {
    jacal::CorpusReport report = jacal::run_example_corpus(s_max);
    std::cout << report.to_string();
    return report.all_passed() ? 0 : 1;
  }

  std::ifstream in(file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  jacal::dsl::RunOptions options;
  options.fixture = std::filesystem::path(file).stem().string();
  options.s_max = s_max;
  if (order == "lex") options.order = jacal::MonomialOrder::lex();
  if (order == "grevlex") options.order = jacal::MonomialOrder::grevlex();
  jacal::dsl::RunReport report = jacal::dsl::run_script(buffer.str(), options);
  if (format == "json")
    std::cout << report.json() << "\n";
  else
    std::cout << report.text();
  return report.exit_code();
}
