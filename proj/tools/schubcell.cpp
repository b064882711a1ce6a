#include "schubcell/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  schubcell::RunConfig config;
  CLI::App app{"Cell structures of matroid Schubert varieties from a rational matrix"};
  std::string mode = "equations";
  std::string format = "human";
  std::string commands;
  for (const auto& c : schubcell::command_names()) commands += (commands.empty() ? "" : ", ") + c;

  app.add_option("input", config.input, "matrix file, '-' for standard input")->required();
  app.add_option("command", config.command, "one of: " + commands)->required()->expected(1, 2);
  app.add_option("--mode", mode, "equations: rows cut out V; span: rows span V")
      ->check(CLI::IsMember({"equations", "span"}));
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "json", "dot"}));
  app.add_flag("--allow-large", config.allow_large, "lift the ground set size limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : schubcell::kExitInputError;
  }
  config.mode = mode == "span" ? schubcell::InputMode::Span : schubcell::InputMode::Equations;
  config.format = format == "json"  ? schubcell::OutputFormat::Json
                  : format == "dot" ? schubcell::OutputFormat::Dot
                                    : schubcell::OutputFormat::Human;
  return schubcell::run(config, std::cout, std::cerr);
}
