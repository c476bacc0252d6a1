#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "gbds/cli.hpp"

int main(int argc, char** argv) {
  using namespace gbds::cli;
  CLI::App app{"Finite generalized Boolean dynamical systems: constructions and checks"};
  app.require_subcommand(1);

  RunOptions opt;
  if (char const* s = std::getenv("GBDS_LAB_SEED")) {
    try {
      opt.seed = std::stoull(s);
    } catch (std::exception const&) {
      std::cerr << "error: GBDS_LAB_SEED must be a non-negative integer\n";
      return exit_input_error;
    }
  }

  for (auto const& name : commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--system", opt.input, name == "from-labelled" ? "labelled space JSON" : "system JSON")->required();
    sub->add_option("--bound", opt.bound, "word-length bound")->capture_default_str();
    sub->add_option("--format", opt.format, "text, json or dot")->capture_default_str();
    sub->add_option("--ring", opt.ring, "int or mod:m")->capture_default_str();
    if (name == "algebra") {
      sub->add_option("--expr", opt.expr, "expression to normalize");
    }
    sub->callback([&opt, sub] { opt.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  auto res = run(opt);
  std::cout << res.output;
  if (res.status == exit_input_error && opt.format != "json") {
    std::cerr << "error: " << res.report.value("error", std::string()) << "\n";
  }
  return res.status;
}
