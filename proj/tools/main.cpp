#include "commands.hpp"

#include "wmsmooth/errors.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <iostream>

namespace {

using namespace wmsmooth;
using namespace wmsmooth::cli;

json read_document(const std::string& path) {
  try {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) fail(Errc::InvalidInput, "cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(Errc::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact smoothness tests for spherical weight monoids and moment polytopes"};
  app.require_subcommand(1);

  Options opt;
  std::string input_path;
  std::function<int()> run;

  auto add_common = [&](CLI::App* sub, bool takes_input) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    sub->add_flag("--strict", opt.strict, "exit 3 when the answer is Undecided");
    sub->add_flag("--oracle", opt.oracle, "run brute-force cross-checks");
    if (takes_input)
      sub->add_option("--input", input_path, "input document (default: stdin)");
    return sub;
  };
  auto doc_command = [&](const char* name, const char* desc, auto fn) {
    CLI::App* sub = add_common(app.add_subcommand(name, desc), true);
    sub->callback([&, fn] { run = [&, fn] { return fn(parse_problem(read_document(input_path)), opt); }; });
    return sub;
  };

  CLI::App* check =
      doc_command("check", "decide smoothness of a weight monoid", cmd_check);
  check->add_flag("--verify-certificate", opt.verify_certificate,
                  "re-parse the emitted report and recompute it");
  doc_command("sigma-n", "adapted spherical roots of a weight monoid", cmd_sigma_n);
  doc_command("s-gamma", "support set S_Gamma of a weight monoid", cmd_s_gamma);
  doc_command("admissible", "admissibility of the localized triple", cmd_admissible);
  doc_command("classify-sl2c", "match an SL(2) x C^x monoid against the smooth families",
              cmd_classify_sl2c);
  doc_command("polytope", "validate a candidate moment polytope", cmd_polytope);
  doc_command("hilbert", "Hilbert basis of the saturation of a monoid", cmd_hilbert);

  int rank = 0;
  std::string type_letter;
  CLI::App* esl = add_common(
      app.add_subcommand("enumerate-sl", "smooth full-rank G-saturated lattices of SL(n+1)"),
      false);
  esl->add_option("--rank", rank, "rank n of A_n")->required()->check(CLI::Range(1, 8));
  esl->add_option("--max-param", opt.max_param, "sample bound for the infinite case")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  esl->callback([&] { run = [&] { return cmd_enumerate_sl(rank, opt); }; });

  CLI::App* eot = add_common(
      app.add_subcommand("enumerate-other", "smooth G-saturated lattices of the other types"),
      false);
  eot->add_option("--type", type_letter, "component type letter (B, C, D, E, F, G)")->required();
  eot->add_option("--rank", rank, "component rank")->required();
  eot->callback([&] { run = [&] { return cmd_enumerate_other(type_letter, rank, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
