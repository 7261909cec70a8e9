#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "hochkit/error.hpp"
#include "hochkit/harness.hpp"

namespace {

std::string describe(const std::string& name) {
  static const std::map<std::string, std::string> text = {
      {"validate", "check the dg algebra axioms"},
      {"hh", "Hochschild cohomology HH^0..HH^(N-1)"},
      {"hh-homology", "Hochschild homology HH_0..HH_(N-1)"},
      {"hc", "cyclic homology HC_0..HC_(N-1)"},
      {"periodicity", "Connes SBI sequence and periodicity through degree N"},
      {"kunneth-hh", "HH^n(A (x) B) against the convolution, n <= N"},
      {"kunneth-hh-homology", "HH_n(A (x) B) against the convolution, n <= N"},
      {"kunneth-hc", "HC Kunneth exact sequence, n <= N"},
      {"morita", "HH^k(A) against HH^k(M_n(A)), k <= N"},
      {"cech", "Cech cohomology of O(d) on P1"},
      {"cech-hom", "Cech Hom(O(d1), O(d2)) on P1"},
      {"cech-kunneth", "O(a) boxtimes O(b) on P1xP1 with AW and EZ"},
      {"suite", "the acceptance criteria"},
  };
  auto it = text.find(name);
  return it == text.end() ? "" : it->second;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild, cyclic and Čech computations with exact arithmetic"};
  app.require_subcommand(1);
  hochkit::ScenarioOptions opts;
  std::string field = "Q";
  std::string output = "table";
  bool no_timings = false;

  for (const auto& name : hochkit::scenario_names()) {
    CLI::App* sub = app.add_subcommand(name, describe(name));
    sub->add_option("--field", field, "Q or Fp:<p>");
    sub->add_option("--max-degree", opts.max_degree, "degree bound");
    sub->add_option("--window", opts.window, "Laurent monomial window M");
    sub->add_option("--output", output, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--no-timings", no_timings, "omit wall times from json");
    if (name == "validate" || name == "hh" || name == "hh-homology" || name == "hc" || name == "periodicity" ||
        name == "morita")
      sub->add_option("--algebra", opts.algebra, "builtin name or AlgebraSpec file");
    if (name.rfind("kunneth", 0) == 0 || name == "cech-kunneth") {
      sub->add_option("--a", opts.a, name == "cech-kunneth" ? "twist of the first factor" : "first algebra");
      sub->add_option("--b", opts.b, name == "cech-kunneth" ? "twist of the second factor" : "second algebra");
    }
    if (name == "morita") sub->add_option("--n", opts.matrix_size, "matrix size");
    if (name == "cech") sub->add_option("--twist", opts.twist, "line bundle O(d)");
    if (name == "cech-hom") {
      sub->add_option("--d1", opts.d1, "source twist");
      sub->add_option("--d2", opts.d2, "target twist");
    }
    if (name == "suite") sub->add_option("--criterion", opts.criterion, "run a single acceptance criterion");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  if (command == "cech-kunneth") {
    // twists default to 0 rather than an algebra name
    auto* sub = app.get_subcommands().front();
    if (sub->count("--a") == 0) opts.a = "0";
    if (sub->count("--b") == 0) opts.b = "0";
  }
  std::vector<hochkit::Report> reports;
  try {
    opts.field = hochkit::Field::parse(field);
    reports = hochkit::run_scenario(command, opts);
  } catch (const hochkit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const hochkit::InvalidAlgebra& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cout << (output == "json" ? hochkit::to_json(reports, !no_timings) : hochkit::to_table(reports));
  for (const auto& r : reports)
    if (!r.pass()) return 1;
  return 0;
}
