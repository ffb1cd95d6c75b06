#include "eqcell/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Equivariant cellular homology, Euler classes and Lefschetz numbers"};
  app.require_subcommand(1);

  eqcell::CliRequest request;
  std::string document;
  std::string coefficients;
  int times = 1;
  std::string out;
  std::string orbit;
  std::string object;

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("document", document, "Input JSON document")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", request.json, "Machine-readable output");
    return sub;
  };
  add("validate", "Run every validator on the document");
  add("euler", "Equivariant Euler class");
  add("homology", "Homology with constant or isotropy coefficients")
      ->add_option("--coefficients", coefficients, "constant | isotropy")
      ->check(CLI::IsMember({"constant", "isotropy"}));
  add("lefschetz", "Equivariant Lefschetz number of the document's map");
  CLI::App* subdivide = add("subdivide", "Barycentric subdivision of space and map");
  subdivide->add_option("--times", times, "Number of subdivisions")->check(CLI::NonNegativeNumber);
  subdivide->add_option("--out", out, "Output path (stdout when omitted)");
  add("orbit-point", "Cell counts of the orbit-point complex")
      ->add_option("--orbit", orbit, "Orbit name")
      ->required();
  add("total-space", "Cell counts of the total space at an object")
      ->add_option("--object", object, "Object of the index category")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : eqcell::exit_code::invalid_input;
  }

  CLI::App* chosen = app.get_subcommands().front();
  request.command = chosen->get_name();
  request.document = document;
  if (!coefficients.empty()) request.coefficients = coefficients;
  if (request.command == "subdivide") {
    request.times = times;
    if (!out.empty()) request.out = out;
  }
  if (!orbit.empty()) request.orbit = orbit;
  if (!object.empty()) request.object = object;

  const eqcell::CliResult result = eqcell::run(request);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
