#include "dispatch.hpp"
#include "job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

}  // namespace

int main(int argc, char** argv) {
  using namespace qmut::cli;

  CLI::App app{"qmut: quantum dilogarithm identities from quiver mutation sequences"};
  std::string input;
  Overrides o;
  app.add_option("--input", input, "job file (JSON); \"-\" reads stdin");
  app.add_option("--command", o.command,
                 "mutate|cmatrix|classify|trace|zfun|coeff|verify-thm1|verify-thm2|identity|stanley");
  app.add_option("--degree", o.degree, "truncation degree D (default 4)");
  app.add_option("--format", o.format, "json|text");
  app.add_option("--r", o.r, "comma list, e.g. -2,1");
  app.add_option("--beta", o.beta, "comma list, e.g. 1,1");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    JobSpec job;
    if (input == "-") {
      job = parse_job(slurp(std::cin));
    } else if (!input.empty()) {
      std::ifstream f(input);
      if (!f) {
        std::cerr << "cannot open " << input << "\n";
        return kInputError;
      }
      job = parse_job(slurp(f));
    } else if (o.command.value_or("") != "stanley") {
      job = parse_job(slurp(std::cin));
    }
    apply_overrides(job, o);
    const DispatchResult res = dispatch(job);
    std::cout << res.output;
    if (!res.diagnostics.empty()) std::cerr << res.diagnostics << "\n";
    return res.exit_code;
  } catch (const JobError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
}
