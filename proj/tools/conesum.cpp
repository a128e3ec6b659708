#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "conesum/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"conesum: exact intermediate generating functions of rational cones and polytopes"};

  conesum::cli::JobSpec job;
  std::string input_path;
  std::string output_path;
  app.add_option("--command", job.command,
                 "decompose|genfun|patched|sum|oracle|verify")
      ->required();
  app.add_option("--input", input_path, "input JSON file (default: stdin)");
  app.add_option("--output", output_path, "output JSON file (default: stdout)");
  app.add_option("--m-min", job.m_min, "lowest homogeneous degree to emit");
  app.add_option("--m-max", job.m_max, "highest homogeneous degree to emit");
  app.add_option("--seed", job.seed, "seed for the deterministic test-point generator");
  app.add_option("--poisson-radius", job.poisson_radius,
                 "sup-norm radius of the truncated Fourier sum");
  app.add_option("--float-tol", job.float_tol,
                 "tolerance for the floating-point Poisson checks");
  CLI11_PARSE(app, argc, argv);

  if (input_path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    job.input_text = ss.str();
  } else {
    std::ifstream f(input_path);
    if (!f) {
      std::cerr << "cannot open input file: " << input_path << "\n";
      return 2;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    job.input_text = ss.str();
  }

  conesum::cli::RunResult res = conesum::cli::run(job);
  if (output_path.empty()) {
    std::cout << res.report;
  } else {
    std::ofstream f(output_path);
    if (!f) {
      std::cerr << "cannot open output file: " << output_path << "\n";
      return 2;
    }
    f << res.report;
  }
  return res.exit_code;
}
