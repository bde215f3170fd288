#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "sz5/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Orientation and contractibility tools for planar multigraphs"};
  sz5::cli::Request req;
  std::string input_path;
  app.add_option("command", req.command,
                 "weight | contractible | szk | orient | mod-orient | circular | asf | reduce | "
                 "discharge | scan | trees | enumerate4v")
      ->required();
  app.add_option("input", input_path, "MGF file ('-' for stdin)");
  app.add_option("--named", req.named, "catalog graph instead of a file, e.g. W1, T:1,3,3, aK2:4");
  app.add_option("--k", req.k, "modulus (odd, >= 3)");
  app.add_option("--beta", req.beta, "boundary residues, comma separated");
  app.add_option("--budget", req.budget, "search node budget, 0 = unlimited");
  app.add_option("--jobs", req.jobs, "worker threads, 0 = default");
  app.add_option("--format", req.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache", req.cache, "verdict cache file");
  app.add_option("--min-edges", req.min_edges, "enumerate4v: fewest edges");
  app.add_option("--max-edges", req.max_edges, "enumerate4v: most edges");
  app.add_option("--mu-max", req.mu_max, "enumerate4v: largest multiplicity");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : sz5::cli::kInputError;
  }

  if (req.command != "enumerate4v" && !req.named) {
    if (input_path.empty()) {
      std::cerr << "an input file or --named is required\n";
      return sz5::cli::kInputError;
    }
    std::ostringstream text;
    if (input_path == "-") {
      text << std::cin.rdbuf();
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "cannot read " << input_path << '\n';
        return sz5::cli::kInputError;
      }
      text << in.rdbuf();
    }
    req.input = text.str();
  }
  const sz5::cli::Report report = sz5::cli::run(req);
  std::cout << report.output;
  return report.exit_code;
}
