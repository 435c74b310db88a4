#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kpairs/cli.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitInvalidCertificate = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string format = "human";
  bool timing = false;
  std::optional<std::size_t> cap_edges;
  std::optional<std::size_t> cap_commodities;
  unsigned jobs = 1;

  kpairs::EnumerationOptions enumeration(std::size_t default_edges) const {
    kpairs::EnumerationOptions o;
    o.max_edges = cap_edges.value_or(default_edges);
    if (cap_commodities) o.max_commodities = *cap_commodities;
    o.jobs = jobs == 0 ? 1 : jobs;
    return o;
  }
};

void emit(const kpairs::cli::Report& report, const Options& opt) {
  if (opt.format == "machine") {
    std::cout << kpairs::cli::render_machine(report, opt.timing);
  } else {
    std::cout << kpairs::cli::render_human(report);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Routing and network coding rate bounds for k-pairs networks",
               "kpairs"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--timing", opt.timing,
               "Include per-computation timing in machine output");
  app.add_option("--cap-edges", opt.cap_edges,
                 "Edge cap for cut enumeration (default 20, meagerness 16)");
  app.add_option("--cap-commodities", opt.cap_commodities,
                 "Commodity cap for cut enumeration (default 10)");
  app.add_option("--jobs", opt.jobs, "Worker threads for cut enumeration");

  kpairs::cli::GenRequest gen;
  auto add_family = [&gen](CLI::App* sub) {
    sub->add_option("family", gen.family, "n1 | hu | bipartite")
        ->required()
        ->check(CLI::IsMember({"n1", "hu", "bipartite"}));
    sub->add_option("--k", gen.k, "Number of commodities (n1)");
    sub->add_option("--type", gen.type, "I | II (bipartite)");
    sub->add_option("--m", gen.m, "First side size (bipartite)");
    sub->add_option("--n", gen.n, "Second side size (bipartite)");
  };
  CLI::App* gen_cmd = app.add_subcommand("gen", "Emit a generated network");
  add_family(gen_cmd);
  CLI::App* cert_cmd =
      app.add_subcommand("cert", "Emit the generated certificate for a family");
  add_family(cert_cmd);
  std::string cert_output;
  cert_cmd->add_option("-o,--output", cert_output,
                       "Write to this file instead of standard output");

  std::string network_path;
  std::string cert_path;
  bool scheme = false;
  bool dump_lp = false;

  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "Sparsity, Wiener bound or meagerness");
  bounds_cmd->add_option("network", network_path, "Network file or -")
      ->required();

  CLI::App* route_cmd =
      app.add_subcommand("route", "Maximum concurrent routing rate");
  route_cmd->add_option("network", network_path, "Network file or -")
      ->required();
  route_cmd->add_flag("--scheme", scheme, "Print the optimal flows");
  route_cmd->add_flag("--dump-lp", dump_lp, "Print the routing LP");

  CLI::App* check_cmd =
      app.add_subcommand("check", "Verify an entropy certificate");
  check_cmd->add_option("network", network_path, "Network file or -")
      ->required();
  check_cmd->add_option("certificate", cert_path, "Certificate file or -")
      ->required();

  CLI::App* gap_cmd =
      app.add_subcommand("gap", "Routing rate against every upper bound");
  gap_cmd->add_option("network", network_path, "Network file or -")
      ->required();
  gap_cmd->add_option("--cert", cert_path, "Certificate file to use");

  CLI11_PARSE(app, argc, argv);

  try {
    namespace cli = kpairs::cli;
    const kpairs::EnumerationOptions sp =
        opt.enumeration(kpairs::kDefaultSparsityEdgeCap);
    const kpairs::EnumerationOptions mg =
        opt.enumeration(kpairs::kDefaultMeagernessEdgeCap);

    if (*gen_cmd) {
      std::cout << cli::cmd_gen(gen);
      return 0;
    }
    if (*cert_cmd) {
      const std::string text = cli::cmd_cert(gen);
      if (cert_output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(cert_output, std::ios::binary);
        out << text;
        if (!out) throw std::runtime_error("cannot write '" + cert_output + "'");
      }
      return 0;
    }
    if (network_path == "-" && cert_path == "-") {
      throw std::runtime_error("only one input may be read from stdin");
    }
    const kpairs::Network network =
        kpairs::parse_network(read_input(network_path));
    if (*bounds_cmd) {
      emit(cli::cmd_bounds(network, sp, mg), opt);
    } else if (*route_cmd) {
      emit(cli::cmd_route(network, scheme, dump_lp), opt);
    } else if (*check_cmd) {
      const kpairs::Certificate cert =
          kpairs::parse_certificate(read_input(cert_path));
      const cli::Report report = cli::cmd_check(network, cert, cert_path);
      emit(report, opt);
      if (!report.certificates.front().valid) return kExitInvalidCertificate;
    } else if (*gap_cmd) {
      std::optional<kpairs::Certificate> supplied;
      if (!cert_path.empty()) {
        supplied = kpairs::parse_certificate(read_input(cert_path));
      }
      emit(cli::cmd_gap(network, sp, mg, supplied, cert_path), opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "kpairs: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
