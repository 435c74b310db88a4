#ifndef KPAIRS_CLI_HPP
#define KPAIRS_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "kpairs/bounds.hpp"
#include "kpairs/certificate.hpp"
#include "kpairs/network.hpp"
#include "kpairs/rational.hpp"

namespace kpairs::cli {

struct Quantity {
  std::string name;
  Rational value;
  std::vector<std::string> witness_edges;
  std::vector<std::string> witness_commodities;
  double elapsed_ms = 0;
};

struct CertificateEntry {
  std::string source;  // file name, or "bundled:<family>"
  bool valid = false;
  std::string target;  // e.g. "2 r_a + 3 r_b + 2 r_g <= 8"
  Rational bound;
  Rational symmetric_bound;
  std::string residual;
  std::vector<std::string> caveats;
  double elapsed_ms = 0;
};

struct Report {
  std::string command;
  bool directed = false;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t commodities = 0;
  std::vector<Quantity> quantities;
  std::vector<CertificateEntry> certificates;
  std::vector<std::string> findings;
  std::vector<std::string> scheme;  // "commodity arc flow" lines
  std::string lp_dump;

  const Quantity* find(const std::string& name) const;
};

// Human tables (default) show decimals next to exact values; the machine
// view is a JSON document with every value as an exact "p/q" string. Timing
// appears in the machine view only when requested.
std::string render_human(const Report& report);
std::string render_machine(const Report& report, bool with_timing = false);

struct GenRequest {
  std::string family;  // n1 | hu | bipartite
  int k = 0;
  std::string type;  // I | II
  int m = 0;
  int n = 0;
};

Network generate(const GenRequest& request);
std::string cmd_gen(const GenRequest& request);

// Certificate matching a generated family, if the network is one: the
// bottleneck family for its own k, the three-commodity network, or any
// undirected bipartite network.
struct BundledCertificate {
  std::string family;
  Certificate certificate;
};
std::optional<BundledCertificate> bundled_certificate(const Network& network);
std::string cmd_cert(const GenRequest& request);

Report cmd_bounds(const Network& network, const EnumerationOptions& sparsity,
                  const EnumerationOptions& meagerness);
Report cmd_route(const Network& network, bool with_scheme, bool with_lp);
Report cmd_check(const Network& network, const Certificate& cert,
                 const std::string& source);
Report cmd_gap(const Network& network, const EnumerationOptions& sparsity,
               const EnumerationOptions& meagerness,
               const std::optional<Certificate>& supplied,
               const std::string& supplied_source);

inline constexpr const char* kConjectureConfirmed =
    "conjecture confirmed on this instance";

}  // namespace kpairs::cli

#endif  // KPAIRS_CLI_HPP
