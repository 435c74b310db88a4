#include <chrono>
#include <stdexcept>

#include "kpairs/cli.hpp"
#include "kpairs/routing.hpp"

namespace kpairs::cli {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

Report summary(const Network& n, std::string command) {
  Report r;
  r.command = std::move(command);
  r.directed = n.directed();
  r.nodes = n.nodes().size();
  r.edges = n.edges().size();
  r.commodities = n.commodities().size();
  return r;
}

std::string edge_label(const Network& n, std::size_t index) {
  const Edge& e = n.edges()[index];
  return e.u + (n.directed() ? ">" : "-") + e.v;
}

Quantity from_cut(const Network& n, std::string name, const CutReport& cut,
                  double ms) {
  Quantity q{std::move(name), cut.value, {}, {}, ms};
  for (std::size_t i : cut.witness_edges) {
    q.witness_edges.push_back(edge_label(n, i));
  }
  q.witness_commodities.assign(cut.witness_commodities.begin(),
                               cut.witness_commodities.end());
  return q;
}

void add_bounds(Report& r, const Network& n, const EnumerationOptions& sp,
                const EnumerationOptions& mg) {
  auto start = Clock::now();
  const CutReport s = sparsity(n, sp);
  r.quantities.push_back(from_cut(n, "sparsity", s, since(start)));
  if (n.directed()) {
    start = Clock::now();
    const CutReport m = meagerness(n, mg);
    r.quantities.push_back(from_cut(n, "meagerness", m, since(start)));
  } else {
    start = Clock::now();
    const Rational w = wiener_bound(n);
    r.quantities.push_back({"wiener", w, {}, {}, since(start)});
  }
}

std::string target_text(const CertificateTarget& t) {
  std::string out;
  for (const auto& [id, alpha] : t.alpha) {
    if (!out.empty()) out += " + ";
    if (alpha != Rational(1)) out += alpha.str() + " ";
    out += "r_" + id;
  }
  return out + " <= " + t.bound.str();
}

CertificateEntry run_check(const Network& n, const Certificate& cert,
                           const std::string& source) {
  const auto start = Clock::now();
  const Verdict v = check_certificate(n, cert);
  CertificateEntry e;
  e.source = source;
  e.valid = v.valid;
  e.target = target_text(cert.target);
  e.bound = v.bound;
  e.symmetric_bound = v.symmetric_bound;
  e.residual = to_string(v.residual);
  e.caveats = v.caveats;
  e.elapsed_ms = since(start);
  return e;
}

bool is_n1(const Network& n) {
  const int k = static_cast<int>(n.commodities().size());
  return n.directed() && k >= 2 && n == gen_n1(k);
}

}  // namespace

Network generate(const GenRequest& req) {
  if (req.family == "n1") return gen_n1(req.k);
  if (req.family == "hu") return gen_hu();
  if (req.family == "bipartite") {
    BipartiteType type;
    if (req.type == "I") {
      type = BipartiteType::kTypeI;
    } else if (req.type == "II") {
      type = BipartiteType::kTypeII;
    } else {
      throw std::invalid_argument("bipartite --type must be I or II");
    }
    return gen_bipartite(type, req.m, req.n);
  }
  throw std::invalid_argument("unknown family '" + req.family + "'");
}

std::string cmd_gen(const GenRequest& req) {
  return serialize_network(generate(req));
}

std::optional<BundledCertificate> bundled_certificate(const Network& n) {
  if (is_n1(n)) {
    const int k = static_cast<int>(n.commodities().size());
    return BundledCertificate{"n1_k" + std::to_string(k),
                              gen_certificate_n1(k)};
  }
  if (n == gen_hu()) return BundledCertificate{"hu", gen_certificate_hu()};
  if (!n.directed() && !n.commodities().empty() && bipartition(n)) {
    return BundledCertificate{"bipartite", gen_certificate_bipartite(n)};
  }
  return std::nullopt;
}

std::string cmd_cert(const GenRequest& req) {
  if (req.family == "n1") return serialize_certificate(gen_certificate_n1(req.k));
  if (req.family == "hu") return serialize_certificate(gen_certificate_hu());
  Certificate cert = gen_certificate_bipartite(generate(req));
  cert.network = "bipartite_" + req.type + "_" + std::to_string(req.m) + "_" +
                 std::to_string(req.n);
  return serialize_certificate(cert);
}

Report cmd_bounds(const Network& n, const EnumerationOptions& sp,
                  const EnumerationOptions& mg) {
  Report r = summary(n, "bounds");
  add_bounds(r, n, sp, mg);
  return r;
}

Report cmd_route(const Network& n, bool with_scheme, bool with_lp) {
  Report r = summary(n, "route");
  const auto start = Clock::now();
  const RoutingResult routed = routing_rate(n);
  r.quantities.push_back({"routing", routed.rate, {}, {}, since(start)});
  if (with_scheme) {
    for (const auto& [key, amount] : routed.scheme.flow) {
      r.scheme.push_back(key.first + " " + to_string(key.second) + " " +
                         amount.str());
    }
  }
  if (with_lp) r.lp_dump = to_string(build_concurrent_flow_lp(n).lp);
  return r;
}

Report cmd_check(const Network& n, const Certificate& cert,
                 const std::string& source) {
  Report r = summary(n, "check");
  r.certificates.push_back(run_check(n, cert, source));
  return r;
}

Report cmd_gap(const Network& n, const EnumerationOptions& sp,
               const EnumerationOptions& mg,
               const std::optional<Certificate>& supplied,
               const std::string& supplied_source) {
  Report r = summary(n, "gap");
  auto start = Clock::now();
  const Rational routing = routing_rate(n).rate;
  r.quantities.push_back({"routing", routing, {}, {}, since(start)});
  add_bounds(r, n, sp, mg);

  std::optional<CertificateEntry> entry;
  if (supplied) {
    entry = run_check(n, *supplied, supplied_source);
  } else {
    try {
      if (auto bundled = bundled_certificate(n)) {
        // Round-trip through the file format so the parser is on the path.
        const Certificate parsed =
            parse_certificate(serialize_certificate(bundled->certificate));
        entry = run_check(n, parsed, "bundled:" + bundled->family);
      }
    } catch (const CertificateError& e) {
      r.findings.push_back(std::string("generated certificate rejected: ") +
                           e.what());
    }
  }

  if (entry) {
    r.certificates.push_back(*entry);
    if (entry->valid) {
      r.quantities.push_back(
          {"coding_bound", entry->symmetric_bound, {}, {}, entry->elapsed_ms});
    } else {
      r.findings.push_back("certificate " + entry->source +
                           " is invalid; no coding bound reported");
    }
  } else if (r.findings.empty()) {
    r.findings.push_back("no certificate applies to this network");
  }

  std::optional<Rational> coding;
  if (const Quantity* q = r.find("coding_bound")) coding = q->value;
  if (n.directed() && coding) {
    const Rational ratio = r.find("meagerness")->value / *coding;
    r.quantities.push_back({"meagerness_to_coding_ratio", ratio, {}, {}, 0});
    r.findings.push_back("meagerness / coding bound = " + ratio.str());
  }

  for (const Quantity& q : r.quantities) {
    if (q.name == "routing" || q.name == "meagerness_to_coding_ratio") continue;
    if (routing > q.value) {
      throw std::logic_error("routing rate " + routing.str() + " exceeds " +
                             q.name + " " + q.value.str());
    }
  }

  if (coding && routing == *coding) {
    r.findings.push_back(n.directed() ? "routing attains the coding upper bound"
                                      : kConjectureConfirmed);
  } else if (coding) {
    r.findings.push_back("routing rate " + routing.str() +
                         " is below the coding upper bound " +
                         coding->str());
  }
  return r;
}

}  // namespace kpairs::cli
