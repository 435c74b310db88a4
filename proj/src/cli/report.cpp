#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "kpairs/cli.hpp"

namespace kpairs::cli {

const Quantity* Report::find(const std::string& name) const {
  for (const Quantity& q : quantities) {
    if (q.name == name) return &q;
  }
  return nullptr;
}

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

}  // namespace

std::string render_human(const Report& r) {
  std::ostringstream out;
  out << "network: " << (r.directed ? "directed" : "undirected") << ", |V|="
      << r.nodes << ", |E|=" << r.edges << ", k=" << r.commodities << "\n";
  std::size_t width = 8;
  for (const Quantity& q : r.quantities) width = std::max(width, q.name.size());
  for (const Quantity& q : r.quantities) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << q.name
        << "  " << std::setw(10) << q.value.str() << " (" << to_decimal(q.value)
        << ")";
    out << "  [" << std::fixed << std::setprecision(1) << q.elapsed_ms
        << " ms]";
    out.unsetf(std::ios::fixed);
    out << "\n";
    if (!q.witness_edges.empty()) {
      out << "    witness edges: " << join(q.witness_edges, ", ") << "\n";
    }
    if (!q.witness_commodities.empty()) {
      out << "    witness commodities: " << join(q.witness_commodities, ", ")
          << "\n";
    }
  }
  for (const CertificateEntry& c : r.certificates) {
    out << "  certificate " << c.source << ": "
        << (c.valid ? "VALID" : "INVALID") << "\n";
    out << "    target: " << c.target << "\n";
    if (c.valid) {
      out << "    symmetric bound: " << c.symmetric_bound.str() << " ("
          << to_decimal(c.symmetric_bound) << ")\n";
    } else {
      out << "    residual: " << c.residual << " <= 0\n";
    }
    for (const auto& caveat : c.caveats) out << "    note: " << caveat << "\n";
  }
  if (!r.scheme.empty()) {
    out << "  routing scheme (commodity arc flow):\n";
    for (const auto& line : r.scheme) out << "    " << line << "\n";
  }
  if (!r.lp_dump.empty()) out << r.lp_dump;
  for (const auto& f : r.findings) out << f << "\n";
  return out.str();
}

std::string render_machine(const Report& r, bool with_timing) {
  nlohmann::ordered_json doc;
  doc["command"] = r.command;
  doc["network"] = {{"directed", r.directed},
                    {"nodes", r.nodes},
                    {"edges", r.edges},
                    {"commodities", r.commodities}};
  nlohmann::ordered_json quantities = nlohmann::ordered_json::object();
  nlohmann::ordered_json timing = nlohmann::ordered_json::object();
  for (const Quantity& q : r.quantities) {
    nlohmann::ordered_json entry;
    entry["value"] = q.value.str();
    if (!q.witness_edges.empty() || !q.witness_commodities.empty()) {
      entry["witness"] = {{"edges", q.witness_edges},
                          {"commodities", q.witness_commodities}};
    }
    quantities[q.name] = entry;
    timing[q.name] = q.elapsed_ms;
  }
  doc["quantities"] = quantities;
  nlohmann::ordered_json certs = nlohmann::ordered_json::array();
  for (const CertificateEntry& c : r.certificates) {
    nlohmann::ordered_json entry;
    entry["source"] = c.source;
    entry["valid"] = c.valid;
    entry["target"] = c.target;
    entry["bound"] = c.bound.str();
    entry["symmetric_bound"] = c.symmetric_bound.str();
    entry["residual"] = c.residual;
    entry["caveats"] = c.caveats;
    certs.push_back(entry);
    timing["certificate:" + c.source] = c.elapsed_ms;
  }
  doc["certificates"] = certs;
  if (!r.scheme.empty()) doc["scheme"] = r.scheme;
  doc["findings"] = r.findings;
  if (with_timing) doc["timing_ms"] = timing;
  return doc.dump(2) + "\n";
}

}  // namespace kpairs::cli
