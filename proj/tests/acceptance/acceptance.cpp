// Acceptance suite: one [PASS]/[FAIL] line per criterion. Criteria 1-6 drive
// the kpairs executable with machine output; 7 and 8 use the library and the
// test oracles directly.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kpairs/bounds.hpp"
#include "kpairs/certificate.hpp"
#include "kpairs/routing.hpp"
#include "kpairs/shannon.hpp"
#include "oracles.hpp"

namespace {

using nlohmann::json;
using kpairs::Rational;

const std::string kBin = KPAIRS_BIN;
const std::string kData = KPAIRS_DATA_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run shell(const std::string& command) {
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& line) { notes_.push_back(line); }
  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

// Runs `kpairs <args>` on the generated network and parses the report.
json report(Criterion& c, const std::string& gen, const std::string& args) {
  const std::string cmd = kBin + " gen " + gen + " | " + kBin + " " + args +
                          " - --format machine";
  const Run r = shell(cmd);
  c.expect(r.code == 0, "exit code " + std::to_string(r.code) + " from: " + cmd);
  try {
    return json::parse(r.out);
  } catch (const std::exception& e) {
    c.expect(false, "unparseable output from: " + cmd);
    return json::object();
  }
}

json check(Criterion& c, const std::string& gen, const std::string& cert) {
  const std::string path = kData + "/" + cert;
  const std::string cmd = kBin + " gen " + gen + " | " + kBin +
                          " check - " + path + " --format machine";
  const Run r = shell(cmd);
  c.expect(r.code == 0, "exit code " + std::to_string(r.code) + " from: " + cmd);
  try {
    return json::parse(r.out).at("certificates").at(0);
  } catch (const std::exception& e) {
    c.expect(false, "no verdict from: " + cmd);
    return json::object();
  }
}

std::string quantity(const json& doc, const std::string& name) {
  if (!doc.contains("quantities") || !doc["quantities"].contains(name)) {
    return "<missing>";
  }
  return doc["quantities"][name]["value"].get<std::string>();
}

bool has_finding(const json& doc, const std::string& text) {
  if (!doc.contains("findings")) return false;
  for (const auto& f : doc["findings"]) {
    if (f == text) return true;
  }
  return false;
}

void equal(Criterion& c, const std::string& label, const std::string& got,
           const std::string& want) {
  c.expect(got == want, label + ": got " + got + ", want " + want);
  if (got == want) c.note(label + " = " + got);
}

void criterion1(Criterion& c) {
  for (int k = 2; k <= 4; ++k) {
    const json doc = report(c, "n1 --k " + std::to_string(k), "bounds");
    equal(c, "meagerness N1(k=" + std::to_string(k) + ")",
          quantity(doc, "meagerness"), "1");
  }
}

void criterion2(Criterion& c) {
  for (int k = 2; k <= 6; ++k) {
    const std::string ks = std::to_string(k);
    const json v = check(c, "n1 --k " + ks, "n1_k" + ks + ".cert");
    c.expect(v.value("valid", false), "n1_k" + ks + ".cert not valid");
    equal(c, "symmetric coding bound N1(k=" + ks + ")",
          v.value("symmetric_bound", "<missing>"), Rational(1, k).str());
    // N1(k=5) and N1(k=6) have 21 and 28 edges, above the default caps.
    const json gap = report(c, "n1 --k " + ks, "gap --cap-edges 28");
    equal(c, "meagerness/coding bound N1(k=" + ks + ")",
          quantity(gap, "meagerness_to_coding_ratio"), ks);
  }
}

void criterion3(Criterion& c) {
  for (int k = 2; k <= 6; ++k) {
    const std::string ks = std::to_string(k);
    const json doc = report(c, "n1 --k " + ks, "route");
    equal(c, "routing N1(k=" + ks + ")", quantity(doc, "routing"),
          Rational(1, k).str());
    // Oracle: each commodity has one path and it crosses the bottleneck.
    const kpairs::Network n = kpairs::gen_n1(k);
    const std::size_t uv = *n.find_edge("u", "v");
    bool unique = true;
    for (const auto& com : n.commodities()) {
      const auto paths = oracle::simple_paths(n, com.source, com.sink);
      unique = unique && paths.size() == 1 &&
               std::find(paths[0].begin(), paths[0].end(), uv) != paths[0].end();
    }
    c.expect(unique, "path oracle: N1(k=" + ks + ") paths not unique through u>v");
    const auto oracle_rate = oracle::path_routing_rate(n, 12);
    c.expect(oracle_rate && *oracle_rate == Rational(1, k),
             "path oracle disagrees for N1(k=" + ks + ")");
  }
}

void criterion4(Criterion& c) {
  const json bounds = report(c, "hu", "bounds");
  equal(c, "sparsity", quantity(bounds, "sparsity"), "4/3");
  equal(c, "wiener", quantity(bounds, "wiener"), "8/7");
  equal(c, "routing", quantity(report(c, "hu", "route"), "routing"), "8/7");
  const json v = check(c, "hu", "hu.cert");
  c.expect(v.value("valid", false), "hu.cert not valid");
  equal(c, "target", v.value("target", "<missing>"),
        "2 r_a + 3 r_b + 2 r_g <= 8");
  equal(c, "symmetric coding bound", v.value("symmetric_bound", "<missing>"),
        "8/7");
  const json gap = report(c, "hu", "gap");
  c.expect(has_finding(gap, "conjecture confirmed on this instance"),
           "gap does not confirm the conjecture");
}

void criterion5(Criterion& c) {
  const std::string gen = "bipartite --type I --m 2 --n 3";
  const json bounds = report(c, gen, "bounds");
  equal(c, "sparsity", quantity(bounds, "sparsity"), "1");
  equal(c, "wiener", quantity(bounds, "wiener"), "3/4");
  equal(c, "routing", quantity(report(c, gen, "route"), "routing"), "3/4");
  const json v = check(c, gen, "bipartite_I_2_3.cert");
  c.expect(v.value("valid", false), "bipartite_I_2_3.cert not valid");
  equal(c, "certificate bound", v.value("symmetric_bound", "<missing>"), "3/4");
}

void criterion6(Criterion& c) {
  const std::string gen = "bipartite --type II --m 2 --n 2";
  const json v = check(c, gen, "bipartite_II_2_2.cert");
  c.expect(v.value("valid", false), "bipartite_II_2_2.cert not valid");
  equal(c, "certificate bound", v.value("symmetric_bound", "<missing>"), "1/2");
  equal(c, "routing", quantity(report(c, gen, "route"), "routing"), "1/2");
  c.expect(has_finding(report(c, gen, "gap"),
                       "conjecture confirmed on this instance"),
           "gap does not confirm the conjecture");
}

void criterion7(Criterion& c) {
  for (int n : {2, 3}) {
    const auto check = kpairs::minimize_set_inequality(n);
    c.expect(kpairs::verify_shannon_type(n),
             "n=" + std::to_string(n) + " not verified");
    c.note("n=" + std::to_string(n) + ": minimum " + check.minimum.str() +
           " over " + std::to_string(check.elemental_inequalities) +
           " elemental inequalities");
    c.expect(!kpairs::verify_shannon_type(n, true),
             "negated inequality accepted for n=" + std::to_string(n));
  }
}

void criterion8(Criterion& c) {
  // (a) and (b): random networks.
  std::mt19937_64 rng(20261018);
  std::size_t violations = 0, compared = 0, mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const kpairs::Network n = oracle::random_network(rng, i % 2 == 0, 8, 3);
    const Rational route = kpairs::routing_rate(n).rate;
    const Rational sparse = kpairs::sparsity(n).value;
    auto flag = [&](bool bad, const std::string& what) {
      if (!bad) return;
      if (violations++ == 0) {
        c.expect(false, what + " on\n" + kpairs::serialize_network(n));
      }
    };
    flag(route > sparse, "routing > sparsity");
    if (n.directed()) {
      flag(kpairs::meagerness(n).value < sparse, "meagerness < sparsity");
    } else {
      bool connected = true;
      const kpairs::DistanceTable d(n);
      for (const auto& com : n.commodities()) {
        connected = connected && d.distance(com.source, com.sink).has_value();
      }
      if (connected) flag(route > kpairs::wiener_bound(n), "routing > wiener");
    }
    if (const auto path = oracle::path_routing_rate(n, 12)) {
      ++compared;
      if (*path != route) {
        if (mismatches++ == 0) {
          c.expect(false, "edge vs path LP mismatch on\n" +
                              kpairs::serialize_network(n));
        }
      }
    }
  }
  c.expect(violations == 0, std::to_string(violations) + " bound violations");
  c.expect(mismatches == 0, std::to_string(mismatches) + " LP mismatches");
  c.note("(a) 200 random networks, " + std::to_string(violations) +
         " violations");
  c.note("(b) " + std::to_string(compared) + " instances compared, " +
         std::to_string(mismatches) + " mismatches");

  // (c) axiom soundness.
  const auto s = oracle::sample_axioms(4242, 1000);
  c.expect(s.violations == 0, s.first_violation);
  c.note("(c) " + std::to_string(s.samples) + " samples, " +
         std::to_string(s.evaluations) + " evaluations, " +
         std::to_string(s.violations) + " violations");

  // (d) single-coefficient perturbation of every bundled certificate.
  struct Bundle {
    const char* file;
    kpairs::Network network;
  };
  std::vector<Bundle> bundles;
  for (int k = 2; k <= 6; ++k) {
    bundles.push_back({nullptr, kpairs::gen_n1(k)});
  }
  const char* n1_files[] = {"n1_k2.cert", "n1_k3.cert", "n1_k4.cert",
                            "n1_k5.cert", "n1_k6.cert"};
  for (int i = 0; i < 5; ++i) bundles[i].file = n1_files[i];
  bundles.push_back({"hu.cert", kpairs::gen_hu()});
  bundles.push_back({"bipartite_I_2_3.cert",
                     kpairs::gen_bipartite(kpairs::BipartiteType::kTypeI, 2, 3)});
  bundles.push_back({"bipartite_II_2_2.cert",
                     kpairs::gen_bipartite(kpairs::BipartiteType::kTypeII, 2, 2)});
  std::size_t perturbed = 0, accepted = 0;
  for (const Bundle& b : bundles) {
    std::ifstream in(kData + "/" + b.file);
    std::stringstream text;
    text << in.rdbuf();
    const kpairs::Certificate cert = kpairs::parse_certificate(text.str());
    c.expect(kpairs::check_certificate(b.network, cert).valid,
             std::string(b.file) + " invalid before perturbation");
    auto rejected = [&](const kpairs::Certificate& p) {
      try {
        return !kpairs::check_certificate(b.network, p).valid;
      } catch (const kpairs::CertificateError&) {
        return true;
      }
    };
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
      for (const Rational& delta : {Rational(1), Rational(-1, 2)}) {
        kpairs::Certificate p = cert;
        p.steps[i].coefficient += delta;
        ++perturbed;
        if (!rejected(p)) {
          if (accepted++ == 0) {
            c.expect(false, std::string(b.file) + " step " +
                                std::to_string(i + 1) + " perturbation accepted");
          }
        }
      }
    }
    for (const auto& [id, _] : cert.target.alpha) {
      kpairs::Certificate p = cert;
      p.target.alpha[id] += 1;
      ++perturbed;
      if (!rejected(p)) ++accepted;
    }
    kpairs::Certificate p = cert;
    p.target.bound -= 1;
    ++perturbed;
    if (!rejected(p)) ++accepted;
  }
  c.expect(accepted == 0, std::to_string(accepted) + " perturbations accepted");
  c.note("(d) " + std::to_string(perturbed) + " perturbations, " +
         std::to_string(accepted) + " accepted");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>>
      criteria = {
          {"meagerness of N1 is 1 for k=2..4", criterion1},
          {"N1 coding bound is 1/k and meagerness/bound ratio is k, k=2..6",
           criterion2},
          {"N1 routing rate is 1/k, k=2..6", criterion3},
          {"three-commodity network: sparsity 4/3, wiener 8/7, routing 8/7, "
           "certificate 8/7, conjecture confirmed",
           criterion4},
          {"Type-I (2,3): sparsity 1, wiener 3/4, routing 3/4, certificate 3/4",
           criterion5},
          {"Type-II (2,2): certificate 1/2, routing 1/2, conjecture confirmed",
           criterion6},
          {"set inequality is Shannon-type for n=2,3; negation is not",
           criterion7},
          {"property suites on random instances and bundled certificates",
           criterion8},
      };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    c.expect(secs < 60, "took " + std::to_string(secs) + " s");
    std::printf("[%s] criterion %zu: %s (%.2f s)\n",
                c.passed() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                secs);
    for (const auto& n : c.notes()) std::printf("    %s\n", n.c_str());
    for (const auto& f : c.failures()) std::printf("    FAILED: %s\n", f.c_str());
    if (!c.passed()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
