#ifndef KPAIRS_CERTIFICATE_HPP
#define KPAIRS_CERTIFICATE_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kpairs/entropy.hpp"
#include "kpairs/network.hpp"
#include "kpairs/rational.hpp"

namespace kpairs {

struct CertificateStep {
  Rational coefficient;
  Axiom axiom;
};

// sum_i alpha_i r_i <= bound
struct CertificateTarget {
  std::map<std::string, Rational> alpha;
  Rational bound;
};

struct Certificate {
  std::string network;  // free-form label of the network it was built for
  std::vector<CertificateStep> steps;
  CertificateTarget target;
};

struct Verdict {
  bool valid = false;
  Rational bound;            // C of the target
  Rational symmetric_bound;  // C / sum alpha_i
  EntropyExpr combined;      // sum of coefficient * expansion
  EntropyExpr residual;      // combined minus (sum alpha_i r_i - C)
  // Axiom uses whose soundness rests on an informal argument.
  std::vector<std::string> caveats;
};

// Sums the scaled expansions and compares them with the target exactly.
// Throws CertificateError on a negative coefficient, an empty target, or a
// failed side condition (the message names the step).
Verdict check_certificate(const Network& network, const Certificate& cert);

// Line format (the target is written first, steps follow in proof order):
//   target <C> <id>:<alpha> ...
//   step <coeff> <axiom> <args...>
// '#' starts a comment; a leading "# network: <label>" comment is kept.
Certificate parse_certificate(std::string_view text);
std::string serialize_certificate(const Certificate& cert);

EntropyExpr target_expression(const CertificateTarget& target);

// Generators for the three proof chains. Each emits steps in proof order.
Certificate gen_certificate_n1(int k);
Certificate gen_certificate_hu();
// Requires an undirected bipartite network; throws CertificateError
// otherwise.
Certificate gen_certificate_bipartite(const Network& network);

}  // namespace kpairs

#endif  // KPAIRS_CERTIFICATE_HPP
