#include "kpairs/certificate.hpp"

#include <sstream>

namespace kpairs {

EntropyExpr target_expression(const CertificateTarget& target) {
  EntropyExpr e;
  for (const auto& [id, alpha] : target.alpha) e.add_rate(id, alpha);
  e.add_constant(-target.bound);
  return e;
}

Verdict check_certificate(const Network& network, const Certificate& cert) {
  Rational alpha_sum;
  for (const auto& [id, alpha] : cert.target.alpha) {
    if (alpha.sign() < 0) {
      throw CertificateError("target coefficient of " + id + " is negative");
    }
    if (!network.has_commodity(id)) {
      throw CertificateError("target names unknown commodity '" + id + "'");
    }
    alpha_sum += alpha;
  }
  if (alpha_sum.is_zero()) {
    throw CertificateError("target has no positive rate coefficient");
  }

  Verdict v;
  bool informal_noted = false;
  bool many_sets_noted = false;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertificateStep& step = cert.steps[i];
    const std::string where = "step " + std::to_string(i + 1) + " (" +
                              std::string(axiom_name(step.axiom)) + ")";
    if (step.coefficient.sign() < 0) {
      throw CertificateError(where + ": negative coefficient");
    }
    EntropyExpr e;
    try {
      e = expand_axiom(network, step.axiom);
    } catch (const std::exception& ex) {
      throw CertificateError(where + ": " + ex.what());
    }
    e *= step.coefficient;
    v.combined += e;

    if (const auto* f = std::get_if<Functional>(&step.axiom);
        f && f->justification == Justification::kSourceOut && !informal_noted) {
      v.caveats.push_back(
          "source_out: a message is taken to be a function of its source's "
          "outgoing arcs; this step has no formal derivation for undirected "
          "coding");
      informal_noted = true;
    }
    if (const auto* g = std::get_if<GeneralizedSubmodularity>(&step.axiom);
        g && g->sets.size() >= 4 && !many_sets_noted) {
      v.caveats.push_back(
          "generalized_submodularity with four or more sets is accepted "
          "without machine validation");
      many_sets_noted = true;
    }
  }

  v.bound = cert.target.bound;
  v.symmetric_bound = cert.target.bound / alpha_sum;
  v.residual = v.combined;
  v.residual -= target_expression(cert.target);
  v.valid = v.residual.is_zero();
  return v;
}

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

NodeSet parse_node_list(std::string_view token) {
  NodeSet out;
  while (true) {
    const auto comma = token.find(',');
    const auto piece = token.substr(0, comma);
    if (!is_valid_name(piece)) {
      throw CertificateError("malformed node '" + std::string(piece) + "'");
    }
    out.insert(std::string(piece));
    if (comma == std::string_view::npos) break;
    token.remove_prefix(comma + 1);
  }
  return out;
}

Justification parse_justification(const std::string& s) {
  if (s == "edge_local") return Justification::kEdgeLocal;
  if (s == "sink_decoding") return Justification::kSinkDecoding;
  if (s == "source_out") return Justification::kSourceOut;
  throw CertificateError("unknown justification '" + s + "'");
}

Axiom parse_axiom(const std::vector<std::string>& tok) {
  // tok[0] = "step", tok[1] = coefficient, tok[2] = axiom name
  const std::string& name = tok[2];
  const std::size_t argc = tok.size() - 3;
  auto arg = [&](std::size_t i) -> const std::string& { return tok[3 + i]; };
  auto expect = [&](std::size_t n, const char* usage) {
    if (argc != n) throw CertificateError(std::string("usage: ") + usage);
  };
  if (name == "monotonicity") {
    expect(2, "monotonicity <A> <B>");
    return Monotonicity{parse_var_set(arg(0)), parse_var_set(arg(1))};
  }
  if (name == "submodularity") {
    expect(2, "submodularity <A> <B>");
    return Submodularity{parse_var_set(arg(0)), parse_var_set(arg(1))};
  }
  if (name == "subadditivity") {
    expect(2, "subadditivity <A> <B>");
    return Subadditivity{parse_var_set(arg(0)), parse_var_set(arg(1))};
  }
  if (name == "generalized_submodularity") {
    if (argc == 0) {
      throw CertificateError("usage: generalized_submodularity <A1> ... <An>");
    }
    GeneralizedSubmodularity g;
    for (std::size_t i = 0; i < argc; ++i) g.sets.push_back(parse_var_set(arg(i)));
    return g;
  }
  if (name == "input_output") {
    expect(1, "input_output <node,...>");
    return InputOutput{parse_node_list(arg(0))};
  }
  if (name == "functional") {
    expect(3, "functional <var> <B> <justification>");
    return Functional{parse_info_var(arg(0)), parse_var_set(arg(1)),
                      parse_justification(arg(2))};
  }
  if (name == "independence") {
    expect(2, "independence <M> le|ge");
    if (arg(1) != "le" && arg(1) != "ge") {
      throw CertificateError("independence direction must be le or ge");
    }
    return Independence{parse_var_set(arg(0)), arg(1) == "le"
                                                   ? Direction::kLessEqual
                                                   : Direction::kGreaterEqual};
  }
  if (name == "capacity") {
    expect(2, "capacity <u> <v>");
    return CapacityAxiom{arg(0), arg(1)};
  }
  if (name == "rate") {
    expect(1, "rate <id>");
    return RateAxiom{arg(0)};
  }
  throw CertificateError("unknown axiom '" + name + "'");
}

struct ArgWriter {
  std::ostream& out;

  void operator()(const Monotonicity& a) const {
    out << ' ' << to_string(a.subset) << ' ' << to_string(a.superset);
  }
  void operator()(const Submodularity& a) const {
    out << ' ' << to_string(a.a) << ' ' << to_string(a.b);
  }
  void operator()(const Subadditivity& a) const {
    out << ' ' << to_string(a.a) << ' ' << to_string(a.b);
  }
  void operator()(const GeneralizedSubmodularity& a) const {
    for (const VarSet& s : a.sets) out << ' ' << to_string(s);
  }
  void operator()(const InputOutput& a) const {
    out << ' ';
    bool first = true;
    for (const auto& node : a.nodes) {
      if (!first) out << ',';
      out << node;
      first = false;
    }
  }
  void operator()(const Functional& a) const {
    out << ' ' << to_string(a.target) << ' ' << to_string(a.given) << ' '
        << to_string(a.justification);
  }
  void operator()(const Independence& a) const {
    out << ' ' << to_string(a.messages) << ' '
        << (a.direction == Direction::kLessEqual ? "le" : "ge");
  }
  void operator()(const CapacityAxiom& a) const {
    out << ' ' << a.u << ' ' << a.v;
  }
  void operator()(const RateAxiom& a) const { out << ' ' << a.commodity; }
};

}  // namespace

Certificate parse_certificate(std::string_view text) {
  Certificate cert;
  bool have_target = false;
  std::size_t no = 0;
  while (!text.empty()) {
    ++no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    const auto hash = line.find('#');
    if (hash != std::string_view::npos) {
      const auto comment = line.substr(hash + 1);
      const auto tag = comment.find("network:");
      if (cert.network.empty() && tag != std::string_view::npos) {
        const auto label = split(comment.substr(tag + 8));
        if (!label.empty()) cert.network = label.front();
      }
      line = line.substr(0, hash);
    }
    const auto tok = split(line);
    if (tok.empty()) continue;
    const std::string prefix = "line " + std::to_string(no) + ": ";
    try {
      if (tok[0] == "step") {
        if (tok.size() < 3) throw CertificateError("usage: step <coeff> <axiom> ...");
        cert.steps.push_back({Rational::parse(tok[1]), parse_axiom(tok)});
      } else if (tok[0] == "target") {
        if (have_target) throw CertificateError("repeated target line");
        if (tok.size() < 3) {
          throw CertificateError("usage: target <C> <id>:<alpha> ...");
        }
        cert.target.bound = Rational::parse(tok[1]);
        for (std::size_t i = 2; i < tok.size(); ++i) {
          const auto colon = tok[i].rfind(':');
          if (colon == std::string::npos) {
            throw CertificateError("malformed target term '" + tok[i] + "'");
          }
          const std::string id = tok[i].substr(0, colon);
          if (!cert.target.alpha
                   .emplace(id, Rational::parse(tok[i].substr(colon + 1)))
                   .second) {
            throw CertificateError("repeated target term for '" + id + "'");
          }
        }
        have_target = true;
      } else {
        throw CertificateError("unknown keyword '" + tok[0] + "'");
      }
    } catch (const std::exception& ex) {
      throw CertificateError(prefix + ex.what());
    }
  }
  if (!have_target) throw CertificateError("certificate has no target line");
  return cert;
}

std::string serialize_certificate(const Certificate& cert) {
  std::ostringstream out;
  if (!cert.network.empty()) out << "# network: " << cert.network << "\n";
  out << "target " << cert.target.bound;
  for (const auto& [id, alpha] : cert.target.alpha) {
    out << ' ' << id << ':' << alpha;
  }
  out << "\n";
  for (const CertificateStep& step : cert.steps) {
    out << "step " << step.coefficient << ' ' << axiom_name(step.axiom);
    std::visit(ArgWriter{out}, step.axiom);
    out << "\n";
  }
  return out.str();
}

}  // namespace kpairs
