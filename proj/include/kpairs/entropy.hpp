#ifndef KPAIRS_ENTROPY_HPP
#define KPAIRS_ENTROPY_HPP

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kpairs/network.hpp"
#include "kpairs/rational.hpp"

namespace kpairs {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A random variable of a network code: a commodity's message or the symbol
// carried by one arc. Messages order before arcs.
struct InfoVar {
  enum class Kind { kMessage, kArc };

  Kind kind = Kind::kMessage;
  std::string commodity;  // kMessage
  Arc arc;                // kArc

  static InfoVar message(std::string id) {
    return {Kind::kMessage, std::move(id), {}};
  }
  static InfoVar of_arc(Arc a) { return {Kind::kArc, {}, std::move(a)}; }

  friend auto operator<=>(const InfoVar&, const InfoVar&) = default;
  friend bool operator==(const InfoVar&, const InfoVar&) = default;
};

using VarSet = std::set<InfoVar>;

std::string to_string(const InfoVar& v);  // "msg:a" or "arc:a>g"
InfoVar parse_info_var(std::string_view token);

std::string to_string(const VarSet& set);  // comma-separated, "{}" if empty
VarSet parse_var_set(std::string_view token);

VarSet messages(const CommodityIds& ids);
VarSet arcs(const ArcSet& arcs);
VarSet set_union(const VarSet& a, const VarSet& b);
VarSet set_intersection(const VarSet& a, const VarSet& b);

// sum_S c_S H(X_S) + sum_i c_i r_i + constant, read as "<= 0" when it
// expresses an inequality. H of the empty set is 0 and never stored.
class EntropyExpr {
 public:
  void add_entropy(const VarSet& vars, const Rational& coeff);
  void add_rate(const std::string& commodity, const Rational& coeff);
  void add_constant(const Rational& c);

  EntropyExpr& operator+=(const EntropyExpr& other);
  EntropyExpr& operator-=(const EntropyExpr& other);
  EntropyExpr& operator*=(const Rational& factor);

  bool is_zero() const;
  bool has_entropy_terms() const { return !terms_.empty(); }

  const std::map<VarSet, Rational>& terms() const { return terms_; }
  const std::map<std::string, Rational>& rates() const { return rates_; }
  const Rational& constant() const { return constant_; }

  Rational entropy_coefficient(const VarSet& vars) const;

  friend bool operator==(const EntropyExpr&, const EntropyExpr&) = default;

 private:
  std::map<VarSet, Rational> terms_;
  std::map<std::string, Rational> rates_;
  Rational constant_;
};

// "H(msg:a) - 2 H(arc:a>g) + r_a - 8"
std::string to_string(const EntropyExpr& expr);

// Axiom schemas. Each expands to an expression E with E <= 0.

struct Monotonicity {  // H(A) <= H(B), A subset of B
  VarSet subset;
  VarSet superset;
};
struct Submodularity {  // H(A) + H(B) >= H(A u B) + H(A n B)
  VarSet a;
  VarSet b;
};
struct Subadditivity {  // H(A u B) <= H(A) + H(B)
  VarSet a;
  VarSet b;
};
struct GeneralizedSubmodularity {  // sum H(A_i) >= H(u A_i) + H(u_{i<j} A_i n A_j)
  std::vector<VarSet> sets;
};
struct InputOutput {  // H(In(U), S(U), Out(U), T(U)) <= H(In(U), S(U))
  NodeSet nodes;
};

enum class Justification {
  kEdgeLocal,     // y = arc (u,v); B covers In(u) and the messages of S(u)
  kSinkDecoding,  // y = message i; B covers In(t(i)) and messages of S(t(i))
  kSourceOut,     // y = message i; B covers Out(s(i))
};
struct Functional {  // H(B u {y}) <= H(B)
  InfoVar target;
  VarSet given;
  Justification justification;
};

// Independence of messages is an equality; a step uses one direction.
enum class Direction {
  kLessEqual,    // H(M) <= sum_i H(i)
  kGreaterEqual  // sum_i H(i) <= H(M)
};
struct Independence {
  VarSet messages;
  Direction direction;
};

struct CapacityAxiom {  // directed: H(uv) <= c; undirected: H(uv)+H(vu) <= c
  NodeId u;
  NodeId v;
};
struct RateAxiom {  // r_i <= H(i)
  std::string commodity;
};

using Axiom = std::variant<Monotonicity, Submodularity, Subadditivity,
                           GeneralizedSubmodularity, InputOutput, Functional,
                           Independence, CapacityAxiom, RateAxiom>;

std::string_view axiom_name(const Axiom& axiom);
std::string_view to_string(Justification j);

// Rewrites an axiom instance as E <= 0 after checking its side conditions
// against the network. Throws CertificateError naming the failed condition.
EntropyExpr expand_axiom(const Network& network, const Axiom& axiom);

}  // namespace kpairs

#endif  // KPAIRS_ENTROPY_HPP
