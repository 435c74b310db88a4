#ifndef KPAIRS_LP_HPP
#define KPAIRS_LP_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kpairs/rational.hpp"

namespace kpairs {

// Sparse linear form: variable index -> coefficient.
using LinearForm = std::map<std::size_t, Rational>;

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMaximize, kMinimize };

struct Variable {
  std::string name;
  bool nonnegative = true;
};

struct Constraint {
  std::string name;
  LinearForm lhs;
  Relation relation;
  Rational rhs;
};

class LinearProgram {
 public:
  std::size_t add_variable(std::string name, bool nonnegative = true);
  // Throws std::out_of_range if the form references an undeclared variable.
  std::size_t add_constraint(std::string name, LinearForm lhs,
                             Relation relation, Rational rhs);
  void set_objective(LinearForm objective, Sense sense = Sense::kMaximize);

  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const LinearForm& objective() const { return objective_; }
  Sense sense() const { return sense_; }

 private:
  void check_form(const LinearForm& form) const;

  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  LinearForm objective_;
  Sense sense_ = Sense::kMaximize;
};

// Human-readable listing, one constraint per line. Not an interchange format.
std::string to_string(const LinearProgram& lp);

Rational evaluate(const LinearForm& form, const std::vector<Rational>& x);

enum class SimplexStatus { kOptimal, kInfeasible, kUnbounded };

std::string to_string(SimplexStatus status);

// For an optimal result, `dual` holds one multiplier per constraint with
// value == sum_i dual[i] * rhs[i]. Multiplier signs follow the LP's sense:
// maximising, <= rows carry y >= 0 and >= rows y <= 0; minimising flips both.
struct SimplexResult {
  SimplexStatus status = SimplexStatus::kInfeasible;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
};

// Exact two-phase dense-tableau simplex with Bland's least-index rule.
SimplexResult simplex_solve(const LinearProgram& lp);

// Checks primal feasibility, dual feasibility and equal objectives in exact
// arithmetic. On failure returns false and describes the first violation.
bool verify_optimality(const LinearProgram& lp, const SimplexResult& result,
                       std::string* why = nullptr);

}  // namespace kpairs

#endif  // KPAIRS_LP_HPP
