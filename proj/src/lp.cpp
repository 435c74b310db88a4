#include "kpairs/lp.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace kpairs {

std::size_t LinearProgram::add_variable(std::string name, bool nonnegative) {
  variables_.push_back({std::move(name), nonnegative});
  return variables_.size() - 1;
}

void LinearProgram::check_form(const LinearForm& form) const {
  for (const auto& [var, coeff] : form) {
    if (var >= variables_.size()) {
      throw std::out_of_range("linear form references undeclared variable " +
                              std::to_string(var));
    }
  }
}

std::size_t LinearProgram::add_constraint(std::string name, LinearForm lhs,
                                          Relation relation, Rational rhs) {
  check_form(lhs);
  std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
  constraints_.push_back({std::move(name), std::move(lhs), relation,
                          std::move(rhs)});
  return constraints_.size() - 1;
}

void LinearProgram::set_objective(LinearForm objective, Sense sense) {
  check_form(objective);
  std::erase_if(objective, [](const auto& kv) { return kv.second.is_zero(); });
  objective_ = std::move(objective);
  sense_ = sense;
}

namespace {

void write_form(std::ostream& out, const LinearProgram& lp,
                const LinearForm& form) {
  if (form.empty()) {
    out << "0";
    return;
  }
  bool first = true;
  for (const auto& [var, coeff] : form) {
    const bool negative = coeff.sign() < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    const Rational mag = abs(coeff);
    if (mag != Rational(1)) out << mag << " ";
    out << lp.variables()[var].name;
    first = false;
  }
}

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::kLessEqual: return "<=";
    case Relation::kEqual: return "=";
    case Relation::kGreaterEqual: return ">=";
  }
  return "?";
}

}  // namespace

std::string to_string(const LinearProgram& lp) {
  std::ostringstream out;
  out << (lp.sense() == Sense::kMaximize ? "maximize " : "minimize ");
  write_form(out, lp, lp.objective());
  out << "\nsubject to\n";
  for (const Constraint& c : lp.constraints()) {
    out << "  " << c.name << ": ";
    write_form(out, lp, c.lhs);
    out << " " << relation_symbol(c.relation) << " " << c.rhs << "\n";
  }
  out << "bounds\n";
  for (const Variable& v : lp.variables()) {
    out << "  " << v.name << (v.nonnegative ? " >= 0" : " free") << "\n";
  }
  return out.str();
}

Rational evaluate(const LinearForm& form, const std::vector<Rational>& x) {
  Rational sum;
  for (const auto& [var, coeff] : form) sum += coeff * x.at(var);
  return sum;
}

std::string to_string(SimplexStatus status) {
  switch (status) {
    case SimplexStatus::kOptimal: return "optimal";
    case SimplexStatus::kInfeasible: return "infeasible";
    case SimplexStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

bool verify_optimality(const LinearProgram& lp, const SimplexResult& result,
                       std::string* why) {
  auto fail = [why](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (result.status != SimplexStatus::kOptimal) return fail("not optimal");
  const auto& vars = lp.variables();
  const auto& rows = lp.constraints();
  if (result.primal.size() != vars.size() || result.dual.size() != rows.size()) {
    return fail("certificate has the wrong dimensions");
  }
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (vars[j].nonnegative && result.primal[j].sign() < 0) {
      return fail("variable " + vars[j].name + " is negative");
    }
  }
  for (const Constraint& c : rows) {
    const Rational lhs = evaluate(c.lhs, result.primal);
    const bool ok = c.relation == Relation::kLessEqual ? lhs <= c.rhs
                    : c.relation == Relation::kEqual   ? lhs == c.rhs
                                                       : lhs >= c.rhs;
    if (!ok) return fail("constraint " + c.name + " is violated");
  }
  if (evaluate(lp.objective(), result.primal) != result.value) {
    return fail("primal objective differs from the reported value");
  }
  // Dual feasibility in the LP's own sense. For maximisation the reduced
  // costs A^T y - c must be >= 0 on nonnegative variables.
  const int s = lp.sense() == Sense::kMaximize ? 1 : -1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int sign = result.dual[i].sign() * s;
    if ((rows[i].relation == Relation::kLessEqual && sign < 0) ||
        (rows[i].relation == Relation::kGreaterEqual && sign > 0)) {
      return fail("dual multiplier of " + rows[i].name + " has the wrong sign");
    }
  }
  std::vector<Rational> reduced(vars.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [var, coeff] : rows[i].lhs) {
      reduced[var] += coeff * result.dual[i];
    }
  }
  for (const auto& [var, coeff] : lp.objective()) reduced[var] -= coeff;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const int sign = reduced[j].sign() * s;
    if (vars[j].nonnegative ? sign < 0 : sign != 0) {
      return fail("dual constraint of " + vars[j].name + " is violated");
    }
  }
  Rational dual_value;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    dual_value += result.dual[i] * rows[i].rhs;
  }
  if (dual_value != result.value) {
    return fail("dual objective " + dual_value.str() + " differs from " +
                result.value.str());
  }
  return true;
}

}  // namespace kpairs
