// Two-phase primal simplex over a dense rational tableau.
//
// Every constraint row owns one identity column (its slack, or its artificial
// for = and >= rows). Those columns start as the identity matrix, so at any
// basis they hold B^-1 and the duals fall out as c_B^T B^-1. Entering and
// leaving variables follow Bland's least-index rule, which cannot cycle.

#include <cstddef>
#include <optional>
#include <vector>

#include "kpairs/lp.hpp"

namespace kpairs {

namespace {

enum class ColumnKind { kStructural, kSlack, kSurplus, kArtificial };

struct Column {
  ColumnKind kind;
  std::size_t source;  // LP variable (structural) or row (others)
  int sign;            // -1 for the negative half of a free variable
};

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const auto& vars = lp.variables();
    for (std::size_t j = 0; j < vars.size(); ++j) {
      var_cols_.push_back(columns_.size());
      columns_.push_back({ColumnKind::kStructural, j, 1});
      if (!vars[j].nonnegative) {
        columns_.push_back({ColumnKind::kStructural, j, -1});
      }
    }
    const auto& rows = lp.constraints();
    const std::size_t m = rows.size();
    row_sign_.assign(m, 1);
    identity_.resize(m);
    std::vector<std::optional<std::size_t>> surplus(m);
    for (std::size_t i = 0; i < m; ++i) {
      Relation rel = rows[i].relation;
      // Homogeneous >= rows flip to <= so their slack can start basic.
      if (rows[i].rhs.sign() < 0 ||
          (rows[i].rhs.is_zero() && rel == Relation::kGreaterEqual)) {
        row_sign_[i] = -1;
        if (rel == Relation::kLessEqual) rel = Relation::kGreaterEqual;
        else if (rel == Relation::kGreaterEqual) rel = Relation::kLessEqual;
      }
      if (rel == Relation::kLessEqual) {
        identity_[i] = columns_.size();
        columns_.push_back({ColumnKind::kSlack, i, 1});
      } else {
        if (rel == Relation::kGreaterEqual) {
          surplus[i] = columns_.size();
          columns_.push_back({ColumnKind::kSurplus, i, 1});
        }
        identity_[i] = columns_.size();
        columns_.push_back({ColumnKind::kArtificial, i, 1});
      }
    }

    const std::size_t n = columns_.size();
    t_.assign(m, std::vector<mpq_class>(n + 1));
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const mpq_class s = row_sign_[i];
      for (const auto& [var, coeff] : rows[i].lhs) {
        t_[i][var_cols_[var]] = s * coeff.raw();
        if (!vars[var].nonnegative) t_[i][var_cols_[var] + 1] = -s * coeff.raw();
      }
      if (surplus[i]) t_[i][*surplus[i]] = -1;
      t_[i][identity_[i]] = 1;
      t_[i][n] = s * rows[i].rhs.raw();
      basis_[i] = identity_[i];
    }

    const mpq_class dir = lp.sense() == Sense::kMaximize ? 1 : -1;
    cost_.assign(n, 0);
    for (const auto& [var, coeff] : lp.objective()) {
      cost_[var_cols_[var]] = dir * coeff.raw();
      if (!vars[var].nonnegative) cost_[var_cols_[var] + 1] = -dir * coeff.raw();
    }
  }

  SimplexResult solve() {
    SimplexResult result;
    if (has_artificials()) {
      std::vector<mpq_class> phase1(columns_.size(), 0);
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (columns_[j].kind == ColumnKind::kArtificial) phase1[j] = -1;
      }
      run(phase1, /*allow_artificial=*/true);
      if (sgn(objective_value(phase1)) < 0) {
        result.status = SimplexStatus::kInfeasible;
        return result;
      }
      drive_out_artificials();
    }
    if (!run(cost_, /*allow_artificial=*/false)) {
      result.status = SimplexStatus::kUnbounded;
      return result;
    }
    result.status = SimplexStatus::kOptimal;
    extract(result);
    return result;
  }

 private:
  bool has_artificials() const {
    for (const Column& c : columns_) {
      if (c.kind == ColumnKind::kArtificial) return true;
    }
    return false;
  }

  mpq_class objective_value(const std::vector<mpq_class>& cost) const {
    mpq_class z = 0;
    const std::size_t rhs = columns_.size();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (sgn(cost[basis_[i]]) != 0) z += cost[basis_[i]] * t_[i][rhs];
    }
    return z;
  }

  std::vector<mpq_class> reduced_costs(const std::vector<mpq_class>& cost) const {
    std::vector<mpq_class> d = cost;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const mpq_class& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (sgn(t_[i][j]) != 0) d[j] -= cb * t_[i][j];
      }
    }
    return d;
  }

  // Maximises cost^T x from the current basis. False when unbounded.
  bool run(const std::vector<mpq_class>& cost, bool allow_artificial) {
    std::vector<mpq_class> d = reduced_costs(cost);
    const std::size_t rhs = columns_.size();
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (!allow_artificial && columns_[j].kind == ColumnKind::kArtificial) {
          continue;
        }
        if (sgn(d[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;

      std::optional<std::size_t> leave;
      mpq_class best_ratio;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (sgn(t_[i][*enter]) <= 0) continue;
        mpq_class ratio = t_[i][rhs] / t_[i][*enter];
        if (!leave || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter, &d);
    }
  }

  void pivot(std::size_t row, std::size_t col, std::vector<mpq_class>* d) {
    std::vector<mpq_class>& p = t_[row];
    const mpq_class piv = p[col];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (sgn(p[j]) != 0) {
        p[j] /= piv;
        nonzero.push_back(j);
      }
    }
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == row || sgn(t_[i][col]) == 0) continue;
      const mpq_class f = t_[i][col];
      for (std::size_t j : nonzero) t_[i][j] -= f * p[j];
    }
    if (d && sgn((*d)[col]) != 0) {
      const mpq_class f = (*d)[col];
      for (std::size_t j : nonzero) {
        if (j < d->size()) (*d)[j] -= f * p[j];
      }
    }
    basis_[row] = col;
  }

  // Pivots zero-level artificials out of the basis where some real column
  // has a nonzero entry in their row. Rows without one are redundant and keep
  // their artificial, which then never moves.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (columns_[basis_[i]].kind != ColumnKind::kArtificial) continue;
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (columns_[j].kind != ColumnKind::kArtificial && sgn(t_[i][j]) != 0) {
          pivot(i, j, nullptr);
          break;
        }
      }
    }
  }

  void extract(SimplexResult& result) const {
    const auto& vars = lp_.variables();
    const std::size_t rhs = columns_.size();
    std::vector<mpq_class> x(columns_.size(), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) x[basis_[i]] = t_[i][rhs];
    result.primal.assign(vars.size(), Rational());
    for (std::size_t j = 0; j < vars.size(); ++j) {
      mpq_class v = x[var_cols_[j]];
      if (!vars[j].nonnegative) v -= x[var_cols_[j] + 1];
      result.primal[j] = Rational(v);
    }
    result.value = evaluate(lp_.objective(), result.primal);

    // y_i = c_B^T B^-1 e_i, read from the identity column of row i, then
    // mapped back through the row's sign flip and the objective direction.
    const int dir = lp_.sense() == Sense::kMaximize ? 1 : -1;
    result.dual.assign(basis_.size(), Rational());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      mpq_class y = 0;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        const mpq_class& cb = cost_[basis_[i]];
        if (sgn(cb) != 0) y += cb * t_[i][identity_[r]];
      }
      result.dual[r] = Rational(mpq_class(y * row_sign_[r] * dir));
    }
  }

  const LinearProgram& lp_;
  std::vector<Column> columns_;
  std::vector<std::size_t> var_cols_;
  std::vector<std::size_t> identity_;
  std::vector<int> row_sign_;
  std::vector<std::vector<mpq_class>> t_;  // m rows, last entry is the rhs
  std::vector<std::size_t> basis_;
  std::vector<mpq_class> cost_;  // internal maximisation objective
};

}  // namespace

SimplexResult simplex_solve(const LinearProgram& lp) {
  return Tableau(lp).solve();
}

}  // namespace kpairs
