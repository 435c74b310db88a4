#ifndef KPAIRS_SHANNON_HPP
#define KPAIRS_SHANNON_HPP

#include <cstddef>

#include "kpairs/lp.hpp"
#include "kpairs/rational.hpp"

namespace kpairs {

// Outcome of minimising
//   sum_i H(A_i) - H(u A_i) - H(u_{i<j} A_i n A_j)
// (or its negation) over the cone cut out by the elemental Shannon
// inequalities. The n sets are modelled by 2^n - 1 ground variables, one per
// nonempty region of their Venn diagram.
struct ShannonCheck {
  SimplexStatus status = SimplexStatus::kInfeasible;
  Rational minimum;  // meaningful when status is optimal
  std::size_t ground_variables = 0;
  std::size_t entropy_coordinates = 0;
  std::size_t elemental_inequalities = 0;
};

// n_sets must be 2 or 3; throws std::invalid_argument otherwise.
ShannonCheck minimize_set_inequality(int n_sets, bool negated = false);

// True iff the inequality is Shannon-type, i.e. the exact minimum is 0.
bool verify_shannon_type(int n_sets, bool negated = false);

}  // namespace kpairs

#endif  // KPAIRS_SHANNON_HPP
