#include "kpairs/shannon.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kpairs {

namespace {

// Entropy coordinates are indexed by nonempty subsets of the ground set,
// encoded as bitmasks; coordinate of mask S is variable S - 1.
struct EntropySpace {
  explicit EntropySpace(std::size_t ground) : ground(ground) {
    const std::size_t full = (std::size_t{1} << ground) - 1;
    for (std::size_t s = 1; s <= full; ++s) {
      lp.add_variable("h" + std::to_string(s));
    }
  }

  void add(LinearForm& form, std::size_t subset, const Rational& c) const {
    if (subset == 0) return;
    form[subset - 1] += c;
  }

  std::size_t ground;
  LinearProgram lp;
};

}  // namespace

ShannonCheck minimize_set_inequality(int n_sets, bool negated) {
  if (n_sets != 2 && n_sets != 3) {
    throw std::invalid_argument("n_sets must be 2 or 3");
  }
  const std::size_t n = static_cast<std::size_t>(n_sets);
  // Ground variable r <-> Venn region r + 1 (a nonempty subset of the sets).
  const std::size_t ground = (std::size_t{1} << n) - 1;
  EntropySpace space(ground);
  const std::size_t full = (std::size_t{1} << ground) - 1;

  std::size_t elemental = 0;
  for (std::size_t x = 0; x < ground; ++x) {
    LinearForm f;  // H(X_full) - H(X_full \ x) >= 0
    space.add(f, full, 1);
    space.add(f, full & ~(std::size_t{1} << x), -1);
    space.lp.add_constraint("cond_" + std::to_string(x), std::move(f),
                            Relation::kGreaterEqual, 0);
    ++elemental;
  }
  for (std::size_t x = 0; x < ground; ++x) {
    for (std::size_t y = x + 1; y < ground; ++y) {
      const std::size_t bx = std::size_t{1} << x, by = std::size_t{1} << y;
      const std::size_t others = full & ~(bx | by);
      // Every subset K of the remaining variables, including the empty one.
      for (std::size_t k = others;; k = (k - 1) & others) {
        LinearForm f;  // I(x; y | K) >= 0
        space.add(f, k | bx, 1);
        space.add(f, k | by, 1);
        space.add(f, k | bx | by, -1);
        space.add(f, k, -1);
        space.lp.add_constraint(
            "mi_" + std::to_string(x) + "_" + std::to_string(y) + "_" +
                std::to_string(k),
            std::move(f), Relation::kGreaterEqual, 0);
        ++elemental;
        if (k == 0) break;
      }
    }
  }

  // Set i covers every region whose index contains bit i.
  auto set_mask = [&](std::size_t i) {
    std::size_t m = 0;
    for (std::size_t r = 0; r < ground; ++r) {
      if (((r + 1) >> i) & 1U) m |= std::size_t{1} << r;
    }
    return m;
  };
  std::size_t shared = 0;
  for (std::size_t r = 0; r < ground; ++r) {
    if (__builtin_popcountll(r + 1) >= 2) shared |= std::size_t{1} << r;
  }
  const Rational s = negated ? -1 : 1;
  LinearForm objective;
  for (std::size_t i = 0; i < n; ++i) space.add(objective, set_mask(i), s);
  space.add(objective, full, -s);
  space.add(objective, shared, -s);
  space.lp.set_objective(std::move(objective), Sense::kMinimize);

  const SimplexResult result = simplex_solve(space.lp);
  ShannonCheck check;
  check.status = result.status;
  check.minimum = result.value;
  check.ground_variables = ground;
  check.entropy_coordinates = full;
  check.elemental_inequalities = elemental;
  return check;
}

bool verify_shannon_type(int n_sets, bool negated) {
  const ShannonCheck check = minimize_set_inequality(n_sets, negated);
  return check.status == SimplexStatus::kOptimal && check.minimum.is_zero();
}

}  // namespace kpairs
