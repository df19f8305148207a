#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ga/rational.hpp"

// Exact dense simplex over the rationals, Bland's rule throughout. Sized for
// desk-scale systems (tens of rows and columns).
namespace ga::lp {

/// Equality-form system A x = b, x >= 0. A is row-major, rows.size() == b.size().
struct System {
  std::vector<Vec> rows;
  Vec rhs;
  std::size_t cols = 0;
};

/// Some basic feasible solution, or nullopt if the system is infeasible.
std::optional<Vec> feasible_point(const System& sys);

/// argmin c.x over the system. nullopt if infeasible; throws ConsistencyError
/// if unbounded (callers only pose bounded problems).
std::optional<Vec> minimize(const System& sys, const Vec& cost);

/// Minimizes costs[0], then costs[1] over the optimal face, and so on.
/// nullopt if infeasible; throws ConsistencyError if any stage is unbounded.
std::optional<Vec> lex_minimize(const System& sys, std::span<const Vec> costs);

/// Lexicographically smallest feasible point: minimize x0, fix it, minimize
/// x1, and so on, for the first `count` variables.
std::optional<Vec> lexmin(System sys, std::size_t count);

}  // namespace ga::lp
