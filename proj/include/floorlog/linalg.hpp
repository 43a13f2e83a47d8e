#ifndef FLOORLOG_LINALG_HPP
#define FLOORLOG_LINALG_HPP

#include <optional>
#include <vector>

#include "floorlog/arith.hpp"

namespace floorlog {

using QRow = std::vector<Rat>;
using QMatrix = std::vector<QRow>;

/// Solve A x = b exactly over the rationals. Returns a particular solution
/// (free variables set to 0) or nullopt when inconsistent.
std::optional<QRow> solve_linear(QMatrix a, QRow b);

/// Nullspace basis of A over the rationals, one vector per free column
/// (free variable 1, others back-substituted), in column order.
std::vector<QRow> nullspace_basis(QMatrix a);

} // namespace floorlog

#endif
