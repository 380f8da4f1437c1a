#pragma once

#include "ultrafree/rational.hpp"

#include <vector>

namespace ultrafree {

/// Optimal primal/dual pair of max c.y s.t. A y <= b, y >= 0.
struct LpSolution {
    Rational value;
    std::vector<Rational> primal;  // one entry per column
    std::vector<Rational> dual;    // one entry per row
};

/// Dense exact simplex with Bland's rule. Requires b >= 0 so the origin is feasible.
/// Throws Infeasible when the program is unbounded and InternalContradiction if the
/// returned pair fails its own optimality certificate.
LpSolution solve_lp_max(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                        const std::vector<Rational>& c);

/// Checks feasibility of both solutions and equality of the objective values.
bool certify_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                const std::vector<Rational>& c, const LpSolution& s);

}  // namespace ultrafree
