#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "ssc/errors.hpp"

namespace ssc {

/// Exact rational scalar; GMP keeps it canonical (reduced, positive
/// denominator) automatically.
using Rational = mpq_class;

/// minimize c.x  subject to  A x >= b,  0 <= x_i <= u_i.
/// Everything is exact; the solver never rounds.
struct LinearProgram {
    std::vector<Rational> objective;            // c, one per variable
    std::vector<std::vector<Rational>> rows;    // A, row-wise
    std::vector<Rational> rhs;                  // b
    std::vector<Rational> upper;                // u

    size_t num_vars() const { return objective.size(); }
    void validate() const;
};

struct LpSolution {
    Rational optimum;
    std::vector<Rational> primal;
    /// Dual multipliers for the A x >= b rows (y >= 0). Together with the
    /// implied bound duals they certify optimality; solve_lp checks the
    /// certificate before returning.
    std::vector<Rational> dual;
};

/// Two-phase tableau simplex with Bland's anti-cycling rule.
LpSolution solve_lp(const LinearProgram& lp);

struct IlpSolution {
    mpz_class optimum;
    std::vector<mpz_class> witness;
    uint64_t nodes = 0;
    bool exact = true; // false when the node budget ran out with an incumbent
};

/// Best-bound branch-and-bound on the most-fractional variable with
/// deterministic lexicographic tie-breaks. Throws NodeBudgetExceeded only
/// when the budget runs out before any integer incumbent is found.
IlpSolution solve_ilp(const LinearProgram& lp, uint64_t node_budget = 100000);

} // namespace ssc
