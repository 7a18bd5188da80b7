#include "ssc/lp.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

namespace ssc {

void LinearProgram::validate() const {
    size_t n = objective.size();
    if (n == 0) throw OutOfRange("linear program has no variables");
    if (upper.size() != n) throw OutOfRange("bound vector length mismatch");
    if (rows.size() != rhs.size()) throw OutOfRange("constraint/rhs length mismatch");
    for (const auto& row : rows)
        if (row.size() != n) throw OutOfRange("constraint row length mismatch");
}

namespace {

// Dense two-phase simplex over exact rationals. The equality system is
//   A x - s = b        (one surplus per >= row)
//   x_j + t_j = u_j    (one slack per variable bound)
// with every row sign-normalized to nonnegative rhs and one artificial per
// row as the starting basis. Bland's rule (smallest eligible index) keeps
// the pivot sequence finite and deterministic.
class Simplex {
public:
    explicit Simplex(const LinearProgram& lp)
        : n_(lp.num_vars()), m_(lp.rows.size()), rows_(m_ + n_),
          cols_(n_ + m_ + n_ + rows_ + 1) {
        art0_ = n_ + m_ + n_;
        rhs_col_ = cols_ - 1;
        tab_.assign(rows_, std::vector<Rational>(cols_, 0));
        sigma_.assign(rows_, 1);
        basis_.assign(rows_, 0);
        for (size_t i = 0; i < m_; ++i) {
            auto& row = tab_[i];
            for (size_t j = 0; j < n_; ++j) row[j] = lp.rows[i][j];
            row[n_ + i] = -1; // surplus
            row[rhs_col_] = lp.rhs[i];
        }
        for (size_t j = 0; j < n_; ++j) {
            auto& row = tab_[m_ + j];
            row[j] = 1;
            row[n_ + m_ + j] = 1; // bound slack
            row[rhs_col_] = lp.upper[j];
            if (lp.upper[j] < 0) infeasible_bounds_ = true;
        }
        for (size_t i = 0; i < rows_; ++i) {
            if (tab_[i][rhs_col_] < 0) {
                sigma_[i] = -1;
                for (auto& v : tab_[i]) v = -v;
            }
            tab_[i][art0_ + i] = 1;
            basis_[i] = art0_ + i;
        }
    }

    LpSolution solve(const LinearProgram& lp) {
        if (infeasible_bounds_) throw Infeasible("negative upper bound");
        // Phase 1: minimize the artificial sum.
        std::vector<Rational> cost1(cols_ - 1, 0);
        for (size_t i = 0; i < rows_; ++i) cost1[art0_ + i] = 1;
        build_cost_row(cost1);
        run(/*allow_artificials=*/false);
        if (z_[rhs_col_] != 0) throw Infeasible("phase-1 optimum positive");
        evict_basic_artificials();

        // Phase 2: the real objective (artificials kept at cost 0 but
        // barred from entering; their reduced costs expose the duals).
        std::vector<Rational> cost2(cols_ - 1, 0);
        for (size_t j = 0; j < n_; ++j) cost2[j] = lp.objective[j];
        build_cost_row(cost2);
        run(false);

        LpSolution sol;
        sol.primal.assign(n_, 0);
        for (size_t i = 0; i < rows_; ++i)
            if (basis_[i] < n_) sol.primal[basis_[i]] = tab_[i][rhs_col_];
        sol.optimum = 0;
        for (size_t j = 0; j < n_; ++j) sol.optimum += lp.objective[j] * sol.primal[j];

        // y'_i = -redcost(artificial_i); original-row dual flips with sigma.
        sol.dual.assign(m_, 0);
        for (size_t i = 0; i < m_; ++i) sol.dual[i] = -z_[art0_ + i] * sigma_[i];
        std::vector<Rational> w(n_, 0);
        for (size_t j = 0; j < n_; ++j) w[j] = z_[art0_ + m_ + j];
        certify(lp, sol, w);
        return sol;
    }

private:
    void build_cost_row(const std::vector<Rational>& cost) {
        z_.assign(cols_, 0);
        for (size_t j = 0; j + 1 < cols_; ++j) z_[j] = cost[j];
        z_[rhs_col_] = 0;
        for (size_t i = 0; i < rows_; ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (size_t j = 0; j < cols_; ++j) z_[j] -= cb * tab_[i][j];
        }
        // z_[rhs_col_] now holds -(objective value of current basis).
    }

    void pivot(size_t pr, size_t pc) {
        auto& prow = tab_[pr];
        Rational inv = 1 / prow[pc];
        for (auto& v : prow) v *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == pr) continue;
            Rational f = tab_[i][pc];
            if (f == 0) continue;
            for (size_t j = 0; j < cols_; ++j) tab_[i][j] -= f * prow[j];
        }
        Rational f = z_[pc];
        if (f != 0)
            for (size_t j = 0; j < cols_; ++j) z_[j] -= f * prow[j];
        basis_[pr] = pc;
    }

    void run(bool allow_artificials) {
        while (true) {
            size_t enter = cols_;
            size_t limit = allow_artificials ? cols_ - 1 : art0_;
            for (size_t j = 0; j < limit; ++j)
                if (z_[j] < 0) { enter = j; break; }
            if (enter == cols_) return;
            size_t leave = rows_;
            Rational best;
            for (size_t i = 0; i < rows_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rational ratio = tab_[i][rhs_col_] / tab_[i][enter];
                if (leave == rows_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_) throw Unbounded("objective unbounded below");
            pivot(leave, enter);
        }
    }

    void evict_basic_artificials() {
        for (size_t i = 0; i < rows_; ++i) {
            if (basis_[i] < art0_) continue;
            size_t pc = art0_;
            for (size_t j = 0; j < art0_; ++j)
                if (tab_[i][j] != 0) { pc = j; break; }
            // A row with no structural entry is redundant; the artificial
            // stays basic at zero and never re-enters elsewhere.
            if (pc < art0_) pivot(i, pc);
        }
    }

    void certify(const LinearProgram& lp, const LpSolution& sol,
                 const std::vector<Rational>& w) const {
        for (size_t j = 0; j < n_; ++j)
            if (sol.primal[j] < 0 || sol.primal[j] > lp.upper[j])
                throw Error("simplex certificate: primal bound violated");
        for (size_t i = 0; i < m_; ++i) {
            Rational lhs = 0;
            for (size_t j = 0; j < n_; ++j) lhs += lp.rows[i][j] * sol.primal[j];
            if (lhs < lp.rhs[i]) throw Error("simplex certificate: primal infeasible");
            if (sol.dual[i] < 0) throw Error("simplex certificate: negative dual");
        }
        Rational dual_obj = 0;
        for (size_t i = 0; i < m_; ++i) dual_obj += lp.rhs[i] * sol.dual[i];
        for (size_t j = 0; j < n_; ++j) {
            if (w[j] < 0) throw Error("simplex certificate: negative bound dual");
            Rational col = -w[j];
            for (size_t i = 0; i < m_; ++i) col += lp.rows[i][j] * sol.dual[i];
            if (col > lp.objective[j])
                throw Error("simplex certificate: dual infeasible");
            dual_obj -= lp.upper[j] * w[j];
        }
        if (dual_obj != sol.optimum)
            throw Error("simplex certificate: duality gap");
    }

    size_t n_, m_, rows_, cols_, art0_ = 0, rhs_col_ = 0;
    bool infeasible_bounds_ = false;
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> z_;
    std::vector<int> sigma_;
    std::vector<size_t> basis_;
};

} // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    lp.validate();
    return Simplex(lp).solve(lp);
}

namespace {

struct Node {
    Rational bound;
    uint64_t id;
    std::vector<mpz_class> lo, hi;
    std::vector<Rational> relax; // LP-optimal point of this node

    bool operator>(const Node& o) const {
        if (bound != o.bound) return bound > o.bound;
        return id > o.id;
    }
};

// Solve the node's LP after shifting x = lo + x'; returns false if infeasible.
bool solve_node(const LinearProgram& lp, Node& node) {
    size_t n = lp.num_vars();
    LinearProgram sub;
    sub.objective = lp.objective;
    sub.upper.resize(n);
    for (size_t j = 0; j < n; ++j) {
        if (node.hi[j] < node.lo[j]) return false;
        sub.upper[j] = Rational(node.hi[j] - node.lo[j]);
    }
    sub.rows = lp.rows;
    sub.rhs = lp.rhs;
    for (size_t i = 0; i < lp.rows.size(); ++i)
        for (size_t j = 0; j < n; ++j)
            sub.rhs[i] -= lp.rows[i][j] * Rational(node.lo[j]);
    Rational offset = 0;
    for (size_t j = 0; j < n; ++j) offset += lp.objective[j] * Rational(node.lo[j]);
    try {
        LpSolution s = solve_lp(sub);
        node.bound = s.optimum + offset;
        node.relax.resize(n);
        for (size_t j = 0; j < n; ++j) node.relax[j] = s.primal[j] + Rational(node.lo[j]);
        return true;
    } catch (const Infeasible&) {
        return false;
    }
}

} // namespace

IlpSolution solve_ilp(const LinearProgram& lp, uint64_t node_budget) {
    lp.validate();
    size_t n = lp.num_vars();
    if (n > 64) throw OutOfRange("branch-and-bound limited to 64 variables");
    for (size_t j = 0; j < n; ++j)
        if (lp.upper[j].get_den() != 1)
            throw OutOfRange("integer program requires integer upper bounds");

    IlpSolution best;
    bool have_incumbent = false;
    uint64_t next_id = 0;

    Node root;
    root.id = next_id++;
    root.lo.assign(n, 0);
    root.hi.resize(n);
    for (size_t j = 0; j < n; ++j) root.hi[j] = lp.upper[j].get_num();
    uint64_t nodes = 0;
    if (!solve_node(lp, root)) throw Infeasible("integer program infeasible");
    ++nodes;

    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> open;
    open.push(std::move(root));

    while (!open.empty()) {
        Node node = open.top();
        open.pop();
        if (have_incumbent && node.bound >= Rational(best.optimum)) break;

        // Most-fractional branching variable, smallest index on ties.
        size_t branch = n;
        Rational best_gap;
        for (size_t j = 0; j < n; ++j) {
            if (node.relax[j].get_den() == 1) continue;
            mpz_class fl = node.relax[j].get_num() / node.relax[j].get_den();
            Rational frac = node.relax[j] - Rational(fl);
            Rational gap = abs(frac - Rational(1, 2));
            if (branch == n || gap < best_gap) {
                branch = j;
                best_gap = gap;
            }
        }
        if (branch == n) {
            // Integral relaxation: this node is solved exactly.
            if (!have_incumbent || node.bound < Rational(best.optimum)) {
                if (node.bound.get_den() != 1)
                    throw OutOfRange("integer point with non-integer objective");
                best.optimum = node.bound.get_num();
                best.witness.assign(n, 0);
                for (size_t j = 0; j < n; ++j) best.witness[j] = node.relax[j].get_num();
                have_incumbent = true;
            }
            continue;
        }

        mpz_class fl = node.relax[branch].get_num() / node.relax[branch].get_den();
        for (int side = 0; side < 2; ++side) {
            Node child = node;
            child.id = next_id++;
            if (side == 0) child.hi[branch] = fl;
            else child.lo[branch] = fl + 1;
            if (nodes >= node_budget) {
                if (have_incumbent) {
                    best.nodes = nodes;
                    best.exact = false;
                    return best;
                }
                throw NodeBudgetExceeded("branch-and-bound node budget exhausted");
            }
            if (solve_node(lp, child)) {
                ++nodes;
                if (!have_incumbent || child.bound < Rational(best.optimum))
                    open.push(std::move(child));
            } else {
                ++nodes;
            }
        }
    }

    if (!have_incumbent) throw Infeasible("integer program infeasible");
    best.nodes = nodes;
    best.exact = true;
    return best;
}

} // namespace ssc
