#include "ultrafree/lp.hpp"

#include "ultrafree/errors.hpp"

namespace ultrafree {

LpSolution solve_lp_max(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                        const std::vector<Rational>& c)
{
    const std::size_t rows = a.size();
    const std::size_t cols = c.size();
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols)
            throw PreconditionViolated("solve_lp_max: ragged constraint matrix");
        if (b[i] < 0)
            throw PreconditionViolated("solve_lp_max: right-hand side must be non-negative");
    }
    if (b.size() != rows)
        throw PreconditionViolated("solve_lp_max: right-hand side size mismatch");

    // Tableau columns: structural 0..cols-1, slack cols..cols+rows-1, rhs last.
    const std::size_t width = cols + rows + 1;
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            t[i][j] = a[i][j];
        t[i][cols + i] = 1;
        t[i][width - 1] = b[i];
        basis[i] = cols + i;
    }
    // Reduced costs z_j - c_j; optimal once none is negative.
    std::vector<Rational> z(width);
    for (std::size_t j = 0; j < cols; ++j)
        z[j] = -c[j];

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width)
            break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0)
                continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows)
            throw Infeasible("solve_lp_max: objective is unbounded");

        Rational pivot = t[leave][enter];
        for (auto& x : t[leave])
            x /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0)
                    t[i][j] -= f * t[leave][j];
        }
        if (z[enter] != 0) {
            Rational f = z[enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0)
                    z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    LpSolution s;
    s.value = z[width - 1];
    s.primal.assign(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] < cols)
            s.primal[basis[i]] = t[i][width - 1];
    s.dual.assign(rows, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
        s.dual[i] = z[cols + i];
    if (!certify_lp(a, b, c, s))
        throw InternalContradiction("solve_lp_max: optimality certificate failed");
    return s;
}

bool certify_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                const std::vector<Rational>& c, const LpSolution& s)
{
    const std::size_t rows = a.size();
    const std::size_t cols = c.size();
    if (s.primal.size() != cols || s.dual.size() != rows)
        return false;
    Rational primal_value = 0;
    Rational dual_value = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        if (s.primal[j] < 0)
            return false;
        primal_value += c[j] * s.primal[j];
    }
    for (std::size_t i = 0; i < rows; ++i) {
        if (s.dual[i] < 0)
            return false;
        Rational lhs = 0;
        for (std::size_t j = 0; j < cols; ++j)
            lhs += a[i][j] * s.primal[j];
        if (lhs > b[i])
            return false;
        dual_value += b[i] * s.dual[i];
    }
    for (std::size_t j = 0; j < cols; ++j) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < rows; ++i)
            lhs += a[i][j] * s.dual[i];
        if (lhs < c[j])
            return false;
    }
    return primal_value == dual_value && primal_value == s.value;
}

}  // namespace ultrafree
