#include "conedual/lp.hpp"

#include <optional>
#include <string>

#include "conedual/errors.hpp"

namespace conedual::lp {

namespace {

void validate(const Problem& problem)
{
    const std::size_t n = problem.variableCount;
    if (problem.objective.size() != n)
        throw MalformedProblem("objective has " + std::to_string(problem.objective.size())
                               + " coefficients, expected " + std::to_string(n));
    if (problem.freeVariables.size() > n)
        throw MalformedProblem("more free-variable flags than variables");
    for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
        if (problem.constraints[i].coeffs.size() != n)
            throw MalformedProblem("constraint " + std::to_string(i) + " has "
                                   + std::to_string(problem.constraints[i].coeffs.size())
                                   + " coefficients, expected " + std::to_string(n));
    }
}

/**
 * Dense tableau in standard form: rows are equality constraints with a
 * nonnegative right-hand side in the last column; `cost` is the reduced
 * cost row of the current phase, with -z in its last entry.
 */
class Tableau
{
    public:
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> cost;
        std::vector<std::size_t> basis;
        std::vector<bool> enterable;

        std::size_t columns() const { return cost.size() - 1; }

        void pivot(std::size_t r, std::size_t c)
        {
            auto& prow = rows[r];
            const Rational inv = Rational(1) / prow[c];
            for (auto& v : prow)
                v *= inv;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][c] == 0)
                    continue;
                const Rational factor = rows[i][c];
                for (std::size_t j = 0; j < prow.size(); ++j)
                    if (prow[j] != 0)
                        rows[i][j] -= factor * prow[j];
            }
            if (cost[c] != 0) {
                const Rational factor = cost[c];
                for (std::size_t j = 0; j < prow.size(); ++j)
                    if (prow[j] != 0)
                        cost[j] -= factor * prow[j];
            }
            basis[r] = c;
        }

        /// Runs Bland's rule to optimality. Returns the entering column on unboundedness.
        std::optional<std::size_t> run()
        {
            const std::size_t rhs = columns();
            for (;;) {
                std::optional<std::size_t> entering;
                for (std::size_t j = 0; j < rhs; ++j) {
                    if (enterable[j] && cost[j] < 0) {
                        entering = j;
                        break;
                    }
                }
                if (!entering)
                    return std::nullopt;
                const std::size_t c = *entering;
                std::optional<std::size_t> leaving;
                Rational best;
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (rows[i][c] <= 0)
                        continue;
                    Rational ratio = rows[i][rhs] / rows[i][c];
                    if (!leaving || ratio < best || (ratio == best && basis[i] < basis[*leaving])) {
                        leaving = i;
                        best = ratio;
                    }
                }
                if (!leaving)
                    return c;
                pivot(*leaving, c);
            }
        }
};

struct StandardForm
{
    Tableau tableau;
    std::vector<std::size_t> positiveColumn;     // per original variable
    std::vector<std::optional<std::size_t>> negativeColumn;
    std::vector<std::size_t> unitColumn;         // per constraint row
    std::vector<int> rowSign;
    std::vector<bool> artificial;
};

StandardForm buildStandardForm(const Problem& problem)
{
    StandardForm sf;
    const std::size_t n = problem.variableCount;
    const std::size_t m = problem.constraints.size();

    std::size_t col = 0;
    sf.positiveColumn.resize(n);
    sf.negativeColumn.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        sf.positiveColumn[j] = col++;
        if (problem.isFree(j))
            sf.negativeColumn[j] = col++;
    }

    sf.rowSign.resize(m);
    std::vector<Relation> relation(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& con = problem.constraints[i];
        sf.rowSign[i] = con.rhs < 0 ? -1 : 1;
        relation[i] = con.relation;
        if (sf.rowSign[i] < 0 && con.relation != Relation::Equal)
            relation[i] = con.relation == Relation::LessEqual ? Relation::GreaterEqual
                                                              : Relation::LessEqual;
    }

    std::vector<std::optional<std::size_t>> surplus(m);
    sf.unitColumn.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (relation[i] == Relation::GreaterEqual)
            surplus[i] = col++;
        if (relation[i] == Relation::LessEqual)
            sf.unitColumn[i] = col++;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (relation[i] != Relation::LessEqual)
            sf.unitColumn[i] = col++;
    const std::size_t total = col;

    sf.artificial.assign(total, false);
    for (std::size_t i = 0; i < m; ++i)
        if (relation[i] != Relation::LessEqual)
            sf.artificial[sf.unitColumn[i]] = true;

    Tableau& t = sf.tableau;
    t.rows.assign(m, std::vector<Rational>(total + 1));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& con = problem.constraints[i];
        const Rational sign(sf.rowSign[i]);
        auto& row = t.rows[i];
        for (std::size_t j = 0; j < n; ++j) {
            row[sf.positiveColumn[j]] = sign * con.coeffs[j];
            if (sf.negativeColumn[j])
                row[*sf.negativeColumn[j]] = -sign * con.coeffs[j];
        }
        if (surplus[i])
            row[*surplus[i]] = -1;
        row[sf.unitColumn[i]] = 1;
        row[total] = sign * con.rhs;
        t.basis[i] = sf.unitColumn[i];
    }
    return sf;
}

std::vector<Rational> extractPoint(const StandardForm& sf, std::size_t n)
{
    const Tableau& t = sf.tableau;
    const std::size_t rhs = t.columns();
    std::vector<Rational> values(rhs);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        values[t.basis[i]] = t.rows[i][rhs];
    std::vector<Rational> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = values[sf.positiveColumn[j]];
        if (sf.negativeColumn[j])
            x[j] -= values[*sf.negativeColumn[j]];
    }
    return x;
}

}   // namespace

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Result solve(const Problem& problem)
{
    validate(problem);
    StandardForm sf = buildStandardForm(problem);
    Tableau& t = sf.tableau;
    const std::size_t total = sf.artificial.size();
    const std::size_t m = problem.constraints.size();
    const std::size_t n = problem.variableCount;

    // Phase 1: minimise the sum of artificial variables.
    t.cost.assign(total + 1, Rational(0));
    for (std::size_t j = 0; j < total; ++j)
        if (sf.artificial[j])
            t.cost[j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (!sf.artificial[t.basis[i]])
            continue;
        for (std::size_t j = 0; j <= total; ++j)
            t.cost[j] -= t.rows[i][j];
    }
    t.enterable.assign(total, true);
    t.run();     // bounded below by zero

    if (t.cost[total] != 0) {
        // Duals of phase 1 are c_unit - reduced cost of the unit columns.
        Infeasible cert;
        cert.multipliers.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t u = sf.unitColumn[i];
            const Rational phaseCost = sf.artificial[u] ? 1 : 0;
            const Rational dual = phaseCost - t.cost[u];
            cert.multipliers[i] = -dual * sf.rowSign[i];
        }
        return cert;
    }

    // Drive artificial variables out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
        if (!sf.artificial[t.basis[i]]) {
            ++i;
            continue;
        }
        std::optional<std::size_t> replacement;
        for (std::size_t j = 0; j < total; ++j) {
            if (!sf.artificial[j] && t.rows[i][j] != 0) {
                replacement = j;
                break;
            }
        }
        if (replacement) {
            t.pivot(i, *replacement);
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    // Phase 2 in minimisation form.
    std::vector<Rational> cost(total + 1, Rational(0));
    const Rational senseSign = problem.sense == Sense::Maximize ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
        cost[sf.positiveColumn[j]] = senseSign * problem.objective[j];
        if (sf.negativeColumn[j])
            cost[*sf.negativeColumn[j]] = -senseSign * problem.objective[j];
    }
    t.cost = cost;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const Rational cb = cost[t.basis[i]];
        if (cb == 0)
            continue;
        for (std::size_t j = 0; j <= total; ++j)
            t.cost[j] -= cb * t.rows[i][j];
    }
    for (std::size_t j = 0; j < total; ++j)
        t.enterable[j] = !sf.artificial[j];

    const auto entering = t.run();
    std::vector<Rational> point = extractPoint(sf, n);
    if (entering) {
        std::vector<Rational> direction(total, Rational(0));
        direction[*entering] = 1;
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            direction[t.basis[i]] = -t.rows[i][*entering];
        std::vector<Rational> ray(n);
        for (std::size_t j = 0; j < n; ++j) {
            ray[j] = direction[sf.positiveColumn[j]];
            if (sf.negativeColumn[j])
                ray[j] -= direction[*sf.negativeColumn[j]];
        }
        return Unbounded{std::move(point), std::move(ray)};
    }
    Rational value = dot(problem.objective, point);
    return Optimal{std::move(point), std::move(value)};
}

bool isFeasible(const Problem& problem, const std::vector<Rational>& point)
{
    if (point.size() != problem.variableCount)
        return false;
    for (std::size_t j = 0; j < point.size(); ++j)
        if (!problem.isFree(j) && point[j] < 0)
            return false;
    for (const auto& con : problem.constraints) {
        const Rational lhs = dot(con.coeffs, point);
        switch (con.relation) {
            case Relation::LessEqual:
                if (lhs > con.rhs) return false;
                break;
            case Relation::GreaterEqual:
                if (lhs < con.rhs) return false;
                break;
            case Relation::Equal:
                if (lhs != con.rhs) return false;
                break;
        }
    }
    return true;
}

bool verifyFarkas(const Problem& problem, const Infeasible& certificate)
{
    const auto& y = certificate.multipliers;
    if (y.size() != problem.constraints.size())
        return false;
    Rational yb = 0;
    std::vector<Rational> yA(problem.variableCount, Rational(0));
    for (std::size_t i = 0; i < y.size(); ++i) {
        const auto& con = problem.constraints[i];
        if (con.relation == Relation::LessEqual && y[i] < 0)
            return false;
        if (con.relation == Relation::GreaterEqual && y[i] > 0)
            return false;
        yb += y[i] * con.rhs;
        for (std::size_t j = 0; j < yA.size(); ++j)
            yA[j] += y[i] * con.coeffs[j];
    }
    for (std::size_t j = 0; j < yA.size(); ++j) {
        if (problem.isFree(j) ? yA[j] != 0 : yA[j] < 0)
            return false;
    }
    return yb < 0;
}

bool verifyRay(const Problem& problem, const Unbounded& result)
{
    const auto& d = result.ray;
    if (!isFeasible(problem, result.point) || d.size() != problem.variableCount)
        return false;
    for (std::size_t j = 0; j < d.size(); ++j)
        if (!problem.isFree(j) && d[j] < 0)
            return false;
    for (const auto& con : problem.constraints) {
        const Rational lhs = dot(con.coeffs, d);
        if (con.relation == Relation::LessEqual && lhs > 0) return false;
        if (con.relation == Relation::GreaterEqual && lhs < 0) return false;
        if (con.relation == Relation::Equal && lhs != 0) return false;
    }
    const Rational gain = dot(problem.objective, d);
    return problem.sense == Sense::Maximize ? gain > 0 : gain < 0;
}

}   // namespace conedual::lp
