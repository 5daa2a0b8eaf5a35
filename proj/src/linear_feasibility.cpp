#include "ap3/linear_feasibility.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ap3 {
namespace {

using Row = LinearConstraint;

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

// Scale so the first nonzero coefficient has absolute value 1; makes
// duplicate constraints compare equal.
void normalize(Row& row) {
    auto it = std::find_if(row.coef.begin(), row.coef.end(), [](const Rational& r) { return r != 0; });
    if (it == row.coef.end()) return;
    Rational scale = abs(*it);
    for (auto& c : row.coef) c /= scale;
    row.rhs /= scale;
}

struct RowLess {
    bool operator()(const Row& a, const Row& b) const {
        if (a.coef != b.coef) return a.coef < b.coef;
        return a.rhs < b.rhs;
    }
};

// Returns false if a constant row 0 >= rhs with rhs > 0 is found.
bool dedupe(std::vector<Row>& rows) {
    std::set<Row, RowLess> unique;
    for (auto& r : rows) {
        normalize(r);
        if (all_zero(r.coef)) {
            if (r.rhs > 0) return false;
            continue;
        }
        unique.insert(r);
    }
    rows.assign(unique.begin(), unique.end());
    return true;
}

}  // namespace

std::optional<std::vector<Rational>> solve_feasible(const LinearSystem& system) {
    const int n = system.vars;
    for (const auto& r : system.equalities)
        if (static_cast<int>(r.coef.size()) != n) throw std::invalid_argument("equality arity mismatch");
    for (const auto& r : system.lower_bounds)
        if (static_cast<int>(r.coef.size()) != n) throw std::invalid_argument("inequality arity mismatch");

    // Reduced row echelon form of the equalities.
    std::vector<Row> eqs = system.equalities;
    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(n, false);
    std::size_t rank = 0;
    for (int col = 0; col < n && rank < eqs.size(); ++col) {
        std::size_t sel = rank;
        while (sel < eqs.size() && eqs[sel].coef[col] == 0) ++sel;
        if (sel == eqs.size()) continue;
        std::swap(eqs[rank], eqs[sel]);
        Rational p = eqs[rank].coef[col];
        for (auto& c : eqs[rank].coef) c /= p;
        eqs[rank].rhs /= p;
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            if (r == rank || eqs[r].coef[col] == 0) continue;
            Rational f = eqs[r].coef[col];
            for (int c = 0; c < n; ++c) eqs[r].coef[c] -= f * eqs[rank].coef[c];
            eqs[r].rhs -= f * eqs[rank].rhs;
        }
        pivot_of_row.push_back(col);
        is_pivot[col] = true;
        ++rank;
    }
    for (std::size_t r = rank; r < eqs.size(); ++r)
        if (eqs[r].rhs != 0) return std::nullopt;
    eqs.resize(rank);

    // Substitute pivots out of the inequalities: x_p = rhs - sum_{free} coef * x_free.
    std::vector<Row> ineqs = system.lower_bounds;
    for (auto& row : ineqs) {
        for (std::size_t r = 0; r < rank; ++r) {
            int p = pivot_of_row[r];
            Rational f = row.coef[p];
            if (f == 0) continue;
            for (int c = 0; c < n; ++c) row.coef[c] -= f * eqs[r].coef[c];
            row.rhs -= f * eqs[r].rhs;
        }
    }
    if (!dedupe(ineqs)) return std::nullopt;

    // Fourier-Motzkin over the free variables; keep each stage for back-substitution.
    std::vector<int> order;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) order.push_back(c);
    std::vector<std::vector<Row>> stages;
    for (int v : order) {
        stages.push_back(ineqs);
        std::vector<Row> pos, neg, next;
        for (auto& r : ineqs) {
            if (r.coef[v] > 0) pos.push_back(r);
            else if (r.coef[v] < 0) neg.push_back(r);
            else next.push_back(r);
        }
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                Rational a = p.coef[v], b = -q.coef[v];
                Row combined{std::vector<Rational>(n), b * p.rhs + a * q.rhs};
                for (int c = 0; c < n; ++c) combined.coef[c] = b * p.coef[c] + a * q.coef[c];
                combined.coef[v] = 0;
                next.push_back(std::move(combined));
            }
        }
        ineqs = std::move(next);
        if (!dedupe(ineqs)) return std::nullopt;
    }

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t s = order.size(); s-- > 0;) {
        int v = order[s];
        std::optional<Rational> lo, hi;
        for (const auto& r : stages[s]) {
            if (r.coef[v] == 0) continue;
            Rational rest = r.rhs;
            for (int c = 0; c < n; ++c)
                if (c != v) rest -= r.coef[c] * x[c];
            Rational bound = rest / r.coef[v];
            if (r.coef[v] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo && hi && *lo > *hi) return std::nullopt;  // unreachable when FM is sound
        Rational pick = 0;
        if (lo) {
            Rational ceil_lo = Rational(boost::multiprecision::cpp_int(
                (numerator(*lo) + denominator(*lo) - 1) / denominator(*lo)));
            if (*lo < 0) ceil_lo = Rational(boost::multiprecision::cpp_int(numerator(*lo) / denominator(*lo)));
            pick = (!hi || ceil_lo <= *hi) ? ceil_lo : *lo;
        } else if (hi) {
            pick = *hi;
        }
        x[v] = pick;
    }
    for (std::size_t r = 0; r < rank; ++r) {
        int p = pivot_of_row[r];
        Rational val = eqs[r].rhs;
        for (int c = 0; c < n; ++c)
            if (c != p) val -= eqs[r].coef[c] * x[c];
        x[p] = val;
    }
    return x;
}

}  // namespace ap3
