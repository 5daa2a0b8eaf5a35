#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ap3 {

using Rational = boost::multiprecision::cpp_rational;

/// coef . x  (== or >=)  rhs
struct LinearConstraint {
    std::vector<Rational> coef;
    Rational rhs;
};

struct LinearSystem {
    int vars = 0;
    std::vector<LinearConstraint> equalities;
    std::vector<LinearConstraint> lower_bounds;  ///< coef . x >= rhs
};

/// Exact feasibility by Gaussian elimination of the equalities followed by
/// Fourier-Motzkin elimination of the inequalities. Returns a rational point
/// satisfying every constraint, or nullopt if none exists.
std::optional<std::vector<Rational>> solve_feasible(const LinearSystem& system);

}  // namespace ap3
