#include <doctest.h>

#include "ap3/linear_feasibility.hpp"

using namespace ap3;

namespace {

LinearConstraint C(std::vector<int> coef, int rhs) {
    LinearConstraint c;
    for (int v : coef) c.coef.emplace_back(v);
    c.rhs = rhs;
    return c;
}

bool satisfies(const LinearSystem& s, const std::vector<Rational>& x) {
    auto dot = [&](const LinearConstraint& c) {
        Rational v = 0;
        for (std::size_t i = 0; i < c.coef.size(); ++i) v += c.coef[i] * x[i];
        return v;
    };
    for (const auto& e : s.equalities)
        if (dot(e) != e.rhs) return false;
    for (const auto& l : s.lower_bounds)
        if (dot(l) < l.rhs) return false;
    return true;
}

}  // namespace

TEST_CASE("empty system is feasible") {
    LinearSystem s;
    s.vars = 2;
    auto x = solve_feasible(s);
    REQUIRE(x);
    CHECK(x->size() == 2);
}

TEST_CASE("interval bounds") {
    LinearSystem s;
    s.vars = 1;
    s.lower_bounds = {C({1}, 2), C({-1}, -5)};  // 2 <= x <= 5
    auto x = solve_feasible(s);
    REQUIRE(x);
    CHECK(satisfies(s, *x));

    s.lower_bounds.push_back(C({1}, 6));
    CHECK_FALSE(solve_feasible(s));
}

TEST_CASE("equalities combine with differences") {
    // x0 + x2 = 2 x1, x1 - x0 >= 1, x2 - x1 >= 1, x2 <= 3
    LinearSystem s;
    s.vars = 3;
    s.equalities = {C({1, -2, 1}, 0)};
    s.lower_bounds = {C({-1, 1, 0}, 1), C({0, -1, 1}, 1), C({0, 0, -1}, -3)};
    auto x = solve_feasible(s);
    REQUIRE(x);
    CHECK(satisfies(s, *x));
}

TEST_CASE("inconsistent equalities") {
    LinearSystem s;
    s.vars = 2;
    s.equalities = {C({1, 1}, 1), C({2, 2}, 3)};
    CHECK_FALSE(solve_feasible(s));
}

TEST_CASE("fractional witness is exact") {
    LinearSystem s;
    s.vars = 2;
    s.equalities = {C({3, 0}, 1)};
    s.lower_bounds = {C({-1, 2}, 0)};
    auto x = solve_feasible(s);
    REQUIRE(x);
    CHECK((*x)[0] == Rational(1, 3));
    CHECK(satisfies(s, *x));
}
