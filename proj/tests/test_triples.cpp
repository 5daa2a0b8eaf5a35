#include <doctest.h>

#include <set>

#include "ap3/triples.hpp"

using namespace ap3;

namespace {

Triple T(int i, int j, int k, int n = 4) { return Triple(i, j, k, n); }

// Oracle: a pair is consistent iff some strictly increasing integer sequence
// with small entries realizes both progressions (exhaustive search).
bool consistent_by_search(const Triple& a, const Triple& b) {
    const int n = a.n();
    std::vector<int> x(static_cast<std::size_t>(n));
    const int top = 3 * n;
    std::function<bool(int)> rec = [&](int t) {
        if (t == n) {
            auto ap = [&](const Triple& s) { return x[s.i() - 1] + x[s.k() - 1] == 2 * x[s.j() - 1]; };
            return ap(a) && ap(b);
        }
        for (int v = t == 0 ? 0 : x[t - 1] + 1; v <= top; ++v) {
            x[t] = v;
            if (rec(t + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("triple invariants are enforced") {
    CHECK_THROWS_AS(Triple(2, 2, 3, 4), DomainError);
    CHECK_THROWS_AS(Triple(1, 2, 5, 4), DomainError);
    CHECK_THROWS_AS(Triple(0, 2, 3, 4), DomainError);
    CHECK_NOTHROW(Triple(1, 2, 3, 3));
}

TEST_CASE("triple systems reject duplicates and mixed sizes") {
    CHECK_THROWS_AS(TripleSystem(4, {T(1, 2, 3), T(1, 2, 3)}), DomainError);
    CHECK_THROWS_AS(TripleSystem(4, {T(1, 2, 3), Triple(1, 2, 3, 5)}), DomainError);
    TripleSystem s(4, {T(1, 3, 4), T(1, 2, 3)});
    CHECK(s.triples().front() == T(1, 2, 3));
}

TEST_CASE("consistency criterion on the small examples") {
    CHECK_FALSE(is_consistent(T(1, 2, 3), T(1, 2, 4)));
    CHECK(is_consistent(T(1, 2, 3), T(1, 3, 4)));
    CHECK(is_consistent(T(1, 2, 3), T(1, 2, 3)));
    CHECK_THROWS_AS(is_consistent(T(1, 2, 3), Triple(1, 2, 3, 5)), DomainError);
}

TEST_CASE("consistency is symmetric and matches a brute-force search for n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        auto ts = all_triples(n);
        for (const auto& a : ts)
            for (const auto& b : ts) {
                CHECK(is_consistent(a, b) == is_consistent(b, a));
                CHECK(is_consistent(a, b) == consistent_by_search(a, b));
            }
    }
}

TEST_CASE("realize returns verified witnesses or nothing") {
    auto one = realize(TripleSystem(4, {T(1, 2, 3)}));
    REQUIRE(one);
    CHECK(one->realizes(TripleSystem(4, {T(1, 2, 3)})));

    CHECK_FALSE(realize(TripleSystem(4, {T(1, 2, 3), T(1, 2, 4)})));

    TripleSystem pair(4, {T(1, 2, 3), T(1, 3, 4)});
    auto w = realize(pair);
    REQUIRE(w);
    CHECK(w->realizes(pair));
    CHECK(w->x.front() == 1);

    auto empty = realize(TripleSystem(5));
    REQUIRE(empty);
    CHECK(empty->x.size() == 5);
}

TEST_CASE("valid subsets of C([4],3) are exactly the eight listed ones") {
    std::set<std::string> got;
    auto c = enumerate_valid(4, [&](const TripleSystem& s) { got.insert(to_string(s)); });
    CHECK(c == 8);
    std::set<std::string> expected{"", "1,2,3", "1,2,4", "1,3,4", "2,3,4", "1,2,3;1,3,4", "1,2,3;2,3,4", "1,2,4;2,3,4"};
    CHECK(got == expected);
}

TEST_CASE("valid-subset counts and extremal statistics") {
    CHECK(count_valid(1) == 1);
    CHECK(count_valid(2) == 1);
    CHECK(count_valid(3) == 2);
    CHECK(count_valid(5) == 64);
    CHECK(max_valid_stats(2) == MaxValidStats{0, 1});
    CHECK(max_valid_stats(4) == MaxValidStats{2, 3});
    CHECK(max_valid_stats(6) == MaxValidStats{6, 28});
}

TEST_CASE("every subset of a valid system is valid") {
    enumerate_valid(5, [](const TripleSystem& s) {
        const auto& ts = s.triples();
        for (std::size_t drop = 0; drop < ts.size(); ++drop) {
            std::vector<Triple> rest;
            for (std::size_t t = 0; t < ts.size(); ++t)
                if (t != drop) rest.push_back(ts[t]);
            CHECK(is_valid(TripleSystem(5, rest)));
        }
    });
}

TEST_CASE("enumeration respects the item budget") {
    Budget tight;
    tight.max_items = 100;
    CHECK_THROWS_AS(count_valid(7, tight), BudgetExceeded);
    tight.force = true;
    CHECK(count_valid(5, tight) == 64);
}

TEST_CASE("point map and its inverse") {
    auto p = propp_map(T(1, 2, 3));
    CHECK(p == std::array<int, 3>{1, 3, 3});
    CHECK(propp_map(T(1, 2, 4)) == std::array<int, 3>{1, 3, 4});
    for (int n = 3; n <= 8; ++n)
        for (const auto& t : all_triples(n)) {
            auto q = propp_map(t);
            CHECK(q[0] + q[1] < n + 1);
            CHECK(n + 1 < q[1] + q[2]);
            CHECK(propp_unmap(q, n) == t);
        }
}

TEST_CASE("text round trip") {
    TripleSystem s(4, {T(1, 2, 3), T(1, 3, 4)});
    CHECK(to_string(s) == "1,2,3;1,3,4");
    CHECK(parse_system("1,2,3;1,3,4", 4) == s);
    CHECK(parse_triple("2,3,4", 4) == T(2, 3, 4));
    CHECK_THROWS_AS(parse_triple("2,3", 4), DomainError);
    CHECK_THROWS_AS(parse_system("1,2,x", 4), DomainError);
}
