#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ap3/mn.hpp"
#include "ap3/poset.hpp"

using namespace ap3;

namespace {

// Oracle: M_n by generate-and-filter over all fillings with parts in [1, n-1].
std::vector<Tableau> brute_Mn(int n) {
    Shape sh = Shape::staircase(n - 1);
    std::vector<Tableau> out;
    const std::size_t cells = sh.cells();
    std::vector<int> e(cells, 1);
    while (true) {
        Tableau c(sh, e);
        bool ok = true;
        for (int a = 1; a <= sh.num_rows() && ok; ++a)
            for (int b = 1; b <= sh.row_length(a) && ok; ++b) {
                if (b > 1 && c(a, b) < c(a, b - 1)) ok = false;
                if (a > 1 && c(a, b) <= c(a - 1, b)) ok = false;
            }
        if (ok) out.push_back(c);
        std::size_t i = 0;
        while (i < cells && e[i] == n - 1) e[i++] = 1;
        if (i == cells) break;
        ++e[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t covered_in(const std::vector<Tableau>& els, const Tableau& t) {
    std::size_t c = 0;
    for (const auto& s : els) {
        if (!s.leq(t) || s == t) continue;
        bool cover = true;
        for (const auto& u : els)
            if (!(u == s) && !(u == t) && s.leq(u) && u.leq(t)) cover = false;
        if (cover) ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("minimal tableau and membership") {
    CHECK(minimal_tableau(4) == Tableau::from_rows({{1, 1}, {2}}));
    CHECK(minimal_tableau(3) == Tableau::from_rows({{1}}));
    CHECK(in_Mn(Tableau::from_rows({{1, 3}, {2}}), 4));
    CHECK_FALSE(in_Mn(Tableau::from_rows({{1, 1}, {1}}), 4));
    CHECK_FALSE(in_Mn(Tableau::from_rows({{1, 4}, {2}}), 4));
    CHECK_THROWS_AS(in_Mn(Tableau::from_rows({{1}}), 4), DomainError);
}

TEST_CASE("enumeration agrees with generate-and-filter") {
    for (int n = 2; n <= 6; ++n) {
        auto e = enumerate_Mn(n);
        CHECK(std::is_sorted(e.begin(), e.end()));
        if (n <= 5) CHECK(e == brute_Mn(n));
        CHECK(e.front() == minimal_tableau(n));
        CHECK(e.size() == predicted_Mn_size(n));
    }
    CHECK(enumerate_Mn(2).size() == 1);
}

TEST_CASE("first-column partition covers M_n in order") {
    for (int n = 3; n <= 6; ++n) {
        std::vector<Tableau> merged;
        for (const auto& c : Mn_first_columns(n))
            for_each_Mn(n, [&](const Tableau& t) { merged.push_back(t); }, {}, c);
        CHECK(merged == enumerate_Mn(n));
    }
}

TEST_CASE("reducible entries count the elements covered") {
    CHECK(reducible_entries(minimal_tableau(5), 5).empty());
    CHECK(reducible_entries(Tableau::from_rows({{1, 3}, {2}}), 4) == std::vector<Cell>{{1, 2}});
    CHECK_THROWS_AS(reducible_entries(Tableau::from_rows({{1, 1}, {1}}), 4), DomainError);
    for (int n = 3; n <= 5; ++n) {
        auto els = enumerate_Mn(n);
        for (const auto& t : els) CHECK(reducible_entries(t, n).size() == covered_in(els, t));
    }
}

TEST_CASE("join and meet") {
    for (int n = 3; n <= 5; ++n) {
        auto els = enumerate_Mn(n);
        for (const auto& x : els) {
            CHECK(join(x, x, n) == x);
            CHECK(join(minimal_tableau(n), x, n) == x);
            for (const auto& y : els) {
                CHECK(in_Mn(join(x, y, n), n));
                CHECK(in_Mn(meet(x, y, n), n));
            }
        }
    }
    CHECK_THROWS_AS(join(minimal_tableau(4), minimal_tableau(5), 4), DomainError);
}

TEST_CASE("the poset M_n is a lattice whose join-irreducibles have one reducible entry") {
    auto els = enumerate_Mn(5);
    auto p = FinitePoset::from_relation(els.size(), [&](std::size_t x, std::size_t y) { return els[x].leq(els[y]); });
    CHECK(is_lattice(p));
    for (auto x : join_irreducible_indices(p)) CHECK(reducible_entries(els[x], 5).size() == 1);
    CHECK(join_irreducible_indices(p).size() == 10);
}

TEST_CASE("statistics, transfer count and column DP") {
    auto s4 = Mn_statistics(4);
    CHECK(s4.count == 8);
    CHECK(s4.max_reducible == 2);
    CHECK(s4.at_bound == 3);
    CHECK(s4.join_irreducible == 4);
    CHECK(s4.column_bound_violations == 0);
    CHECK(s4.rank_polynomial == RankPolynomial{1, 2, 2, 2, 1});
    for (int n = 2; n <= 8; ++n) {
        auto s = Mn_statistics(n);
        CHECK(count_Mn_transfer(n) == s.count);
        auto pr = Mn_reducible_profile(n);
        CHECK(pr.max_reducible == s.max_reducible);
        CHECK(pr.at_max == s.at_max);
    }
    Budget tight;
    tight.max_items = 10;
    CHECK_THROWS_AS(Mn_statistics(5, tight), BudgetExceeded);
}

TEST_CASE("sampler draws members uniformly") {
    MnSampler s(4);
    CHECK(s.total() == 8);
    std::mt19937_64 rng(3);
    std::map<std::string, int> hits;
    for (int i = 0; i < 8000; ++i) {
        auto t = s.sample(rng);
        CHECK(in_Mn(t, 4));
        ++hits[t.compact()];
    }
    CHECK(hits.size() == 8);
    for (const auto& [k, v] : hits) CHECK(v > 800);
}
