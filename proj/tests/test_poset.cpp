#include <doctest.h>

#include <random>

#include "ap3/pn_posets.hpp"
#include "ap3/poset.hpp"

using namespace ap3;

namespace {

FinitePoset chain(std::size_t k) {
    return FinitePoset::from_relation(k, [](std::size_t x, std::size_t y) { return x <= y; });
}

FinitePoset antichain(std::size_t k) {
    return FinitePoset::from_relation(k, [](std::size_t x, std::size_t y) { return x == y; });
}

FinitePoset boolean_lattice(std::size_t rank) {
    return FinitePoset::from_relation(std::size_t{1} << rank,
                                      [](std::size_t x, std::size_t y) { return (x & ~y) == 0; });
}

// Random poset on k elements: a random DAG on 0..k-1 (edges upward) closed
// transitively.
FinitePoset random_poset(std::size_t k, std::mt19937& rng) {
    std::vector<std::vector<bool>> r(k, std::vector<bool>(k, false));
    std::bernoulli_distribution edge(0.35);
    for (std::size_t x = 0; x < k; ++x) {
        r[x][x] = true;
        for (std::size_t y = x + 1; y < k; ++y) r[x][y] = edge(rng);
    }
    for (std::size_t m = 0; m < k; ++m)
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = 0; y < k; ++y)
                if (r[x][m] && r[m][y]) r[x][y] = true;
    return FinitePoset::from_relation(k, [&](std::size_t x, std::size_t y) { return r[x][y]; });
}

std::size_t count_antichains(const FinitePoset& p) {
    std::size_t c = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << p.size()); ++mask) {
        ElementSet s(p.size());
        for (std::size_t x = 0; x < p.size(); ++x)
            if (mask >> x & 1) s.set(x);
        if (is_antichain(p, s)) ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("construction validates the order axioms") {
    CHECK_THROWS_AS(FinitePoset::from_relation(2, [](std::size_t, std::size_t) { return true; }), DomainError);
    CHECK_THROWS_AS(FinitePoset::from_relation(2, [](std::size_t x, std::size_t y) { return x != y; }), DomainError);
    // 0 <= 1, 1 <= 2 but not 0 <= 2.
    CHECK_THROWS_AS(FinitePoset::from_relation(3,
                                               [](std::size_t x, std::size_t y) {
                                                   return x == y || (x == 0 && y == 1) || (x == 1 && y == 2);
                                               }),
                    DomainError);
    CHECK_THROWS_AS(FinitePoset::from_covers(2, {{0, 1}, {1, 0}}), DomainError);
}

TEST_CASE("covers are the transitive reduction") {
    CHECK(covers(chain(2)).size() == 1);
    CHECK(covers(antichain(2)).empty());
    CHECK(covers(chain(5)).size() == 4);
    CHECK(covers(boolean_lattice(3)).size() == 12);
    auto p = FinitePoset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(covers(p).size() == 2);
    CHECK(p.leq(0, 2));
}

TEST_CASE("order ideals of chains, antichains and P_4") {
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(order_ideals(std::make_shared<FinitePoset>(antichain(k))).ideals.size() == (std::size_t{1} << k));
        CHECK(order_ideals(std::make_shared<FinitePoset>(chain(k))).ideals.size() == k + 1);
    }
    auto fam = order_ideals(std::make_shared<FinitePoset>(build_Pn(4)));
    CHECK(fam.ideals.size() == 8);
    for (const auto& I : fam.ideals) CHECK(is_ideal(*fam.base, I));
}

TEST_CASE("ideal/antichain bijection and covered counts") {
    for (int n = 2; n <= 6; ++n) {
        auto p = build_Pn(n);
        std::size_t best = 0;
        for_each_ideal(p, [&](const ElementSet& I) {
            auto a = ideal_to_antichain(p, I);
            CHECK(is_antichain(p, a));
            CHECK(antichain_to_ideal(p, a) == I);
            CHECK(covered_count(p, I) == a.count());
            best = std::max(best, a.count());
        });
        if (n == 4) CHECK(best == 2);
    }
    auto p = chain(3);
    ElementSet bad(3);
    bad.set(0);
    bad.set(2);
    CHECK_THROWS_AS(antichain_to_ideal(p, bad), DomainError);
    ElementSet empty(3);
    CHECK(ideal_to_antichain(p, empty).none());
    ElementSet whole(3);
    whole.set();
    CHECK(ideal_to_antichain(p, whole).count() == 1);
}

TEST_CASE("number of ideals equals number of antichains") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = random_poset(1 + trial % 9, rng);
        CHECK(order_ideals(std::make_shared<FinitePoset>(p)).ideals.size() == count_antichains(p));
    }
}

TEST_CASE("join-irreducibles") {
    CHECK(join_irreducibles(boolean_lattice(3)).size() == 3);
    CHECK(covers(join_irreducibles(boolean_lattice(3))).empty());
    CHECK_THROWS_AS(join_irreducibles(antichain(2)), DomainError);
    CHECK(join_irreducible_indices(chain(4)).size() == 3);
}

TEST_CASE("Birkhoff round trip J(P) -> join-irreducibles ~ P for posets up to 6 elements") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = random_poset(1 + trial % 6, rng);
        auto lat = lattice_of_ideals(p);
        CHECK(is_lattice(lat));
        auto q = join_irreducibles(lat);
        auto iso = are_isomorphic(p, q);
        CHECK(iso.status == IsoStatus::isomorphic);
        CHECK(is_order_isomorphism(p, q, iso.witness));
    }
}

TEST_CASE("rank polynomials") {
    auto one = chain(1);
    CHECK(rank_polynomial(one, [](std::size_t) { return 0; }) == RankPolynomial{1});
    auto b = boolean_lattice(3);
    auto h = height_rank(b);
    REQUIRE(h);
    auto f = rank_polynomial(b, [&](std::size_t x) { return (*h)[x]; });
    CHECK(f == RankPolynomial{1, 3, 3, 1});
    CHECK(f.at_one() == 8);
    CHECK_THROWS_AS(rank_polynomial(b, [](std::size_t) { return -1; }), DomainError);
    auto diamond = FinitePoset::from_covers(4, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {0, 2}});
    CHECK(height_rank(diamond));
    auto pentagon = FinitePoset::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
    CHECK_FALSE(height_rank(pentagon));
}

TEST_CASE("isomorphism tests") {
    auto p = build_Pn(5);
    auto self = are_isomorphic(p, p);
    CHECK(self.status == IsoStatus::isomorphic);
    CHECK(is_order_isomorphism(p, p, self.witness));
    CHECK(are_isomorphic(chain(4), antichain(4)).status == IsoStatus::not_isomorphic);
    CHECK(are_isomorphic(chain(3), chain(4)).status == IsoStatus::not_isomorphic);
    auto phi = build_Phin(5);
    auto r = are_isomorphic(phi, p);
    CHECK(r.status == IsoStatus::isomorphic);
    CHECK(is_order_isomorphism(phi, p, r.witness));
    // A tiny node budget yields "undecided", never a wrong answer.
    auto tiny = are_isomorphic(build_Pn(7), build_Phin(7), 1);
    CHECK(tiny.status != IsoStatus::not_isomorphic);
}

TEST_CASE("sums and products") {
    auto two = disjoint_sum(chain(1), chain(1));
    CHECK(are_isomorphic(two, antichain(2)).status == IsoStatus::isomorphic);
    auto sq = direct_product(chain(2), chain(2));
    CHECK(sq.size() == 4);
    CHECK(covers(sq).size() == 4);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_poset(1 + trial % 4, rng);
        auto b = random_poset(1 + (trial / 4) % 4, rng);
        auto lhs = lattice_of_ideals(disjoint_sum(a, b));
        auto rhs = direct_product(lattice_of_ideals(a), lattice_of_ideals(b));
        CHECK(are_isomorphic(lhs, rhs).status == IsoStatus::isomorphic);
    }
}

TEST_CASE("induced subposets and extremal elements") {
    auto b = boolean_lattice(3);
    auto sub = induced_subposet(b, {1, 2, 4});
    CHECK(covers(sub).empty());
    CHECK(b.minimal_elements() == std::vector<std::size_t>{0});
    CHECK(b.maximal_elements() == std::vector<std::size_t>{7});
}
