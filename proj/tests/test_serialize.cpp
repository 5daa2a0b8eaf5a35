#include <doctest.h>

#include "ap3/mn.hpp"
#include "ap3/pn_posets.hpp"
#include "ap3/serialize.hpp"

using namespace ap3;

TEST_CASE("triple systems round trip through JSON") {
    TripleSystem s(4, {Triple(1, 2, 3, 4), Triple(1, 3, 4, 4)});
    auto j = to_json(s);
    CHECK(j.dump() == R"({"n":4,"triples":[[1,2,3],[1,3,4]]})");
    CHECK(triple_system_from_json(j) == s);
    CHECK_THROWS_AS(triple_system_from_json(nlohmann::json::parse(R"({"n":4,"triples":[[1,2]]})")), DomainError);
    CHECK_THROWS_AS(triple_system_from_json(nlohmann::json::parse(R"({"triples":[]})")), DomainError);
}

TEST_CASE("posets round trip through JSON") {
    for (int n = 2; n <= 6; ++n) {
        auto p = build_Pn(n);
        auto q = poset_from_json(nlohmann::json::parse(to_json(p).dump()));
        REQUIRE(q.size() == p.size());
        CHECK(q.labels() == p.labels());
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = 0; y < p.size(); ++y) CHECK(p.leq(x, y) == q.leq(x, y));
    }
    CHECK_THROWS_AS(poset_from_json(nlohmann::json::parse(R"({"size":2,"covers":[[0]]})")), DomainError);
}

TEST_CASE("tableaux round trip through JSON") {
    for (const auto& t : enumerate_Mn(5)) CHECK(tableau_from_json(nlohmann::json::parse(to_json(t).dump())) == t);
    auto j = to_json(Tableau::from_rows({{1, 1}, {2}}));
    CHECK(j.dump() == R"({"rows":[[1,1],[2]],"shape":[2,1]})");
    CHECK_THROWS_AS(tableau_from_json(nlohmann::json::parse(R"({"shape":[1],"rows":[[1,1]]})")), DomainError);
}

TEST_CASE("DOT output is layered by rank") {
    auto els = enumerate_Mn(4);
    std::vector<std::string> labels;
    for (const auto& t : els) labels.push_back(t.compact());
    auto p = FinitePoset::from_relation(
        els.size(), [&](std::size_t x, std::size_t y) { return els[x].leq(els[y]); }, labels);
    auto dot = to_dot(p, "M4");
    CHECK(dot.find("digraph \"M4\"") == 0);
    CHECK(dot.find("rank=same") != std::string::npos);
    std::size_t edges = 0;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++edges;
    CHECK(edges == covers(p).size());
    CHECK(dot.find("\"1 1/2\"") != std::string::npos);
}
