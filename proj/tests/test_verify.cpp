#include <doctest.h>

#include <sstream>

#include "ap3/verify.hpp"

using namespace ap3;

namespace {

bool all_pass(const Reports& r) {
    for (const auto& x : r)
        if (x.status != ReportStatus::pass) return false;
    return !r.empty();
}

}  // namespace

TEST_CASE("report constructors") {
    CHECK(compare_values("x", 1, BigInt(3), BigInt(3)).status == ReportStatus::pass);
    CHECK(compare_values("x", 1, BigInt(3), BigInt(4)).status == ReportStatus::fail);
    CHECK(counterexamples("y", 2, 0).status == ReportStatus::pass);
    CHECK(counterexamples("y", 2, 1).status == ReportStatus::fail);
    CHECK(skipped("z", 3, "why").status == ReportStatus::skipped);
}

TEST_CASE("small harness runs pass") {
    VerifyOptions o;
    o.n_max = 2;
    auto r2 = verify_all(o);
    CHECK(all_pass(r2));
    o.n_max = 4;
    auto r4 = verify_all(o);
    CHECK(all_pass(r4));
    bool saw_g4 = false;
    for (const auto& r : r4)
        if (r.quantity == "g: largest valid subsets" && r.n == 4) saw_g4 = r.enumerated == "3";
    CHECK(saw_g4);
}

TEST_CASE("output does not depend on the number of jobs") {
    VerifyOptions o;
    o.n_max = 5;
    std::ostringstream one, four;
    write_report_json_lines(one, verify_all(o));
    o.jobs = 4;
    write_report_json_lines(four, verify_all(o));
    CHECK(one.str() == four.str());
}

TEST_CASE("budgets turn into skips, never passes") {
    VerifyOptions o;
    o.n_max = 4;
    o.budget.max_items = 2;
    auto r = verify_all(o);
    CHECK(any_skipped(r));
    CHECK_FALSE(any_failed(r));
    o.budget = {};
    o.budget.deadline = std::chrono::steady_clock::now();
    auto d = verify_all(o);
    for (const auto& x : d) CHECK(x.status == ReportStatus::skipped);
}

TEST_CASE("individual checks on mid-sized cases") {
    CHECK(all_pass(checks::Un_structure(6)));
    CHECK(all_pass(checks::Un_structure(7)));
    CHECK(all_pass(checks::theta_isomorphism(7)));
    CHECK(all_pass(checks::right_isomorphism(3)));
    CHECK(all_pass(checks::ideal_lattice_isomorphism(5)));
    CHECK(all_pass(checks::Kn_lattice_laws(6)));
    CHECK(all_pass(checks::Mn_lattice_laws(7, 2000)));
}

TEST_CASE("table and JSON rendering") {
    Reports r{compare_values("f", 4, BigInt(8), BigInt(8)), skipped("g", 9, "deadline reached")};
    std::ostringstream t, j;
    write_report_table(t, r);
    write_report_json_lines(j, r);
    CHECK(t.str().find("pass") != std::string::npos);
    CHECK(t.str().find("(deadline reached)") != std::string::npos);
    CHECK(j.str().find(R"({"closed":8,"enumerated":8,"n":4,"quantity":"f","status":"pass"})") != std::string::npos);
}
