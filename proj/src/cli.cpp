#include "ap3/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ap3/formulas.hpp"
#include "ap3/kn.hpp"
#include "ap3/mn.hpp"
#include "ap3/pn_posets.hpp"
#include "ap3/serialize.hpp"
#include "ap3/triples.hpp"
#include "ap3/verify.hpp"

namespace ap3::cli {

namespace {

struct Options {
    int n = 0;
    int n_max = 8;
    std::string object;
    std::string poset;
    std::string format;
    std::string triples;
    double budget_secs = 0;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool force = false;
};

Budget item_budget(const Options& o) {
    Budget b;
    b.force = o.force;
    return b;
}

std::string render(const Tableau& t, bool json) { return json ? to_json(t).dump() : t.compact(); }

std::vector<Tableau> join_irreducibles_of_Mn(int n, const Budget& budget) {
    std::vector<Tableau> q;
    for_each_Mn(
        n,
        [&](const Tableau& t) {
            if (reducible_entries(t, n).size() == 1) q.push_back(t);
        },
        budget);
    return q;
}

// K_n join-irreducibles in canonical order, tagged with their class.
std::vector<std::pair<Tableau, UClass>> Un_elements(int n) {
    KnStructure S(n);
    std::vector<std::pair<Tableau, UClass>> out;
    for (const auto& t : S.elements())
        if (auto c = S.classify(t)) out.emplace_back(t, *c);
    return out;
}

FinitePoset poset_of(const std::vector<Tableau>& els) {
    std::vector<std::string> labels;
    for (const auto& t : els) labels.push_back(t.compact());
    return FinitePoset::from_relation(
        els.size(), [&](std::size_t x, std::size_t y) { return els[x].leq(els[y]); }, std::move(labels));
}

void require_n(int n, int lo, const std::string& what) {
    if (n < lo) throw DomainError(what + " requires n >= " + std::to_string(lo));
}

int do_count(const Options& o, std::ostream& out) {
    const Budget b = item_budget(o);
    std::uint64_t c = 0;
    if (o.object == "valid") {
        require_n(o.n, 1, "valid");
        c = count_valid(o.n, b);
    } else if (o.object == "Mn") {
        require_n(o.n, 2, "Mn");
        c = for_each_Mn(o.n, [](const Tableau&) {}, b);
    } else if (o.object == "Kn") {
        require_n(o.n, 2, "Kn");
        c = enumerate_Kn_product(o.n).size();
    } else if (o.object == "Pn-ideals") {
        require_n(o.n, 2, "Pn-ideals");
        c = for_each_ideal(build_Pn(o.n), [](const ElementSet&) {}, b);
    } else if (o.object == "Qn") {
        require_n(o.n, 2, "Qn");
        c = join_irreducibles_of_Mn(o.n, b).size();
    }
    out << c << '\n';
    return kOk;
}

// M_n streamed in canonical order; with several jobs each first column is
// rendered by a worker into its own buffer and buffers are flushed in order.
void enumerate_Mn_ordered(const Options& o, bool json, std::ostream& out) {
    const Budget b = item_budget(o);
    b.require(predicted_Mn_size(o.n), "M_n enumeration");
    if (o.jobs <= 1 || o.n < 4) {
        for_each_Mn(o.n, [&](const Tableau& t) { out << render(t, json) << '\n'; }, b);
        return;
    }
    auto firsts = Mn_first_columns(o.n);
    std::vector<std::string> buffers(firsts.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < firsts.size(); i = next++) {
            std::ostringstream buf;
            for_each_Mn(o.n, [&](const Tableau& t) { buf << render(t, json) << '\n'; }, Budget::unlimited(), firsts[i]);
            buffers[i] = buf.str();
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < std::min<std::size_t>(o.jobs, firsts.size()); ++j) pool.emplace_back(worker);
    }
    for (const auto& s : buffers) out << s;
}

int do_enumerate(const Options& o, std::ostream& out) {
    const bool json = o.format == "json";
    const Budget b = item_budget(o);
    auto emit = [&](const std::vector<Tableau>& ts) {
        for (const auto& t : ts) out << render(t, json) << '\n';
    };
    if (o.object == "valid") {
        require_n(o.n, 1, "valid");
        std::vector<TripleSystem> all;
        enumerate_valid(o.n, [&](const TripleSystem& s) { all.push_back(s); }, b);
        std::sort(all.begin(), all.end());
        for (const auto& s : all) {
            if (json) out << to_json(s).dump() << '\n';
            else out << (s.empty() ? "{}" : to_string(s)) << '\n';
        }
    } else if (o.object == "Mn") {
        require_n(o.n, 2, "Mn");
        enumerate_Mn_ordered(o, json, out);
    } else if (o.object == "Kn") {
        require_n(o.n, 2, "Kn");
        emit(enumerate_Kn_product(o.n));
    } else if (o.object == "KnL") {
        require_n(o.n, 2, "KnL");
        emit(enumerate_KnL(o.n));
    } else if (o.object == "KnR1" || o.object == "KnR2") {
        require_n(o.n, 2, o.object);
        emit(enumerate_KnR(o.n, o.object == "KnR1" ? CornerLabel::one : CornerLabel::two));
    } else if (o.object == "Un") {
        require_n(o.n, 2, "Un");
        for (const auto& [t, c] : Un_elements(o.n)) {
            if (json) {
                auto j = to_json(t);
                j["class"] = to_string(c);
                out << j.dump() << '\n';
            } else {
                out << to_string(c) << '\t' << t.compact() << '\n';
            }
        }
    }
    return kOk;
}

int do_verify(const Options& o, std::ostream& out) {
    VerifyOptions vo;
    vo.n_max = o.n_max;
    vo.jobs = o.jobs;
    vo.budget = item_budget(o);
    double secs = o.budget_secs;
    if (secs <= 0) {
        if (const char* env = std::getenv("AP3_BUDGET_SECS")) secs = std::atof(env);
    }
    if (secs > 0)
        vo.budget.deadline = std::chrono::steady_clock::now() +
                             std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(secs));
    Reports reports = verify_all(vo);
    if (o.format == "json") write_report_json_lines(out, reports);
    else write_report_table(out, reports);
    if (any_failed(reports)) return kVerificationFailed;
    if (any_skipped(reports)) return kBudget;
    return kOk;
}

int do_hasse(const Options& o, std::ostream& out) {
    const Budget b = item_budget(o);
    FinitePoset p;
    if (o.poset == "Pn") {
        p = build_Pn(o.n);
    } else if (o.poset == "Phin") {
        p = build_Phin(o.n);
    } else if (o.poset == "Qn") {
        require_n(o.n, 2, "Qn");
        p = poset_of(join_irreducibles_of_Mn(o.n, b));
    } else if (o.poset == "Mn") {
        require_n(o.n, 2, "Mn");
        // Materialized posets are capped at 10^4 elements unless forced.
        Budget cap = b;
        cap.max_items = std::min<std::uint64_t>(cap.max_items, 10'000);
        p = poset_of(enumerate_Mn(o.n, cap));
    } else if (o.poset == "Kn") {
        require_n(o.n, 2, "Kn");
        if (!o.force && g_closed(o.n) > 10'000) throw BudgetExceeded("K_n poset exceeds 10^4 elements; use --force");
        p = poset_of(enumerate_Kn_product(o.n));
    } else if (o.poset == "Un") {
        require_n(o.n, 2, "Un");
        std::vector<Tableau> els;
        for (auto& [t, c] : Un_elements(o.n)) els.push_back(t);
        p = poset_of(els);
    }
    if (o.format == "json") out << to_json(p).dump() << '\n';
    else out << to_dot(p, o.poset + "_" + std::to_string(o.n));
    return kOk;
}

int do_realize(const Options& o, std::ostream& out) {
    TripleSystem s = parse_system(o.triples, o.n);
    auto r = realize(s);
    if (!r) {
        out << "infeasible\n";
        return kOk;
    }
    for (std::size_t t = 0; t < r->x.size(); ++t) out << (t ? " " : "") << r->x[t];
    out << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Valid families of 3-term arithmetic-progression patterns: count, enumerate, verify, export."};
    app.require_subcommand(1);
    app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--force", o.force, "Ignore the predicted-size budget");

    auto* count = app.add_subcommand("count", "Count a family of objects");
    count->add_option("--n", o.n, "Size parameter")->required();
    count->add_option("--object", o.object)->required()->check(CLI::IsMember({"valid", "Mn", "Kn", "Pn-ideals", "Qn"}));

    auto* enumerate = app.add_subcommand("enumerate", "List a family of objects in canonical order");
    enumerate->add_option("--n", o.n, "Size parameter")->required();
    enumerate->add_option("--object", o.object)
        ->required()
        ->check(CLI::IsMember({"valid", "Mn", "Kn", "KnL", "KnR1", "KnR2", "Un"}));
    enumerate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}))->default_val("text");

    auto* verify = app.add_subcommand("verify", "Compare closed forms with enumerations");
    verify->add_option("--n-max", o.n_max, "Largest n to check")->required();
    verify->add_option("--budget", o.budget_secs, "Deadline in seconds; later checks are skipped");
    verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}))->default_val("text");

    auto* hasse = app.add_subcommand("hasse", "Write a Hasse diagram");
    hasse->add_option("--n", o.n, "Size parameter")->required();
    hasse->add_option("--poset", o.poset)->required()->check(CLI::IsMember({"Pn", "Phin", "Qn", "Mn", "Kn", "Un"}));
    hasse->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}))->default_val("dot");

    auto* realize_cmd = app.add_subcommand("realize", "Find integers realizing a set of triples");
    realize_cmd->add_option("--n", o.n, "Size parameter")->required();
    realize_cmd->add_option("--triples", o.triples, "Semicolon-separated triples, e.g. 1,2,3;1,3,4")->required();

    std::vector<std::string> argv_store{"ap3"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (count->parsed()) return do_count(o, out);
        if (enumerate->parsed()) return do_enumerate(o, out);
        if (verify->parsed()) return do_verify(o, out);
        if (hasse->parsed()) return do_hasse(o, out);
        if (realize_cmd->parsed()) return do_realize(o, out);
    } catch (const BudgetExceeded& e) {
        err << "budget: " << e.what() << '\n';
        return kBudget;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace ap3::cli
