#include "ap3/triples.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "ap3/linear_feasibility.hpp"

namespace ap3 {

Triple::Triple(int i, int j, int k, int n) : i_(i), j_(j), k_(k), n_(n) {
    if (!(1 <= i && i < j && j < k && k <= n))
        throw DomainError("triple must satisfy 1 <= i < j < k <= n");
}

TripleSystem::TripleSystem(int n, std::vector<Triple> triples) : n_(n), triples_(std::move(triples)) {
    for (const auto& t : triples_)
        if (t.n() != n_) throw DomainError("triple ambient size differs from system");
    std::sort(triples_.begin(), triples_.end());
    if (std::adjacent_find(triples_.begin(), triples_.end()) != triples_.end())
        throw DomainError("duplicate triple in system");
}

bool Realization::realizes(const TripleSystem& s) const {
    if (static_cast<int>(x.size()) != s.n()) return false;
    for (std::size_t t = 1; t < x.size(); ++t)
        if (x[t] <= x[t - 1]) return false;
    for (const auto& t : s.triples())
        if (x[t.i() - 1] + x[t.k() - 1] != 2 * x[t.j() - 1]) return false;
    return true;
}

std::vector<Triple> all_triples(int n) {
    std::vector<Triple> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) out.emplace_back(i, j, k, n);
    return out;
}

bool is_consistent(const Triple& a, const Triple& b) {
    if (a.n() != b.n()) throw DomainError("triples over different [n]");
    if (a == b) return true;
    bool below = a.i() <= b.i() && a.j() >= b.j() && a.k() <= b.k();
    bool above = a.i() >= b.i() && a.j() <= b.j() && a.k() >= b.k();
    return !(below || above);
}

std::optional<Realization> realize(const TripleSystem& s) {
    const int n = s.n();
    LinearSystem sys;
    sys.vars = n;
    for (const auto& t : s.triples()) {
        LinearConstraint c{std::vector<Rational>(n, Rational(0)), Rational(0)};
        c.coef[t.i() - 1] += 1;
        c.coef[t.k() - 1] += 1;
        c.coef[t.j() - 1] -= 2;
        sys.equalities.push_back(std::move(c));
    }
    for (int t = 0; t + 1 < n; ++t) {
        LinearConstraint c{std::vector<Rational>(n, Rational(0)), Rational(1)};
        c.coef[t + 1] = 1;
        c.coef[t] = -1;
        sys.lower_bounds.push_back(std::move(c));
    }
    auto sol = solve_feasible(sys);
    if (!sol) return std::nullopt;

    // Clear denominators, then translate so x_1 = 1.
    boost::multiprecision::cpp_int lcm = 1;
    for (const auto& v : *sol) lcm = boost::multiprecision::lcm(lcm, denominator(v));
    std::vector<boost::multiprecision::cpp_int> scaled;
    for (const auto& v : *sol) scaled.push_back(numerator(v) * (lcm / denominator(v)));
    Realization r;
    if (n > 0) {
        auto shift = 1 - scaled[0];
        for (auto& v : scaled) r.x.push_back(static_cast<long long>(v + shift));
    }
    if (!r.realizes(s)) throw std::logic_error("realization witness failed verification");
    return r;
}

bool is_valid(const TripleSystem& s) {
    const auto& ts = s.triples();
    for (std::size_t a = 0; a < ts.size(); ++a)
        for (std::size_t b = a + 1; b < ts.size(); ++b)
            if (!is_consistent(ts[a], ts[b])) return false;
    return true;
}

namespace {

// Valid-subset DFS over triples in lexicographic order; each subset is visited
// once by extending with triples of larger index that are compatible with all
// chosen ones.
class ValidSearch {
public:
    explicit ValidSearch(int n) : n_(n), triples_(all_triples(n)) {
        words_ = (triples_.size() + 63) / 64;
        conflicts_.assign(triples_.size(), std::vector<std::uint64_t>(words_, 0));
        for (std::size_t a = 0; a < triples_.size(); ++a)
            for (std::size_t b = 0; b < triples_.size(); ++b)
                if (!is_consistent(triples_[a], triples_[b])) conflicts_[a][b / 64] |= 1ULL << (b % 64);
    }

    template <typename Visit>
    void run(Visit&& visit) {
        std::vector<std::uint64_t> allowed(words_, ~0ULL);
        std::vector<std::size_t> chosen;
        recurse(0, allowed, chosen, visit);
    }

    const std::vector<Triple>& triples() const { return triples_; }
    int n() const { return n_; }

private:
    template <typename Visit>
    void recurse(std::size_t from, const std::vector<std::uint64_t>& allowed, std::vector<std::size_t>& chosen,
                 Visit& visit) {
        visit(chosen);
        for (std::size_t t = from; t < triples_.size(); ++t) {
            if (!(allowed[t / 64] >> (t % 64) & 1)) continue;
            std::vector<std::uint64_t> next(words_);
            for (std::size_t w = 0; w < words_; ++w) next[w] = allowed[w] & ~conflicts_[t][w];
            chosen.push_back(t);
            recurse(t + 1, next, chosen, visit);
            chosen.pop_back();
        }
    }

    int n_;
    std::vector<Triple> triples_;
    std::size_t words_ = 0;
    std::vector<std::vector<std::uint64_t>> conflicts_;
};

std::uint64_t subset_space(int n) {
    long long c = n < 3 ? 0 : static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
    return c >= 64 ? UINT64_MAX : (1ULL << c);
}

}  // namespace

std::uint64_t enumerate_valid(int n, const std::function<void(const TripleSystem&)>& sink, const Budget& budget) {
    if (n < 1) throw DomainError("enumerate_valid requires n >= 1");
    budget.require(subset_space(n), "valid-subset enumeration");
    ValidSearch search(n);
    std::uint64_t count = 0;
    search.run([&](const std::vector<std::size_t>& chosen) {
        std::vector<Triple> ts;
        ts.reserve(chosen.size());
        for (auto idx : chosen) ts.push_back(search.triples()[idx]);
        sink(TripleSystem(n, std::move(ts)));
        ++count;
    });
    return count;
}

std::uint64_t count_valid(int n, const Budget& budget) {
    if (n < 1) throw DomainError("count_valid requires n >= 1");
    budget.require(subset_space(n), "valid-subset enumeration");
    ValidSearch search(n);
    std::uint64_t count = 0;
    search.run([&](const std::vector<std::size_t>&) { ++count; });
    return count;
}

MaxValidStats max_valid_stats(int n, const Budget& budget) {
    if (n < 1) throw DomainError("max_valid_stats requires n >= 1");
    budget.require(subset_space(n), "valid-subset enumeration");
    ValidSearch search(n);
    MaxValidStats st;
    search.run([&](const std::vector<std::size_t>& chosen) {
        if (chosen.size() > st.sigma) {
            st.sigma = chosen.size();
            st.g = 0;
        }
        if (chosen.size() == st.sigma) ++st.g;
    });
    return st;
}

std::array<int, 3> propp_map(const Triple& t) { return {t.i(), t.n() + 1 - t.j(), t.k()}; }

Triple propp_unmap(const std::array<int, 3>& p, int n) { return Triple(p[0], n + 1 - p[1], p[2], n); }

std::string to_string(const Triple& t) {
    return std::to_string(t.i()) + "," + std::to_string(t.j()) + "," + std::to_string(t.k());
}

std::string to_string(const TripleSystem& s) {
    std::string out;
    for (std::size_t a = 0; a < s.triples().size(); ++a) {
        if (a) out += ';';
        out += to_string(s.triples()[a]);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s) {
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw DomainError("not an integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

Triple parse_triple(std::string_view text, int n) {
    std::array<int, 3> v{};
    std::size_t field = 0;
    while (true) {
        auto comma = text.find(',');
        if (field >= 3) throw DomainError("triple must have exactly three fields");
        v[field++] = parse_int(text.substr(0, comma));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (field != 3) throw DomainError("triple must have exactly three fields");
    return Triple(v[0], v[1], v[2], n);
}

TripleSystem parse_system(std::string_view text, int n) {
    std::vector<Triple> ts;
    text = trim(text);
    while (!text.empty()) {
        auto semi = text.find(';');
        ts.push_back(parse_triple(text.substr(0, semi), n));
        if (semi == std::string_view::npos) break;
        text.remove_prefix(semi + 1);
    }
    return TripleSystem(n, std::move(ts));
}

}  // namespace ap3
