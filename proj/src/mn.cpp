#include "ap3/mn.hpp"

#include <algorithm>

namespace ap3 {

namespace {

void require_staircase(const Tableau& t, int n) {
    if (!(t.shape() == Shape::staircase(n - 1))) throw DomainError("tableau does not have shape delta_{n-1}");
}

long long binom3(long long n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// Column-major cell schedule for delta_{n-1}; each step knows where its left
// and upper neighbours live (or that they are virtual boundary cells).
struct Step {
    int a, b;
    std::size_t off;
    long long left_off;   // -1: virtual T(a,0) = a
    long long above_off;  // -1: virtual T(0,b) = 0
    int upper;            // a + b, forced by the bottom-of-column bound
    bool column_end;
};

std::vector<Step> schedule(int n) {
    Shape sh = Shape::staircase(n - 1);
    std::vector<Step> steps;
    for (int b = 1; b <= n - 2; ++b) {
        int len = n - 1 - b;
        for (int a = 1; a <= len; ++a) {
            steps.push_back(Step{a, b, sh.offset(a, b), b > 1 ? static_cast<long long>(sh.offset(a, b - 1)) : -1,
                                 a > 1 ? static_cast<long long>(sh.offset(a - 1, b)) : -1, a + b, a == len});
        }
    }
    return steps;
}

}  // namespace

Tableau minimal_tableau(int n) {
    if (n < 2) throw DomainError("minimal_tableau requires n >= 2");
    Tableau t(Shape::staircase(n - 1));
    for (int a = 1; a <= t.shape().num_rows(); ++a)
        for (int b = 1; b <= t.shape().row_length(a); ++b) t.set(a, b, a);
    return t;
}

bool in_Mn(const Tableau& t, int n) {
    require_staircase(t, n);
    if (n <= 2) return true;
    if (t(1, 1) < 1) return false;
    for (int b = 1; b <= n - 2; ++b) {
        for (int a = 1; a <= n - 1 - b; ++a) {
            if (b >= 2 && t(a, b) - t(a, b - 1) < 0) return false;
            if (a >= 2 && t(a, b) - t(a - 1, b) < 1) return false;
        }
        if (t(n - 1 - b, b) > n - 1) return false;
    }
    return true;
}

std::vector<Cell> reducible_entries(const Tableau& t, int n) {
    if (!in_Mn(t, n)) throw DomainError("reducible_entries requires a tableau in M_n");
    std::vector<Cell> out;
    for (int b = 1; b <= n - 2; ++b)
        for (int a = 1; a <= n - 1 - b; ++a)
            if (t(a, b) - t(a, b - 1) >= 1 && t(a, b) - t(a - 1, b) >= 2) out.emplace_back(a, b);
    return out;
}

std::vector<Cell> raisable_entries(const Tableau& t, int n) {
    if (!in_Mn(t, n)) throw DomainError("raisable_entries requires a tableau in M_n");
    std::vector<Cell> out;
    const Shape& sh = t.shape();
    for (int b = 1; b <= n - 2; ++b) {
        for (int a = 1; a <= n - 1 - b; ++a) {
            int v = t(a, b) + 1;
            bool ok = true;
            if (sh.contains(a, b + 1)) ok = ok && v <= t(a, b + 1);
            if (sh.contains(a + 1, b)) ok = ok && v < t(a + 1, b);
            else ok = ok && v <= n - 1;
            if (ok) out.emplace_back(a, b);
        }
    }
    return out;
}

Tableau join(const Tableau& x, const Tableau& y, int n) {
    if (!in_Mn(x, n) || !in_Mn(y, n)) throw DomainError("join arguments must lie in M_n");
    return entrywise_max(x, y);
}

Tableau meet(const Tableau& x, const Tableau& y, int n) {
    if (!in_Mn(x, n) || !in_Mn(y, n)) throw DomainError("meet arguments must lie in M_n");
    return entrywise_min(x, y);
}

std::uint64_t predicted_Mn_size(int n) {
    if (n <= 2) return 1;
    long long e = static_cast<long long>(n - 1) * (n - 2) / 2;
    return e >= 64 ? UINT64_MAX : (1ULL << e);
}

std::vector<std::vector<int>> Mn_first_columns(int n) {
    if (n < 2) throw DomainError("M_n requires n >= 2");
    std::vector<std::vector<int>> out;
    if (n == 2) return out;
    const int len = n - 2;
    // Column 1 entries satisfy a <= T_{a,1} <= a + 1 and strictly increase, so
    // the column is 1..j followed by j+2..len+1 for some j in 0..len.
    for (int j = len; j >= 0; --j) {
        std::vector<int> col;
        for (int a = 1; a <= len; ++a) col.push_back(a <= j ? a : a + 1);
        out.push_back(col);
    }
    return out;
}

namespace {

class MnWalker {
public:
    explicit MnWalker(int n) : n_(n), steps_(schedule(n)), t_(Shape::staircase(n - 1), 0) {}

    template <typename Leaf>
    void run(Leaf& leaf, std::size_t start = 0) {
        walk(start, leaf);
    }

    Tableau& tableau() { return t_; }
    const std::vector<Step>& steps() const { return steps_; }

    int lower_bound(const Step& s) const {
        int left = s.left_off < 0 ? s.a : t_.entries()[static_cast<std::size_t>(s.left_off)];
        int above = s.above_off < 0 ? 0 : t_.entries()[static_cast<std::size_t>(s.above_off)];
        return std::max(left, above + 1);
    }

private:
    template <typename Leaf>
    void walk(std::size_t i, Leaf& leaf) {
        if (i == steps_.size()) {
            leaf(t_);
            return;
        }
        const Step& s = steps_[i];
        int& cell = t_.at(s.a, s.b);
        for (int v = lower_bound(s); v <= s.upper; ++v) {
            cell = v;
            walk(i + 1, leaf);
        }
    }

    int n_;
    std::vector<Step> steps_;
    Tableau t_;
};

}  // namespace

std::uint64_t for_each_Mn(int n, const std::function<void(const Tableau&)>& visit, const Budget& budget,
                          const std::optional<std::vector<int>>& first_column) {
    if (n < 2) throw DomainError("M_n requires n >= 2");
    budget.require(predicted_Mn_size(n), "M_n enumeration");
    MnWalker w(n);
    std::uint64_t count = 0;
    auto leaf = [&](const Tableau& t) {
        ++count;
        visit(t);
    };
    if (!first_column) {
        w.run(leaf);
        return count;
    }
    if (static_cast<int>(first_column->size()) != std::max(0, n - 2))
        throw DomainError("first column has the wrong length");
    std::size_t i = 0;
    for (int v : *first_column) {
        const Step& s = w.steps()[i];
        if (v < w.lower_bound(s) || v > s.upper) return 0;
        w.tableau().at(s.a, s.b) = v;
        ++i;
    }
    w.run(leaf, i);
    return count;
}

std::vector<Tableau> enumerate_Mn(int n, const Budget& budget) {
    std::vector<Tableau> out;
    for_each_Mn(n, [&](const Tableau& t) { out.push_back(t); }, budget);
    return out;
}

namespace {

class MnStatsWalker {
public:
    explicit MnStatsWalker(int n) : n_(n), steps_(schedule(n)), vals_(steps_.size() ? Shape::staircase(n - 1).cells() : 0) {
        for (int b = 1; b <= n - 2; ++b) bound_total_ += std::min(b, n - 1 - b);
        long long max_sum = 0;
        for (const auto& s : steps_) max_sum += s.upper;
        base_ = binom3(n);
        hist_.assign(static_cast<std::size_t>(std::max<long long>(max_sum - base_ + 1, 1)), 0);
    }

    MnStatistics run() {
        walk(0, 0, 0, 0);
        MnStatistics st = stats_;
        std::vector<BigInt> coeffs;
        for (auto c : hist_) coeffs.emplace_back(c);
        st.rank_polynomial = RankPolynomial(std::move(coeffs));
        return st;
    }

private:
    void walk(std::size_t i, int reducible, int column_reducible, long long sum) {
        if (i == steps_.size()) {
            ++stats_.count;
            auto r = static_cast<std::uint64_t>(reducible);
            if (r > stats_.max_reducible) {
                stats_.max_reducible = r;
                stats_.at_max = 0;
            }
            if (r == stats_.max_reducible) ++stats_.at_max;
            if (r == 1) ++stats_.join_irreducible;
            if (reducible == bound_total_) ++stats_.at_bound;
            ++hist_[static_cast<std::size_t>(sum - base_)];
            return;
        }
        const Step& s = steps_[i];
        int left = s.left_off < 0 ? s.a : vals_[static_cast<std::size_t>(s.left_off)];
        int above = s.above_off < 0 ? 0 : vals_[static_cast<std::size_t>(s.above_off)];
        for (int v = std::max(left, above + 1); v <= s.upper; ++v) {
            vals_[s.off] = v;
            bool red = v - left >= 1 && v - above >= 2;
            int col = column_reducible + (red ? 1 : 0);
            if (s.column_end) {
                if (col > std::min(s.b, n_ - 1 - s.b)) ++stats_.column_bound_violations;
                walk(i + 1, reducible + (red ? 1 : 0), 0, sum + v);
            } else {
                walk(i + 1, reducible + (red ? 1 : 0), col, sum + v);
            }
        }
    }

    int n_;
    std::vector<Step> steps_;
    std::vector<int> vals_;
    int bound_total_ = 0;
    long long base_ = 0;
    std::vector<std::uint64_t> hist_;
    MnStatistics stats_;
};

}  // namespace

MnStatistics Mn_statistics(int n, const Budget& budget) {
    if (n < 2) throw DomainError("M_n requires n >= 2");
    budget.require(predicted_Mn_size(n), "M_n statistics");
    return MnStatsWalker(n).run();
}

namespace {

// Admissible columns b of delta_{n-1}: length n-1-b, strictly increasing,
// a <= c_a <= a + b.
std::vector<std::vector<int>> column_states(int n, int b) {
    const int len = n - 1 - b;
    std::vector<std::vector<int>> out;
    std::vector<int> col(static_cast<std::size_t>(len));
    std::function<void(int)> rec = [&](int a) {
        if (a > len) {
            out.push_back(col);
            return;
        }
        int lo = std::max(a, a > 1 ? col[static_cast<std::size_t>(a - 2)] + 1 : 1);
        for (int v = lo; v <= a + b; ++v) {
            col[static_cast<std::size_t>(a - 1)] = v;
            rec(a + 1);
        }
    };
    rec(1);
    return out;
}

bool dominates(const std::vector<int>& next, const std::vector<int>& prev) {
    for (std::size_t a = 0; a < next.size(); ++a)
        if (next[a] < prev[a]) return false;
    return true;
}

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
    std::uint64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("M_n transfer count overflows 64 bits");
    return r;
}

}  // namespace

MnSampler::MnSampler(int n) : n_(n) {
    if (n < 2) throw DomainError("M_n requires n >= 2");
    const int cols = n - 2;
    states_.resize(static_cast<std::size_t>(cols) + 1);
    completions_.resize(static_cast<std::size_t>(cols) + 1);
    for (int b = 1; b <= cols; ++b) states_[b] = column_states(n, b);
    for (int b = cols; b >= 1; --b) {
        auto& comp = completions_[b];
        comp.assign(states_[b].size(), 0);
        for (std::size_t s = 0; s < states_[b].size(); ++s) {
            if (b == cols) {
                comp[s] = 1;
                continue;
            }
            for (std::size_t t = 0; t < states_[b + 1].size(); ++t)
                if (dominates(states_[b + 1][t], states_[b][s])) comp[s] = checked_add(comp[s], completions_[b + 1][t]);
        }
    }
    if (cols == 0) {
        total_ = 1;
    } else {
        for (auto c : completions_[1]) total_ = checked_add(total_, c);
    }
}

Tableau MnSampler::draw(const std::function<std::uint64_t(std::uint64_t)>& below) const {
    Tableau t(Shape::staircase(n_ - 1));
    const int cols = n_ - 2;
    const std::vector<int>* prev = nullptr;
    for (int b = 1; b <= cols; ++b) {
        std::uint64_t weight = 0;
        for (std::size_t s = 0; s < states_[b].size(); ++s)
            if (!prev || dominates(states_[b][s], *prev)) weight += completions_[b][s];
        std::uint64_t r = below(weight);
        for (std::size_t s = 0; s < states_[b].size(); ++s) {
            if (prev && !dominates(states_[b][s], *prev)) continue;
            if (r < completions_[b][s]) {
                prev = &states_[b][s];
                break;
            }
            r -= completions_[b][s];
        }
        for (std::size_t a = 0; a < prev->size(); ++a) t.set(static_cast<int>(a) + 1, b, (*prev)[a]);
    }
    return t;
}

std::uint64_t count_Mn_transfer(int n) { return MnSampler(n).total(); }

ReducibleProfile Mn_reducible_profile(int n) {
    if (n < 2) throw DomainError("M_n requires n >= 2");
    const int cols = n - 2;
    if (cols == 0) return {0, 1};
    auto reducible_in = [](const std::vector<int>& col, const std::vector<int>* left) {
        std::uint64_t r = 0;
        for (std::size_t a = 0; a < col.size(); ++a) {
            int west = left ? (*left)[a] : static_cast<int>(a) + 1;
            int north = a == 0 ? 0 : col[a - 1];
            if (col[a] - west >= 1 && col[a] - north >= 2) ++r;
        }
        return r;
    };
    std::vector<std::vector<int>> prev_states = column_states(n, 1);
    std::vector<ReducibleProfile> prev(prev_states.size());
    for (std::size_t s = 0; s < prev_states.size(); ++s) prev[s] = {reducible_in(prev_states[s], nullptr), 1};
    for (int b = 2; b <= cols; ++b) {
        auto states = column_states(n, b);
        std::vector<ReducibleProfile> cur(states.size());
        for (std::size_t s = 0; s < states.size(); ++s) {
            for (std::size_t p = 0; p < prev_states.size(); ++p) {
                if (!dominates(states[s], prev_states[p])) continue;
                std::uint64_t v = prev[p].max_reducible + reducible_in(states[s], &prev_states[p]);
                if (cur[s].at_max == 0 || v > cur[s].max_reducible) cur[s] = {v, prev[p].at_max};
                else if (v == cur[s].max_reducible) cur[s].at_max = checked_add(cur[s].at_max, prev[p].at_max);
            }
        }
        prev_states = std::move(states);
        prev = std::move(cur);
    }
    ReducibleProfile best;
    for (const auto& r : prev) {
        if (r.at_max == 0) continue;
        if (best.at_max == 0 || r.max_reducible > best.max_reducible) best = r;
        else if (r.max_reducible == best.max_reducible) best.at_max = checked_add(best.at_max, r.at_max);
    }
    return best;
}

}  // namespace ap3
