#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ap3/budget.hpp"
#include "ap3/rank_polynomial.hpp"
#include "ap3/tableau.hpp"

namespace ap3 {

/// The minimum of M_n: shape delta_{n-1}, (a,b)-entry a.
Tableau minimal_tableau(int n);

/// Membership in M_n: T_{1,1} >= 1, rows weakly increase, columns strictly
/// increase, last entry of column b at most n-1. DomainError on wrong shape.
bool in_Mn(const Tableau& t, int n);

using Cell = std::pair<int, int>;  ///< (row a, column b)

/// Cells whose entry can be lowered by one while staying in M_n:
/// T_{a,b} - T_{a,b-1} >= 1 and T_{a,b} - T_{a-1,b} >= 2 under the virtual
/// boundary. DomainError if t is not in M_n.
std::vector<Cell> reducible_entries(const Tableau& t, int n);

/// Cells whose entry can be raised by one while staying in M_n.
std::vector<Cell> raisable_entries(const Tableau& t, int n);

/// Join / meet in M_n; DomainError on shape mismatch or arguments outside M_n.
Tableau join(const Tableau& x, const Tableau& y, int n);
Tableau meet(const Tableau& x, const Tableau& y, int n);

/// Possible first columns of an M_n tableau, in canonical order. Used to
/// partition enumeration across workers.
std::vector<std::vector<int>> Mn_first_columns(int n);

/// Streams M_n in canonical order (lexicographic in the column-major entry sequence), filling column
/// by column inside the entry intervals implied by the membership conditions.
/// With `first_column`, only tableaux with that first column are produced.
/// Refuses when 2^C(n-1,2) exceeds the budget unless forced.
std::uint64_t for_each_Mn(int n, const std::function<void(const Tableau&)>& visit, const Budget& budget = {},
                          const std::optional<std::vector<int>>& first_column = std::nullopt);

std::vector<Tableau> enumerate_Mn(int n, const Budget& budget = {});

/// Predicted |M_n| = 2^C(n-1,2), saturating at UINT64_MAX.
std::uint64_t predicted_Mn_size(int n);

struct MnStatistics {
    std::uint64_t count = 0;
    std::uint64_t max_reducible = 0;
    std::uint64_t at_max = 0;             ///< tableaux attaining max_reducible
    std::uint64_t join_irreducible = 0;   ///< tableaux with exactly one reducible entry
    std::uint64_t at_bound = 0;           ///< tableaux with sum_b min(b, n-1-b) reducible entries
    std::uint64_t column_bound_violations = 0;
    RankPolynomial rank_polynomial;       ///< rank = entry sum - C(n,3)
};

/// Single pass over M_n collecting reducible-entry statistics and the rank
/// polynomial, tracking reducibility incrementally as cells are filled.
MnStatistics Mn_statistics(int n, const Budget& budget = {});

/// |M_n| by a column transfer matrix (counts completions per column state);
/// independent of the enumerator.
std::uint64_t count_Mn_transfer(int n);

/// Maximum number of reducible entries over M_n and how many tableaux attain
/// it, by dynamic programming over adjacent column pairs (reducibility of a
/// cell depends only on its own column and the one to its left).
struct ReducibleProfile {
    std::uint64_t max_reducible = 0;
    std::uint64_t at_max = 0;
};
ReducibleProfile Mn_reducible_profile(int n);

/// Uniform random element of M_n via the transfer-matrix counts.
class MnSampler {
public:
    explicit MnSampler(int n);
    template <typename Rng>
    Tableau sample(Rng& rng) const {
        return draw([&](std::uint64_t bound) {
            return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
        });
    }
    std::uint64_t total() const { return total_; }

private:
    Tableau draw(const std::function<std::uint64_t(std::uint64_t)>& below) const;

    int n_;
    std::vector<std::vector<std::vector<int>>> states_;      // per column b, all admissible columns
    std::vector<std::vector<std::uint64_t>> completions_;    // completions_[b][s]
    std::uint64_t total_ = 0;
};

}  // namespace ap3
