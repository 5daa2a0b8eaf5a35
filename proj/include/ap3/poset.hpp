#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ap3/budget.hpp"
#include "ap3/rank_polynomial.hpp"

namespace ap3 {

using ElementSet = boost::dynamic_bitset<>;
using Cover = std::pair<std::size_t, std::size_t>;  ///< (lower, upper)

/// Explicit finite poset on indices 0..size-1.
///
/// Stores the full order as up-set/down-set bitsets plus the cover relation.
/// Labels are opaque and only used for export.
class FinitePoset {
public:
    FinitePoset() = default;

    /// Builds from an order predicate; validates reflexivity, antisymmetry and
    /// transitivity (DomainError on failure).
    static FinitePoset from_relation(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq,
                                     std::vector<std::string> labels = {});

    /// Builds from a set of (lower, upper) edges whose reflexive-transitive
    /// closure is the order. Redundant edges are dropped; cycles throw.
    static FinitePoset from_covers(std::size_t size, const std::vector<Cover>& edges,
                                   std::vector<std::string> labels = {});

    std::size_t size() const { return up_.size(); }
    bool leq(std::size_t a, std::size_t b) const { return up_[a][b]; }
    bool less(std::size_t a, std::size_t b) const { return a != b && up_[a][b]; }
    bool comparable(std::size_t a, std::size_t b) const { return up_[a][b] || up_[b][a]; }

    const ElementSet& up_set(std::size_t x) const { return up_[x]; }
    const ElementSet& down_set(std::size_t x) const { return down_[x]; }
    const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_[x]; }
    const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_[x]; }

    /// Elements in an order compatible with the poset (lower elements first).
    const std::vector<std::size_t>& linear_extension() const { return order_; }

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(std::size_t x) const;

    std::vector<std::size_t> minimal_elements() const;
    std::vector<std::size_t> maximal_elements() const;

private:
    void finish(std::vector<std::string> labels);

    std::vector<ElementSet> up_, down_;
    std::vector<std::vector<std::size_t>> upper_, lower_;
    std::vector<std::size_t> order_;
    std::vector<std::string> labels_;
};

/// Exact transitive reduction, as (lower, upper) pairs sorted.
std::vector<Cover> covers(const FinitePoset& p);

FinitePoset induced_subposet(const FinitePoset& p, const std::vector<std::size_t>& elements);

/// Down-closed subsets of a fixed base poset.
struct IdealFamily {
    std::shared_ptr<const FinitePoset> base;
    std::vector<ElementSet> ideals;
};

/// Streams every order ideal once (DFS along a linear extension, deciding
/// each element in turn). The visited set is only valid during the callback.
/// Throws BudgetExceeded once more than budget.max_items ideals are produced,
/// unless forced.
std::uint64_t for_each_ideal(const FinitePoset& p, const std::function<void(const ElementSet&)>& visit,
                             const Budget& budget = {});

IdealFamily order_ideals(std::shared_ptr<const FinitePoset> p, const Budget& budget = {});

bool is_ideal(const FinitePoset& p, const ElementSet& s);
bool is_antichain(const FinitePoset& p, const ElementSet& s);

/// Maximal elements of an ideal.
ElementSet ideal_to_antichain(const FinitePoset& p, const ElementSet& ideal);
/// Down-closure of an antichain; DomainError if it contains comparable elements.
ElementSet antichain_to_ideal(const FinitePoset& p, const ElementSet& antichain);

/// Number of ideals covered by `ideal` in J(P), i.e. its number of maximal elements.
std::size_t covered_count(const FinitePoset& p, const ElementSet& ideal);

/// Materializes J(P) ordered by inclusion. Element labels list the ideal's
/// members in braces. `ideals_out`, when given, receives the ideal of each index.
FinitePoset lattice_of_ideals(const FinitePoset& p, const Budget& budget = {},
                              std::vector<ElementSet>* ideals_out = nullptr);

/// Size cap for exhaustive pairwise lattice validation; larger posets are sampled.
inline constexpr std::size_t kExhaustiveLatticeCheck = 10'000;

/// Verifies that every pair has a join and a meet (exhaustive up to
/// kExhaustiveLatticeCheck elements, otherwise `samples` random pairs).
bool is_lattice(const FinitePoset& p, std::size_t samples = 20'000);

/// Indices of elements covering exactly one element. DomainError unless `lattice` is a lattice.
std::vector<std::size_t> join_irreducible_indices(const FinitePoset& lattice);
FinitePoset join_irreducibles(const FinitePoset& lattice);

/// Length of the longest chain ending at each element; nullopt if not graded
/// (some cover does not raise that height by exactly one).
std::optional<std::vector<long long>> height_rank(const FinitePoset& p);

/// coefficient r = #{x : rank(x) = r}; DomainError on a negative rank.
RankPolynomial rank_polynomial(const FinitePoset& p, const std::function<long long(std::size_t)>& rank);

FinitePoset disjoint_sum(const FinitePoset& a, const FinitePoset& b);
/// Componentwise order; element (i, j) has index i * b.size() + j.
FinitePoset direct_product(const FinitePoset& a, const FinitePoset& b);

enum class IsoStatus { isomorphic, not_isomorphic, undecided };

struct IsoResult {
    IsoStatus status = IsoStatus::undecided;
    std::vector<std::size_t> witness;  ///< witness[x] = image of x, when isomorphic
};

/// Backtracking isomorphism search with invariant pruning. Explores at most
/// `node_budget` search nodes, after which the status is `undecided`.
IsoResult are_isomorphic(const FinitePoset& a, const FinitePoset& b, std::uint64_t node_budget = 50'000'000);

/// True iff `map` is a bijection a -> b with x <= y  <=>  map[x] <= map[y].
bool is_order_isomorphism(const FinitePoset& a, const FinitePoset& b, const std::vector<std::size_t>& map);

}  // namespace ap3
