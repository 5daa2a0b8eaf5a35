#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ap3/budget.hpp"

namespace ap3 {

/// Index pattern i < j < k inside [n], naming the positions of a 3-term AP.
class Triple {
public:
    Triple(int i, int j, int k, int n);

    int i() const { return i_; }
    int j() const { return j_; }
    int k() const { return k_; }
    int n() const { return n_; }

    auto operator<=>(const Triple&) const = default;
    bool operator==(const Triple&) const = default;

private:
    int i_, j_, k_, n_;
};

/// A set of triples over a common [n], stored sorted lexicographically.
class TripleSystem {
public:
    explicit TripleSystem(int n) : n_(n) {}
    TripleSystem(int n, std::vector<Triple> triples);

    int n() const { return n_; }
    const std::vector<Triple>& triples() const { return triples_; }
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    bool operator==(const TripleSystem&) const = default;
    auto operator<=>(const TripleSystem&) const = default;

private:
    int n_;
    std::vector<Triple> triples_;
};

/// Strictly increasing integer sequence x_1 < ... < x_n.
struct Realization {
    std::vector<long long> x;

    /// True iff x is strictly increasing and every triple of `s` is an AP in x.
    bool realizes(const TripleSystem& s) const;
};

/// All of C([n],3) in lexicographic order.
std::vector<Triple> all_triples(int n);

/// Pairwise consistency by the coordinate-dominance criterion.
/// Identical triples are consistent; mismatched n throws DomainError.
bool is_consistent(const Triple& t1, const Triple& t2);

/// Solves the rational system {x_i + x_k = 2 x_j, x_{t+1} - x_t >= 1} exactly
/// and returns an integer witness, or nullopt if infeasible.
std::optional<Realization> realize(const TripleSystem& s);

bool is_valid(const TripleSystem& s);

/// Streams every valid subset of C([n],3) in canonical order (sorted
/// lexicographically as sequences of triples). Returns the count.
///
/// Refuses n with 2^C(n,3) above the budget unless forced.
std::uint64_t enumerate_valid(int n, const std::function<void(const TripleSystem&)>& sink,
                              const Budget& budget = {});

/// Number of valid subsets, using the same DFS without materializing sets.
std::uint64_t count_valid(int n, const Budget& budget = {});

struct MaxValidStats {
    std::uint64_t sigma = 0;  ///< largest valid subset size
    std::uint64_t g = 0;      ///< number of valid subsets of that size
    bool operator==(const MaxValidStats&) const = default;
};

MaxValidStats max_valid_stats(int n, const Budget& budget = {});

/// (i, j, k) -> (i, n+1-j, k); the image is an element of P_n.
std::array<int, 3> propp_map(const Triple& t);
Triple propp_unmap(const std::array<int, 3>& p, int n);

std::string to_string(const Triple& t);
std::string to_string(const TripleSystem& s);
Triple parse_triple(std::string_view text, int n);
TripleSystem parse_system(std::string_view text, int n);

}  // namespace ap3
