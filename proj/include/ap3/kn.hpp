#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ap3/budget.hpp"
#include "ap3/poset.hpp"
#include "ap3/tableau.hpp"

namespace ap3 {

/// Number of columns in the left half of delta_{n-1}: floor((n-1)/2).
inline int left_columns(int n) { return (n - 1) / 2; }
/// Size parameter of the right half: shape delta_{floor(n/2)}.
inline int half_size(int n) { return n / 2; }

/// sum_{b=1}^{n-2} min(b, n-1-b): the most reducible entries an M_n tableau can have.
int reducible_bound(int n);

/// K_n membership from the explicit entry conditions (left-half column
/// profile, diagonal property, right-half gaps). False on the wrong shape.
bool in_Kn(const Tableau& t, int n);

/// K_n membership straight from the definition: t in M_n with
/// reducible_bound(n) reducible entries.
bool in_Kn_by_reducibles(const Tableau& t, int n);

enum class CornerLabel { one = 1, two = 2 };

inline int to_int(CornerLabel c) { return static_cast<int>(c); }

/// Left-half tableaux satisfying the column profile only (the domain of theta).
bool in_An(const Tableau& left, int n);
/// Column profile plus the diagonal property.
bool in_KnL(const Tableau& left, int n);
/// Right-half conditions for corner label c on shape delta_{floor(n/2)}.
bool in_KnR(const Tableau& right, int n, CornerLabel c);

/// Last entry of the first row of a left half (virtual T(1,0) = 1 when the
/// left half is empty). DomainError unless it is 1 or 2.
CornerLabel corner_label(const Tableau& left);

/// Left half (columns 1..floor((n-1)/2)) and right half (remaining columns,
/// re-indexed from 1). DomainError if t is not in K_n.
std::pair<Tableau, Tableau> split(const Tableau& t, int n);
/// Inverse of split. DomainError unless left is in K_n^L and right is in
/// K_n^{R,c} for the left half's corner label c.
Tableau glue(const Tableau& left, const Tableau& right, int n);

/// All of A_n, K_n^L, K_n^{R,c} in canonical order.
std::vector<Tableau> enumerate_An(int n);
std::vector<Tableau> enumerate_KnL(int n);
std::vector<Tableau> enumerate_KnR(int n, CornerLabel c);

/// K_n by gluing compatible halves, sorted canonically.
std::vector<Tableau> enumerate_Kn_product(int n);
/// K_n by filtering M_n through in_Kn; streams in canonical order.
std::uint64_t for_each_Kn_filter(int n, const std::function<void(const Tableau&)>& visit, const Budget& budget = {});

/// even: T'_m with entries 2a+b-1 (minimum of K_{2m}^{R,1});
/// odd:  T_m  with entries 2a+b   (minimum of K_{2m+1}^{R,2}).
enum class RightVariant { even, odd };

Tableau canonical_min_right(int m, RightVariant variant);

/// M_{m+1} -> right halves: entries shifted by a+b-1 (even) or a+b (odd).
Tableau right_iso(const Tableau& t, int m, RightVariant variant);
Tableau right_iso_inverse(const Tableau& t, int m, RightVariant variant);

/// Difference rectangle: floor(n/2) rows, floor((n-1)/2) columns, entries 1 or 2.
Tableau theta1(const Tableau& left, int n);
/// Row indices of the ones in each column, as a tableau of shape delta_{floor(n/2)}.
Tableau theta2(const Tableau& rect, int n);
Tableau theta(const Tableau& left, int n);
bool in_Aprime(const Tableau& rect, int n);

namespace detail {
/// Number of 1s among the first i entries of a column.
int ones_prefix(const std::vector<int>& column, int i);
/// 1-based row index of the a-th 1 of a column, or 0 if there is none.
int row_of_nth_one(const std::vector<int>& column, int a);
}  // namespace detail

enum class UClass { left1, left2, right1, right2 };

const char* to_string(UClass c);

/// Cached halves of K_n with their posets, minima and join-irreducibles;
/// backs classification and the product construction.
class KnStructure {
public:
    explicit KnStructure(int n);

    int n() const { return n_; }
    const std::vector<Tableau>& left() const { return left_; }
    const std::vector<Tableau>& right(CornerLabel c) const { return right_[index(c)]; }
    const FinitePoset& left_poset() const { return left_poset_; }
    const FinitePoset& right_poset(CornerLabel c) const { return right_poset_[index(c)]; }
    const Tableau& left_min() const { return left_[left_min_]; }
    const Tableau& right_min(CornerLabel c) const { return right_[index(c)][right_min_[index(c)]]; }

    bool left_join_irreducible(const Tableau& left) const;
    bool right_join_irreducible(const Tableau& right, CornerLabel c) const;

    /// nullopt when t is not join-irreducible in K_n. DomainError if t is not in K_n.
    std::optional<UClass> classify(const Tableau& t) const;

    /// All elements of K_n (glued), canonical order.
    std::vector<Tableau> elements() const;

private:
    static std::size_t index(CornerLabel c) { return c == CornerLabel::one ? 0 : 1; }

    int n_;
    std::vector<Tableau> left_;
    std::array<std::vector<Tableau>, 2> right_;
    FinitePoset left_poset_;
    std::array<FinitePoset, 2> right_poset_;
    std::size_t left_min_ = 0;
    std::array<std::size_t, 2> right_min_{};
    std::unordered_map<Tableau, std::size_t, TableauHash> left_index_;
    std::array<std::unordered_map<Tableau, std::size_t, TableauHash>, 2> right_index_;
    std::vector<bool> left_ji_;
    std::array<std::vector<bool>, 2> right_ji_;
};

/// Convenience wrapper building a KnStructure for one query.
std::optional<UClass> classify_Un(const Tableau& t, int n);

}  // namespace ap3
