#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "ap3/poset.hpp"
#include "ap3/tableau.hpp"

namespace ap3 {

/// Point (i, j, k) of [n]^3 with i + j < n+1 < j + k.
struct PnElement {
    int i, j, k;
    auto operator<=>(const PnElement&) const = default;
};

/// Triple (a, b, k) with 1 <= k <= b <= n-1-a.
struct PhiElement {
    int a, b, k;
    auto operator<=>(const PhiElement&) const = default;
};

bool is_Pn_element(const PnElement& e, int n);
bool is_Phin_element(const PhiElement& e, int n);

/// Elements in lexicographic order of their coordinates (the poset indices).
std::vector<PnElement> Pn_elements(int n);
std::vector<PhiElement> Phin_elements(int n);

/// Componentwise order on P_n.
bool Pn_leq(const PnElement& x, const PnElement& y);
/// (a,b,k) <= (a',b',k') iff a >= a', b >= b', k <= k'.
bool Phin_leq(const PhiElement& x, const PhiElement& y);

FinitePoset build_Pn(int n);
FinitePoset build_Phin(int n);

/// (a, b, k) -> (k, n-b, n+1-a). DomainError if e is not in Phi_n.
PnElement phi(const PhiElement& e, int n);
/// (i, j, l) -> (n+1-l, n-j, i). DomainError if e is not in P_n.
PhiElement phi_inverse(const PnElement& e, int n);

/// Add(T^0_{n-1}; a, b, k), a join-irreducible of M_n.
Tableau psi(const PhiElement& e, int n);

/// True iff (a, b) is the only reducible entry of t in M_n.
bool has_unique_reducible_at(const Tableau& t, int n, int a, int b);

std::string to_string(const PnElement& e);
std::string to_string(const PhiElement& e);

}  // namespace ap3
