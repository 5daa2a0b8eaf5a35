#pragma once

#include "ap3/budget.hpp"
#include "ap3/rank_polynomial.hpp"

namespace ap3 {

/// Number of valid subsets of ([n] choose 3): 2^C(n-1,2). DomainError for n < 1.
BigInt f_closed(int n);

/// Largest size of a valid subset: m(m-1) for n = 2m, m^2 for n = 2m+1.
/// DomainError for n < 2.
BigInt sigma_closed(int n);

/// Number of valid subsets of maximal size:
/// 2^{(m-1)(m-2)} (2^m - 1) for n = 2m, 2^{m(m-1)} for n = 2m+1.
BigInt g_closed(int n);

/// Rank-generating function of M_n: prod_{i=1}^{n-2} (1+q^i)^{n-1-i}.
RankPolynomial F_Mn(int n);

/// Rank-generating function of K_n (minimum at rank 0). Odd n = 2m+1 gives
/// F(M_{m+1})^2; even n = 2m gives
/// F(M_m)^2 * ((1+q)(1+q^2)...(1+q^{m-1}) (1 + q^C(m,2)) - q^C(m,2)).
/// DomainError for n <= 2.
RankPolynomial F_Kn(int n);

/// Even case assembled from its two halves: order ideals of the
/// join-irreducibles avoiding the "left, corner 2" block, plus those meeting it:
/// F(M_{m+1})F(M_m) + (F(M_{m+1}) - F(M_m)) q^C(m,2) F(M_m).
RankPolynomial F_Kn_even_parts(int m);

/// Number of join-irreducibles of M_n: sum_{alpha=1}^{n-2} C(alpha+1, 2).
BigInt count_Qn(int n);

/// Binomial coefficient C(n, k) (0 outside 0 <= k <= n).
BigInt binomial(int n, int k);

}  // namespace ap3
