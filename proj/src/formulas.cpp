#include "ap3/formulas.hpp"


namespace ap3 {

namespace {

BigInt pow2(long long e) { return BigInt(1) << static_cast<unsigned>(e); }

long long choose2(long long n) { return n * (n - 1) / 2; }

// (1 + q^e)
RankPolynomial one_plus_q(int e) { return RankPolynomial::one() + RankPolynomial::monomial(static_cast<std::size_t>(e)); }

}  // namespace

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt f_closed(int n) {
    if (n < 1) throw DomainError("f(n) requires n >= 1");
    return pow2(choose2(n - 1));
}

BigInt sigma_closed(int n) {
    if (n < 2) throw DomainError("sigma(n) requires n >= 2");
    const long long m = n / 2;
    return n % 2 == 0 ? BigInt(m * (m - 1)) : BigInt(m * m);
}

BigInt g_closed(int n) {
    if (n < 2) throw DomainError("g(n) requires n >= 2");
    const long long m = n / 2;
    if (n % 2 == 1) return pow2(m * (m - 1));
    return pow2((m - 1) * (m - 2)) * (pow2(m) - 1);
}

RankPolynomial F_Mn(int n) {
    if (n < 2) throw DomainError("F(M_n) requires n >= 2");
    RankPolynomial f = RankPolynomial::one();
    for (int i = 1; i <= n - 2; ++i) f = f * one_plus_q(i).pow(static_cast<unsigned>(n - 1 - i));
    return f;
}

RankPolynomial F_Kn(int n) {
    if (n <= 2) throw DomainError("F(K_n) requires n >= 3");
    const int m = n / 2;
    if (n % 2 == 1) {
        RankPolynomial half = F_Mn(m + 1);
        return half * half;
    }
    RankPolynomial prefix = RankPolynomial::one();
    for (int i = 1; i <= m - 1; ++i) prefix = prefix * one_plus_q(i);
    const auto shift = static_cast<std::size_t>(choose2(m));
    RankPolynomial base = F_Mn(m);
    return base * base * (prefix * (RankPolynomial::one() + RankPolynomial::monomial(shift)) - RankPolynomial::monomial(shift));
}

RankPolynomial F_Kn_even_parts(int m) {
    if (m < 2) throw DomainError("even-case decomposition requires m >= 2");
    RankPolynomial big = F_Mn(m + 1), small = F_Mn(m);
    const auto shift = static_cast<std::size_t>(choose2(m));
    return big * small + (big - small) * RankPolynomial::monomial(shift) * small;
}

BigInt count_Qn(int n) {
    if (n < 2) throw DomainError("count_Qn requires n >= 2");
    BigInt s = 0;
    for (int alpha = 1; alpha <= n - 2; ++alpha) s += binomial(alpha + 1, 2);
    return s;
}

}  // namespace ap3
