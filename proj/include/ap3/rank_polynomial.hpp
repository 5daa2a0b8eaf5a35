#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ap3 {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in q with nonnegative integer coefficients; coefficient of q^r
/// at position r, no trailing zeros. The zero polynomial has no coefficients.
class RankPolynomial {
public:
    RankPolynomial() = default;
    RankPolynomial(std::initializer_list<long long> coeffs);
    explicit RankPolynomial(std::vector<BigInt> coeffs);

    static RankPolynomial one() { return RankPolynomial{1}; }
    static RankPolynomial monomial(std::size_t degree, BigInt coeff = 1);

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(std::size_t r) const { return r < coeffs_.size() ? coeffs_[r] : BigInt(0); }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

    BigInt at_one() const;

    void add_term(std::size_t degree, const BigInt& coeff = 1);

    RankPolynomial operator+(const RankPolynomial& o) const;
    /// DomainError if any coefficient would become negative.
    RankPolynomial operator-(const RankPolynomial& o) const;
    RankPolynomial operator*(const RankPolynomial& o) const;
    RankPolynomial pow(unsigned e) const;

    bool operator==(const RankPolynomial&) const = default;

    /// e.g. "1 + 2q + 2q^2"
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

}  // namespace ap3
