#include "ap3/rank_polynomial.hpp"

#include "ap3/budget.hpp"

namespace ap3 {

RankPolynomial::RankPolynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) {
        if (c < 0) throw DomainError("rank polynomial coefficients must be nonnegative");
        coeffs_.emplace_back(c);
    }
    trim();
}

RankPolynomial::RankPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c < 0) throw DomainError("rank polynomial coefficients must be nonnegative");
    trim();
}

RankPolynomial RankPolynomial::monomial(std::size_t degree, BigInt coeff) {
    RankPolynomial p;
    p.add_term(degree, coeff);
    return p;
}

void RankPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt RankPolynomial::at_one() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

void RankPolynomial::add_term(std::size_t degree, const BigInt& coeff) {
    if (coeff < 0) throw DomainError("rank polynomial coefficients must be nonnegative");
    if (coeffs_.size() <= degree) coeffs_.resize(degree + 1, BigInt(0));
    coeffs_[degree] += coeff;
    trim();
}

RankPolynomial RankPolynomial::operator+(const RankPolynomial& o) const {
    RankPolynomial r = *this;
    if (r.coeffs_.size() < o.coeffs_.size()) r.coeffs_.resize(o.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

RankPolynomial RankPolynomial::operator-(const RankPolynomial& o) const {
    RankPolynomial r = *this;
    if (r.coeffs_.size() < o.coeffs_.size()) r.coeffs_.resize(o.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        r.coeffs_[i] -= o.coeffs_[i];
        if (r.coeffs_[i] < 0) throw DomainError("rank polynomial subtraction went negative");
    }
    r.trim();
    return r;
}

RankPolynomial RankPolynomial::operator*(const RankPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return RankPolynomial(std::move(out));
}

RankPolynomial RankPolynomial::pow(unsigned e) const {
    RankPolynomial r = one();
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string RankPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
        if (coeffs_[r] == 0) continue;
        if (!out.empty()) out += " + ";
        bool unit = coeffs_[r] == 1;
        if (r == 0) {
            out += coeffs_[r].str();
        } else {
            if (!unit) out += coeffs_[r].str();
            out += "q";
            if (r > 1) out += "^" + std::to_string(r);
        }
    }
    return out;
}

}  // namespace ap3
