#include "ap3/pn_posets.hpp"

#include "ap3/mn.hpp"

namespace ap3 {

bool is_Pn_element(const PnElement& e, int n) {
    auto in = [n](int v) { return 1 <= v && v <= n; };
    return in(e.i) && in(e.j) && in(e.k) && e.i + e.j < n + 1 && n + 1 < e.j + e.k;
}

bool is_Phin_element(const PhiElement& e, int n) {
    return e.a >= 1 && 1 <= e.k && e.k <= e.b && e.b <= n - 1 - e.a;
}

std::vector<PnElement> Pn_elements(int n) {
    std::vector<PnElement> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (is_Pn_element({i, j, k}, n)) out.push_back({i, j, k});
    return out;
}

std::vector<PhiElement> Phin_elements(int n) {
    std::vector<PhiElement> out;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int k = 1; k <= n; ++k)
                if (is_Phin_element({a, b, k}, n)) out.push_back({a, b, k});
    return out;
}

bool Pn_leq(const PnElement& x, const PnElement& y) { return x.i <= y.i && x.j <= y.j && x.k <= y.k; }

bool Phin_leq(const PhiElement& x, const PhiElement& y) { return x.a >= y.a && x.b >= y.b && x.k <= y.k; }

FinitePoset build_Pn(int n) {
    if (n < 2) throw DomainError("P_n requires n >= 2");
    auto els = Pn_elements(n);
    std::vector<std::string> labels;
    for (const auto& e : els) labels.push_back(to_string(e));
    return FinitePoset::from_relation(
        els.size(), [&](std::size_t x, std::size_t y) { return Pn_leq(els[x], els[y]); }, std::move(labels));
}

FinitePoset build_Phin(int n) {
    if (n < 2) throw DomainError("Phi_n requires n >= 2");
    auto els = Phin_elements(n);
    std::vector<std::string> labels;
    for (const auto& e : els) labels.push_back(to_string(e));
    return FinitePoset::from_relation(
        els.size(), [&](std::size_t x, std::size_t y) { return Phin_leq(els[x], els[y]); }, std::move(labels));
}

PnElement phi(const PhiElement& e, int n) {
    if (!is_Phin_element(e, n)) throw DomainError("phi: argument not in Phi_n");
    return {e.k, n - e.b, n + 1 - e.a};
}

PhiElement phi_inverse(const PnElement& e, int n) {
    if (!is_Pn_element(e, n)) throw DomainError("phi_inverse: argument not in P_n");
    return {n + 1 - e.k, n - e.j, e.i};
}

Tableau psi(const PhiElement& e, int n) {
    if (!is_Phin_element(e, n)) throw DomainError("psi: argument not in Phi_n");
    return add(minimal_tableau(n), e.a, e.b, e.k);
}

bool has_unique_reducible_at(const Tableau& t, int n, int a, int b) {
    auto red = reducible_entries(t, n);
    return red.size() == 1 && red.front() == Cell{a, b};
}

std::string to_string(const PnElement& e) {
    return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.k) + ")";
}

std::string to_string(const PhiElement& e) {
    return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + "," + std::to_string(e.k) + ")";
}

}  // namespace ap3
