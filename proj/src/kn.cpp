#include "ap3/kn.hpp"

#include <algorithm>

#include "ap3/mn.hpp"

namespace ap3 {

int reducible_bound(int n) {
    int s = 0;
    for (int b = 1; b <= n - 2; ++b) s += std::min(b, n - 1 - b);
    return s;
}

namespace {

// Column profile on columns 1..m of a tableau whose column b has n-1-b cells:
// a plateau T(a,b) = a for a <= m-b, then floor(n/2) steps of 1 or 2 with
// exactly b steps of 2.
bool column_profile_ok(const Tableau& t, int n) {
    const int m = left_columns(n);
    for (int b = 1; b <= m; ++b) {
        for (int a = 1; a <= m - b; ++a)
            if (t(a, b) != a) return false;
        int twos = 0;
        for (int a = m - b + 1; a <= n - 1 - b; ++a) {
            int d = t(a, b) - t(a - 1, b);
            if (d == 2) ++twos;
            else if (d != 1) return false;
        }
        if (twos != b) return false;
    }
    return true;
}

bool diagonal_ok(const Tableau& t, int n) {
    const int m = left_columns(n);
    for (int b = 1; b <= m - 1; ++b)
        for (int a = m - b + 1; a <= n - 1 - b; ++a)
            if (t(a, b) - t(a - 1, b + 1) > 1) return false;
    return true;
}

}  // namespace

bool in_Kn(const Tableau& t, int n) {
    if (n < 2 || !(t.shape() == Shape::staircase(n - 1))) return false;
    if (!column_profile_ok(t, n) || !diagonal_ok(t, n)) return false;
    for (int b = left_columns(n) + 1; b <= n - 2; ++b) {
        for (int a = 1; a <= n - 1 - b; ++a) {
            if (t(a, b) > n - 1) return false;
            if (t(a, b) - t(a - 1, b) < 2) return false;
            if (t(a, b) - t(a, b - 1) < 1) return false;
        }
    }
    return true;
}

bool in_Kn_by_reducibles(const Tableau& t, int n) {
    if (n < 2 || !(t.shape() == Shape::staircase(n - 1)) || !in_Mn(t, n)) return false;
    return static_cast<int>(reducible_entries(t, n).size()) == reducible_bound(n);
}

bool in_An(const Tableau& left, int n) {
    return n >= 2 && left.shape() == Shape::left_half(n) && column_profile_ok(left, n);
}

bool in_KnL(const Tableau& left, int n) { return in_An(left, n) && diagonal_ok(left, n); }

bool in_KnR(const Tableau& t, int n, CornerLabel c) {
    const int h = half_size(n);
    if (n < 2 || !(t.shape() == Shape::staircase(h))) return false;
    if (h <= 1) return true;
    if (t(1, 1) < to_int(c) + 1) return false;
    for (int b = 2; b <= h - 1; ++b)
        for (int a = 1; a <= h - b; ++a)
            if (t(a, b) - t(a, b - 1) < 1) return false;
    for (int a = 2; a <= h - 1; ++a)
        for (int b = 1; b <= h - a; ++b)
            if (t(a, b) - t(a - 1, b) < 2) return false;
    for (int b = 1; b <= h - 1; ++b)
        if (t(h - b, b) > n - 1) return false;
    return true;
}

CornerLabel corner_label(const Tableau& left) {
    int v = left(1, left.shape().row_length(1));
    if (v == 1) return CornerLabel::one;
    if (v == 2) return CornerLabel::two;
    throw DomainError("corner entry of a left half must be 1 or 2");
}

std::pair<Tableau, Tableau> split(const Tableau& t, int n) {
    if (!in_Kn(t, n)) throw DomainError("split requires a tableau in K_n");
    const int m = left_columns(n);
    Tableau left(Shape::left_half(n)), right(Shape::staircase(half_size(n)));
    for (int a = 1; a <= t.shape().num_rows(); ++a) {
        for (int b = 1; b <= t.shape().row_length(a); ++b) {
            if (b <= m) left.set(a, b, t(a, b));
            else right.set(a, b - m, t(a, b));
        }
    }
    return {std::move(left), std::move(right)};
}

Tableau glue(const Tableau& left, const Tableau& right, int n) {
    if (!in_KnL(left, n)) throw DomainError("glue: left half is not in K_n^L");
    CornerLabel c = corner_label(left);
    if (!in_KnR(right, n, c)) throw DomainError("glue: right half does not match the left half's corner label");
    const int m = left_columns(n);
    Tableau t(Shape::staircase(n - 1));
    for (int a = 1; a <= t.shape().num_rows(); ++a)
        for (int b = 1; b <= t.shape().row_length(a); ++b) t.set(a, b, b <= m ? left(a, b) : right(a, b - m));
    return t;
}

std::vector<Tableau> enumerate_An(int n) {
    if (n < 2) throw DomainError("A_n requires n >= 2");
    const int m = left_columns(n), h = half_size(n);
    std::vector<Tableau> out;
    Tableau t(Shape::left_half(n));
    // Column b: choose which of its h stepped cells rise by 2.
    std::function<void(int)> column = [&](int b) {
        if (b > m) {
            out.push_back(t);
            return;
        }
        for (int a = 1; a <= m - b; ++a) t.set(a, b, a);
        for (unsigned mask = 0; mask < (1u << h); ++mask) {
            if (__builtin_popcount(mask) != b) continue;
            int prev = m - b;
            for (int s = 0; s < h; ++s) {
                prev += (mask >> s & 1) ? 2 : 1;
                t.set(m - b + 1 + s, b, prev);
            }
            column(b + 1);
        }
    };
    column(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tableau> enumerate_KnL(int n) {
    auto all = enumerate_An(n);
    std::vector<Tableau> out;
    for (auto& t : all)
        if (diagonal_ok(t, n)) out.push_back(std::move(t));
    return out;
}

std::vector<Tableau> enumerate_KnR(int n, CornerLabel c) {
    if (n < 2) throw DomainError("K_n^R requires n >= 2");
    const int h = half_size(n);
    Shape sh = Shape::staircase(h);
    std::vector<Tableau> out;
    Tableau t(sh);
    std::vector<std::pair<int, int>> cells;
    for (int b = 1; b <= h - 1; ++b)
        for (int a = 1; a <= h - b; ++a) cells.emplace_back(a, b);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            if (in_KnR(t, n, c)) out.push_back(t);
            return;
        }
        auto [a, b] = cells[i];
        int lo = (a == 1 && b == 1) ? to_int(c) + 1 : 1;
        if (b >= 2) lo = std::max(lo, t(a, b - 1) + 1);
        if (a >= 2) lo = std::max(lo, t(a - 1, b) + 2);
        // Room for the cells below in this column, each at least 2 larger.
        int hi = n - 1 - 2 * (h - b - a);
        for (int v = lo; v <= hi; ++v) {
            t.set(a, b, v);
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tableau> enumerate_Kn_product(int n) {
    std::vector<Tableau> out;
    auto lefts = enumerate_KnL(n);
    std::array<std::vector<Tableau>, 2> rights{enumerate_KnR(n, CornerLabel::one), enumerate_KnR(n, CornerLabel::two)};
    for (const auto& l : lefts) {
        CornerLabel c = corner_label(l);
        for (const auto& r : rights[c == CornerLabel::one ? 0 : 1]) out.push_back(glue(l, r, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t for_each_Kn_filter(int n, const std::function<void(const Tableau&)>& visit, const Budget& budget) {
    std::uint64_t count = 0;
    for_each_Mn(
        n,
        [&](const Tableau& t) {
            if (in_Kn(t, n)) {
                ++count;
                visit(t);
            }
        },
        budget);
    return count;
}

Tableau canonical_min_right(int m, RightVariant variant) {
    if (m < 1) throw DomainError("canonical_min_right requires m >= 1");
    Tableau t(Shape::staircase(m));
    const int shift = variant == RightVariant::even ? -1 : 0;
    for (int a = 1; a <= t.shape().num_rows(); ++a)
        for (int b = 1; b <= t.shape().row_length(a); ++b) t.set(a, b, 2 * a + b + shift);
    return t;
}

Tableau right_iso(const Tableau& t, int m, RightVariant variant) {
    if (!in_Mn(t, m + 1)) throw DomainError("right_iso requires a tableau in M_{m+1}");
    Tableau out = t;
    const int shift = variant == RightVariant::even ? -1 : 0;
    for (int a = 1; a <= t.shape().num_rows(); ++a)
        for (int b = 1; b <= t.shape().row_length(a); ++b) out.set(a, b, t(a, b) + a + b + shift);
    return out;
}

Tableau right_iso_inverse(const Tableau& t, int m, RightVariant variant) {
    if (!(t.shape() == Shape::staircase(m))) throw DomainError("right_iso_inverse: wrong shape");
    Tableau out = t;
    const int shift = variant == RightVariant::even ? -1 : 0;
    for (int a = 1; a <= t.shape().num_rows(); ++a)
        for (int b = 1; b <= t.shape().row_length(a); ++b) out.set(a, b, t(a, b) - a - b - shift);
    return out;
}

namespace detail {

int ones_prefix(const std::vector<int>& column, int i) {
    int c = 0;
    for (int r = 0; r < i && r < static_cast<int>(column.size()); ++r)
        if (column[static_cast<std::size_t>(r)] == 1) ++c;
    return c;
}

int row_of_nth_one(const std::vector<int>& column, int a) {
    int seen = 0;
    for (std::size_t r = 0; r < column.size(); ++r)
        if (column[r] == 1 && ++seen == a) return static_cast<int>(r) + 1;
    return 0;
}

}  // namespace detail

bool in_Aprime(const Tableau& rect, int n) {
    const int m = left_columns(n), h = half_size(n);
    if (!(rect.shape() == Shape::rectangle(h, m))) return false;
    for (int b = 1; b <= m; ++b) {
        int twos = 0;
        for (int a = 1; a <= h; ++a) {
            int v = rect(a, b);
            if (v != 1 && v != 2) return false;
            if (v == 2) ++twos;
        }
        if (twos != b) return false;
    }
    return true;
}

Tableau theta1(const Tableau& left, int n) {
    if (!in_An(left, n)) throw DomainError("theta1 requires a tableau in A_n");
    const int m = left_columns(n), h = half_size(n);
    Tableau rect(Shape::rectangle(h, m));
    for (int b = 1; b <= m; ++b)
        for (int s = 1; s <= h; ++s) {
            int a = m - b + s;
            rect.set(s, b, left(a, b) - left(a - 1, b));
        }
    return rect;
}

Tableau theta2(const Tableau& rect, int n) {
    if (!in_Aprime(rect, n)) throw DomainError("theta2 requires a tableau in A'_n");
    const int m = left_columns(n), h = half_size(n);
    Tableau out(Shape::staircase(h));
    for (int b = 1; b <= std::min(m, h - 1); ++b) {
        std::vector<int> col;
        for (int a = 1; a <= h; ++a) col.push_back(rect(a, b));
        for (int a = 1; a <= h - b; ++a) out.set(a, b, detail::row_of_nth_one(col, a));
    }
    return out;
}

Tableau theta(const Tableau& left, int n) { return theta2(theta1(left, n), n); }

const char* to_string(UClass c) {
    switch (c) {
        case UClass::left1: return "left1";
        case UClass::left2: return "left2";
        case UClass::right1: return "right1";
        case UClass::right2: return "right2";
    }
    return "?";
}

namespace {

std::size_t unique_minimum(const FinitePoset& p) {
    auto mins = p.minimal_elements();
    if (mins.size() != 1) throw std::logic_error("half poset lacks a unique minimum");
    return mins.front();
}

FinitePoset tableau_poset(const std::vector<Tableau>& els) {
    std::vector<std::string> labels;
    for (const auto& t : els) labels.push_back(t.compact());
    return FinitePoset::from_relation(
        els.size(), [&](std::size_t x, std::size_t y) { return els[x].leq(els[y]); }, std::move(labels));
}

std::vector<bool> ji_flags(const FinitePoset& p) {
    std::vector<bool> flags(p.size(), false);
    for (auto x : join_irreducible_indices(p)) flags[x] = true;
    return flags;
}

}  // namespace

KnStructure::KnStructure(int n) : n_(n) {
    if (n < 2) throw DomainError("K_n requires n >= 2");
    left_ = enumerate_KnL(n);
    right_[0] = enumerate_KnR(n, CornerLabel::one);
    right_[1] = enumerate_KnR(n, CornerLabel::two);
    left_poset_ = tableau_poset(left_);
    left_min_ = unique_minimum(left_poset_);
    left_ji_ = ji_flags(left_poset_);
    for (std::size_t x = 0; x < left_.size(); ++x) left_index_.emplace(left_[x], x);
    for (std::size_t c = 0; c < 2; ++c) {
        right_poset_[c] = tableau_poset(right_[c]);
        right_min_[c] = unique_minimum(right_poset_[c]);
        right_ji_[c] = ji_flags(right_poset_[c]);
        for (std::size_t x = 0; x < right_[c].size(); ++x) right_index_[c].emplace(right_[c][x], x);
    }
}

bool KnStructure::left_join_irreducible(const Tableau& left) const {
    auto it = left_index_.find(left);
    if (it == left_index_.end()) throw DomainError("not an element of K_n^L");
    return left_ji_[it->second];
}

bool KnStructure::right_join_irreducible(const Tableau& right, CornerLabel c) const {
    auto it = right_index_[index(c)].find(right);
    if (it == right_index_[index(c)].end()) throw DomainError("not an element of K_n^{R,c}");
    return right_ji_[index(c)][it->second];
}

std::optional<UClass> KnStructure::classify(const Tableau& t) const {
    auto [l, r] = split(t, n_);
    CornerLabel c = corner_label(l);
    if (left_join_irreducible(l) && r == right_min(c))
        return c == CornerLabel::one ? UClass::left1 : UClass::left2;
    if (l == left_min() && right_join_irreducible(r, c)) {
        if (half_size(n_) >= 2 && r.leq(canonical_min_right(half_size(n_), RightVariant::odd))) return UClass::right2;
        return UClass::right1;
    }
    return std::nullopt;
}

std::vector<Tableau> KnStructure::elements() const {
    std::vector<Tableau> out;
    for (const auto& l : left_) {
        for (const auto& r : right_[index(corner_label(l))]) out.push_back(glue(l, r, n_));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<UClass> classify_Un(const Tableau& t, int n) { return KnStructure(n).classify(t); }

}  // namespace ap3
