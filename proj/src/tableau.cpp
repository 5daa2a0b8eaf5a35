#include "ap3/tableau.hpp"

#include <algorithm>

#include "ap3/budget.hpp"

namespace ap3 {

Shape::Shape(std::vector<int> row_lengths) : rows_(std::move(row_lengths)) {
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    for (std::size_t a = 0; a < rows_.size(); ++a) {
        if (rows_[a] < 0) throw DomainError("negative row length");
        if (a > 0 && rows_[a] > rows_[a - 1]) throw DomainError("row lengths must weakly decrease");
    }
    offsets_.assign(rows_.size() + 1, 0);
    for (std::size_t a = 0; a < rows_.size(); ++a) offsets_[a + 1] = offsets_[a] + static_cast<std::size_t>(rows_[a]);
}

Shape Shape::staircase(int m) {
    std::vector<int> rows;
    for (int r = m - 1; r >= 1; --r) rows.push_back(r);
    return Shape(std::move(rows));
}

Shape Shape::left_half(int n) {
    // Columns b = 1..floor((n-1)/2) of delta_{n-1}, column b having n-1-b cells.
    const int cols = (n - 1) / 2;
    std::vector<int> rows;
    for (int a = 1; a <= n - 2; ++a) {
        int len = 0;
        for (int b = 1; b <= cols; ++b)
            if (a <= n - 1 - b) len = b;
        if (len == 0) break;
        rows.push_back(len);
    }
    return Shape(std::move(rows));
}

Shape Shape::rectangle(int rows, int cols) {
    if (rows <= 0 || cols <= 0) return Shape();
    return Shape(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Shape::column_length(int b) const {
    int len = 0;
    while (len < num_rows() && rows_[len] >= b) ++len;
    return b >= 1 ? len : 0;
}

Tableau::Tableau(Shape shape, int fill) : shape_(std::move(shape)), entries_(shape_.cells(), fill) {}

Tableau::Tableau(Shape shape, std::vector<int> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (entries_.size() != shape_.cells()) throw DomainError("entry count does not match shape");
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lengths, flat;
    for (const auto& r : rows) {
        lengths.push_back(static_cast<int>(r.size()));
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return Tableau(Shape(std::move(lengths)), std::move(flat));
}

std::vector<std::vector<int>> Tableau::rows() const {
    std::vector<std::vector<int>> out;
    for (int a = 1; a <= shape_.num_rows(); ++a) {
        auto first = entries_.begin() + static_cast<std::ptrdiff_t>(shape_.offset(a, 1));
        out.emplace_back(first, first + shape_.row_length(a));
    }
    return out;
}

long long Tableau::entry_sum() const {
    long long s = 0;
    for (int v : entries_) s += v;
    return s;
}

bool Tableau::leq(const Tableau& o) const {
    if (!(shape_ == o.shape_)) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > o.entries_[i]) return false;
    return true;
}

std::strong_ordering Tableau::operator<=>(const Tableau& o) const {
    if (auto c = shape_.row_lengths() <=> o.shape_.row_lengths(); c != 0) return c;
    for (int b = 1; b <= shape_.num_cols(); ++b) {
        for (int a = 1; a <= shape_.column_length(b); ++a) {
            if (auto c = (*this)(a, b) <=> o(a, b); c != 0) return c;
        }
    }
    return std::strong_ordering::equal;
}

std::string Tableau::compact() const {
    std::string out;
    for (int a = 1; a <= shape_.num_rows(); ++a) {
        if (a > 1) out += '/';
        for (int b = 1; b <= shape_.row_length(a); ++b) {
            if (b > 1) out += ' ';
            out += std::to_string((*this)(a, b));
        }
    }
    return out;
}

std::string Tableau::pretty() const {
    std::string out;
    for (int a = 1; a <= shape_.num_rows(); ++a) {
        for (int b = 1; b <= shape_.row_length(a); ++b) {
            if (b > 1) out += ' ';
            out += std::to_string((*this)(a, b));
        }
        out += '\n';
    }
    return out;
}

std::size_t TableauHash::operator()(const Tableau& t) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : t.shape().row_lengths()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    for (int v : t.entries()) h = (h ^ static_cast<std::size_t>(v + 0x9e37)) * 1099511628211ULL;
    return h;
}

Tableau entrywise_max(const Tableau& x, const Tableau& y) {
    if (!(x.shape() == y.shape())) throw DomainError("join of tableaux with different shapes");
    std::vector<int> e(x.entries().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(x.entries()[i], y.entries()[i]);
    return Tableau(x.shape(), std::move(e));
}

Tableau entrywise_min(const Tableau& x, const Tableau& y) {
    if (!(x.shape() == y.shape())) throw DomainError("meet of tableaux with different shapes");
    std::vector<int> e(x.entries().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(x.entries()[i], y.entries()[i]);
    return Tableau(x.shape(), std::move(e));
}

Tableau add(const Tableau& t, int a, int b, int k) {
    if (!t.shape().contains(a, b)) throw DomainError("add: cell off shape");
    Tableau out = t;
    for (int r = a; r <= t.shape().num_rows(); ++r)
        for (int c = b; c <= t.shape().row_length(r); ++c) out.at(r, c) += k;
    return out;
}

}  // namespace ap3
