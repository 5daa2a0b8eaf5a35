#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ap3 {

/// Young diagram given by weakly decreasing row lengths (English notation).
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> row_lengths);

    /// delta_m = (m-1, m-2, ..., 1); empty for m <= 1.
    static Shape staircase(int m);
    /// Left half of delta_{n-1} including the middle column: the conjugate of
    /// (n-2, n-3, ..., floor(n/2)).
    static Shape left_half(int n);
    static Shape rectangle(int rows, int cols);

    const std::vector<int>& row_lengths() const { return rows_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int num_cols() const { return rows_.empty() ? 0 : rows_.front(); }
    int row_length(int a) const { return (a >= 1 && a <= num_rows()) ? rows_[a - 1] : 0; }
    int column_length(int b) const;
    bool contains(int a, int b) const { return a >= 1 && b >= 1 && a <= num_rows() && b <= rows_[a - 1]; }
    std::size_t cells() const { return offsets_.empty() ? 0 : offsets_.back(); }
    /// Row-major flat offset of cell (a, b), 1-based.
    std::size_t offset(int a, int b) const { return offsets_[a - 1] + static_cast<std::size_t>(b - 1); }

    bool operator==(const Shape& o) const { return rows_ == o.rows_; }

private:
    std::vector<int> rows_;
    std::vector<std::size_t> offsets_;  // offsets_[a-1] = first cell of row a; back() = total
};

/// Integer filling of a Shape. Entries are indexed (row a, column b) from 1.
///
/// `operator()` also answers the virtual boundary cells T(a,0) = a and
/// T(0,b) = 0, which are never stored.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(Shape shape, int fill = 0);
    Tableau(Shape shape, std::vector<int> entries);

    static Tableau from_rows(const std::vector<std::vector<int>>& rows);

    const Shape& shape() const { return shape_; }
    const std::vector<int>& entries() const { return entries_; }

    int operator()(int a, int b) const {
        if (b == 0) return a;
        if (a == 0) return 0;
        return entries_[shape_.offset(a, b)];
    }
    int& at(int a, int b) { return entries_[shape_.offset(a, b)]; }
    void set(int a, int b, int v) { entries_[shape_.offset(a, b)] = v; }

    std::vector<std::vector<int>> rows() const;
    long long entry_sum() const;

    /// Componentwise order; false for different shapes.
    bool leq(const Tableau& o) const;

    bool operator==(const Tableau& o) const { return shape_ == o.shape_ && entries_ == o.entries_; }
    /// Canonical order: by shape, then entries column by column (top to bottom).
    std::strong_ordering operator<=>(const Tableau& o) const;

    /// Rows joined by '/', entries by ' ', e.g. "1 1/2".
    std::string compact() const;
    /// English notation, one row per line.
    std::string pretty() const;

private:
    Shape shape_;
    std::vector<int> entries_;
};

struct TableauHash {
    std::size_t operator()(const Tableau& t) const noexcept;
};

/// Entrywise maximum / minimum; DomainError on shape mismatch.
Tableau entrywise_max(const Tableau& x, const Tableau& y);
Tableau entrywise_min(const Tableau& x, const Tableau& y);

/// Adds k to every entry (a', b') >= (a, b). DomainError if (a, b) is off shape.
Tableau add(const Tableau& t, int a, int b, int k);

}  // namespace ap3
